//! Crossed products by `ℤ^l`, their recognition, skew products, cartesian
//! products with lattice windows, and the Takai isomorphism on windows.

mod crossed;
mod product;
mod recognize;
mod skew;
mod takai;

pub use crossed::{
    crossed_product, crossed_product_of, designated_edge_id, mce_relationship_check, CrossedProduct, EdgeOrigin,
    RelationshipReport,
};
pub use product::{cartesian_product, lattice_edge_id, lattice_window, tag, window_points};
pub use recognize::{recognize, recognize_partial, PartialRecognition, Recognition};
pub use skew::{canonical_cocycle, skew_product, tagged_id, Cocycle, SkewProduct};
pub use takai::{takai_check, takai_check_with, TakaiReport};
