//! Higher-rank graphs given by finite skeletons: path calculus, `ℤ^l`
//! actions, crossed-product and skew-product graphs, simplicity
//! diagnostics, and integer K-theory of the associated algebras.

pub mod actions;
pub mod alignment;
pub mod constructions;
pub mod dynamics;
pub mod error;
pub mod gallery;
pub mod ktheory;
pub mod skeleton;

pub use actions::{action_order, validate_action, Action, Automorphism, ZlAction};
pub use alignment::{mce, structural_flags, GraphFlags, MceSet};
pub use constructions::{
    crossed_product, crossed_product_of, recognize, skew_product, takai_check, Cocycle, CrossedProduct, TakaiReport,
};
pub use dynamics::{alpha_aperiodic_bounded, alpha_cofinal, simplicity, Aperiodicity, SimplicityReport, Verdict};
pub use error::{Error, Result};
pub use ktheory::{FGAbelianGroup, KGroups, KTheoryReport, Matrix, Scalar, SmithForm};
pub use skeleton::{validate_skeleton, Degree, KGraph, Path, Skeleton, ValidationReport};

/// Integer matrices over arbitrary-precision integers.
pub type IntMatrix = ktheory::Matrix<num_bigint::BigInt>;
/// Smith forms over arbitrary-precision integers.
pub type IntSmithForm = ktheory::SmithForm<num_bigint::BigInt>;
/// Finitely generated abelian groups over arbitrary-precision integers.
pub type AbelianGroup = ktheory::FGAbelianGroup<num_bigint::BigInt>;
