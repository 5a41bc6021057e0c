//! K-theory of 1-graph algebras and of their crossed products by `ℤ`.
//!
//! `K_0(C*(E)) = coker(1 − M^t)`, `K_1(C*(E)) = ker(1 − M^t)` where
//! `M(v,w) = |{e : r(e) = v, s(e) = w}|`, and the action induces
//! `α_*(δ_v) = δ_{α⁻¹(v)}`. The crossed product is computed either through
//! the induced maps on these groups or through orbit matrices.

mod group;
mod matrix;
mod snf;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

pub use group::{cokernel, FGAbelianGroup, GroupHom, Presentation};
pub use matrix::{Matrix, Scalar};
pub use snf::{kernel_basis, smith_normal_form, solve, SmithForm};

use crate::actions::Action;
use crate::error::{Error, Result};
use crate::skeleton::KGraph;

pub use crate::{AbelianGroup, IntMatrix, IntSmithForm};

/// `ker M` as a free group, lifted by a basis.
pub fn kernel_group<T: Scalar>(m: &Matrix<T>) -> FGAbelianGroup<T> {
    let basis = kernel_basis(m);
    FGAbelianGroup {
        free_rank: basis.cols(),
        torsion: vec![],
        lift: basis,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KGroups {
    #[serde(rename = "K0")]
    pub k0: AbelianGroup,
    #[serde(rename = "K1")]
    pub k1: AbelianGroup,
}

fn require_rank_one(g: &KGraph) -> Result<()> {
    if g.k() != 1 {
        return Err(Error::BadParameter(format!(
            "K-theory is implemented for 1-graphs, got k = {}",
            g.k()
        )));
    }
    Ok(())
}

fn require_single_generator(a: &Action) -> Result<()> {
    if a.l() != 1 {
        return Err(Error::BadParameter(format!(
            "crossed-product K-theory needs l = 1, got l = {}",
            a.l()
        )));
    }
    Ok(())
}

fn require_no_sources(g: &KGraph) -> Result<()> {
    if !g.flags().row_finite {
        return Err(Error::BadParameter("graph is not row-finite".into()));
    }
    match (0..g.vertex_count()).find(|&v| g.edges_into(v, 0).is_empty()) {
        Some(v) => Err(Error::NoSources(g.vertex_id(v).to_string())),
        None => Ok(()),
    }
}

pub fn adjacency(g: &KGraph) -> IntMatrix {
    let n = g.vertex_count();
    let mut m = IntMatrix::zeros(n, n);
    for e in 0..g.edge_count() {
        m[(g.edge_range(e), g.edge_source(e))] += 1;
    }
    m
}

/// `(M_E, P_α)`, checking `P_α M_E^t = M_E^t P_α`.
pub fn adjacency_and_action(g: &KGraph, a: &Action) -> Result<(IntMatrix, IntMatrix)> {
    require_rank_one(g)?;
    require_single_generator(a)?;
    let m = adjacency(g);
    let gen = a.generator(0);
    let n = g.vertex_count();
    let mut p = IntMatrix::zeros(n, n);
    for u in 0..n {
        p[(u, gen.vertex[u])] = BigInt::from(1);
    }
    let mt = m.transpose();
    if p.mul(&mt) != mt.mul(&p) {
        return Err(Error::Internal("α_* does not commute with M^t".into()));
    }
    Ok((m, p))
}

fn one_minus(m: &IntMatrix) -> IntMatrix {
    IntMatrix::identity(m.rows()).sub(m)
}

pub fn graph_k_groups(g: &KGraph) -> Result<KGroups> {
    require_rank_one(g)?;
    require_no_sources(g)?;
    let r = one_minus(&adjacency(g).transpose());
    Ok(KGroups {
        k0: cokernel(&r),
        k1: kernel_group(&r),
    })
}

fn inapplicable(base: &KGroups) -> Error {
    Error::Inapplicable(format!(
        "both K-groups of the base are nontrivial (K0 = {}, K1 = {})",
        base.k0, base.k1
    ))
}

/// Crossed-product K-groups from the induced maps: `coker` and `ker` of
/// `1 − α̃_*` on `K_0` when `K_1 = 0`, or of `1 − α_*|` on `K_1` when
/// `K_0 = 0`. When both vanish the first case applies.
pub fn crossed_k_groups_pv(g: &KGraph, a: &Action) -> Result<KGroups> {
    let base = graph_k_groups(g)?;
    let (_, p) = adjacency_and_action(g, a)?;
    let r = one_minus(&adjacency(g).transpose());
    if base.k1.is_trivial() {
        let pres = Presentation::new(r);
        let alpha = GroupHom::new(pres.clone(), pres.clone(), p)?;
        let f = GroupHom::identity(pres).minus(&alpha)?;
        return Ok(KGroups {
            k0: f.cokernel(),
            k1: f.kernel(),
        });
    }
    if base.k0.is_trivial() {
        let basis = kernel_basis(&r);
        let restricted = solve(&basis, &p.mul(&basis))
            .ok_or_else(|| Error::Internal("α_* does not preserve ker(1 − M^t)".into()))?;
        let pres = Presentation::free(basis.cols());
        let alpha = GroupHom::new(pres.clone(), pres.clone(), restricted)?;
        let f = GroupHom::identity(pres).minus(&alpha)?;
        return Ok(KGroups {
            k0: f.kernel(),
            k1: f.cokernel(),
        });
    }
    Err(inapplicable(&base))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitMatrices {
    /// Vertex orbits, each sorted, ordered by least vertex index.
    pub orbits: Vec<Vec<usize>>,
    /// `A_{C1,C2} = |C1 E¹ C2| / |C1|`.
    pub a: IntMatrix,
    /// `B_{C1,C2} = |C1 E¹ C2| / |C2|`.
    pub b: IntMatrix,
}

pub fn orbit_matrices(g: &KGraph, a: &Action) -> Result<OrbitMatrices> {
    require_rank_one(g)?;
    require_single_generator(a)?;
    let orbits = a.vertex_orbits(g.vertex_count());
    let mut which = vec![0; g.vertex_count()];
    for (i, c) in orbits.iter().enumerate() {
        for &v in c {
            which[v] = i;
        }
    }
    let n = orbits.len();
    // from_vertex[v][j] = |v E¹ C_j|, into_vertex[w][i] = |C_i E¹ w|.
    let mut from_vertex = vec![vec![0u64; n]; g.vertex_count()];
    let mut into_vertex = vec![vec![0u64; n]; g.vertex_count()];
    for e in 0..g.edge_count() {
        let (r, s) = (g.edge_range(e), g.edge_source(e));
        from_vertex[r][which[s]] += 1;
        into_vertex[s][which[r]] += 1;
    }
    let mut am = IntMatrix::zeros(n, n);
    let mut bm = IntMatrix::zeros(n, n);
    for (i, c1) in orbits.iter().enumerate() {
        for (j, c2) in orbits.iter().enumerate() {
            let total: u64 = c1.iter().map(|&v| from_vertex[v][j]).sum();
            let (s1, s2) = (c1.len() as u64, c2.len() as u64);
            if total % s1 != 0 || total % s2 != 0 {
                return Err(Error::Internal(format!("orbit edge count {total} is not divisible")));
            }
            let per_range: BTreeSet<u64> = c1.iter().map(|&v| from_vertex[v][j]).collect();
            let per_source: BTreeSet<u64> = c2.iter().map(|&w| into_vertex[w][i]).collect();
            if per_range != BTreeSet::from([total / s1]) || per_source != BTreeSet::from([total / s2]) {
                return Err(Error::Internal("orbit matrix depends on the representative".into()));
            }
            am[(i, j)] = BigInt::from(total / s1);
            bm[(i, j)] = BigInt::from(total / s2);
        }
    }
    Ok(OrbitMatrices { orbits, a: am, b: bm })
}

/// Crossed-product K-groups from orbit matrices: `(coker(1−A^t),
/// coker(1−B^t))` when `K_1(C*(E)) = 0`, `(ker(1−B^t), ker(1−A^t))` when
/// `K_0(C*(E)) = 0`.
pub fn crossed_k_groups_orbits(g: &KGraph, a: &Action) -> Result<KGroups> {
    let base = graph_k_groups(g)?;
    let om = orbit_matrices(g, a)?;
    let ra = one_minus(&om.a.transpose());
    let rb = one_minus(&om.b.transpose());
    if base.k1.is_trivial() {
        return Ok(KGroups {
            k0: cokernel(&ra),
            k1: cokernel(&rb),
        });
    }
    if base.k0.is_trivial() {
        return Ok(KGroups {
            k0: kernel_group(&rb),
            k1: kernel_group(&ra),
        });
    }
    Err(inapplicable(&base))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Pv,
    Orbits,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KTheoryReport {
    #[serde(flatten)]
    pub groups: KGroups,
    pub method: String,
}

/// K-groups of `C*(E)` when `action` is `None`, else of the crossed product.
pub fn k_theory(g: &KGraph, action: Option<&Action>, method: Method) -> Result<KTheoryReport> {
    let Some(a) = action else {
        return Ok(KTheoryReport {
            groups: graph_k_groups(g)?,
            method: "graph".into(),
        });
    };
    let (groups, label) = match method {
        Method::Pv => (crossed_k_groups_pv(g, a)?, "pv"),
        Method::Orbits => (crossed_k_groups_orbits(g, a)?, "orbits"),
        Method::Both => {
            let pv = crossed_k_groups_pv(g, a)?;
            let orb = crossed_k_groups_orbits(g, a)?;
            if pv != orb {
                return Err(Error::Internal(format!(
                    "methods disagree: pv gives ({}, {}), orbits give ({}, {})",
                    pv.k0, pv.k1, orb.k0, orb.k1
                )));
            }
            (pv, "both-agree")
        }
    };
    Ok(KTheoryReport {
        groups,
        method: label.into(),
    })
}

#[cfg(test)]
mod tests;
