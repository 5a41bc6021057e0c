//! Minimal common extensions, exhaustive sets and structural flags.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::skeleton::{Degree, KGraph, Path};

/// One minimal common extension `λ = μξ = νη`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MceEntry {
    pub lambda: Path,
    pub xi: Path,
    pub eta: Path,
}

/// `Λ^min(μ, ν)`, sorted by `λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MceSet {
    pub pairs: Vec<MceEntry>,
}

impl MceSet {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// The extensions `λ` alone.
    pub fn extensions(&self) -> Vec<&Path> {
        self.pairs.iter().map(|p| &p.lambda).collect()
    }
}

/// `MCE(μ, ν)` by enumerating `s(μ)Λ^{(d(μ)∨d(ν)) − d(μ)}`.
///
/// Paths with different ranges have no common extension.
pub fn mce(g: &KGraph, mu: &Path, nu: &Path) -> Result<MceSet> {
    if !g.owns(mu) || !g.owns(nu) {
        return Err(Error::SkeletonMismatch);
    }
    let mut out = MceSet::default();
    if mu.range() != nu.range() {
        return Ok(out);
    }
    let join = mu.degree().join(nu.degree());
    let rest = join.checked_sub(mu.degree()).expect("join dominates");
    let d_nu = nu.degree().clone();
    for xi in g.enumerate_paths(mu.source(), &rest)? {
        let lambda = g.compose(mu, &xi)?;
        let (head, eta) = g.factorize(&lambda, &d_nu)?;
        if &head == nu {
            out.pairs.push(MceEntry { lambda, xi, eta });
        }
    }
    out.pairs.sort();
    Ok(out)
}

/// `MCE(μ, ν)` by scanning every path of degree `d(μ)∨d(ν)` at `r(μ)`.
pub fn mce_by_enumeration(g: &KGraph, mu: &Path, nu: &Path) -> Result<Vec<Path>> {
    if mu.range() != nu.range() {
        return Ok(Vec::new());
    }
    let join = mu.degree().join(nu.degree());
    let mut out = Vec::new();
    for lambda in g.enumerate_paths(mu.range(), &join)? {
        if &g.factorize(&lambda, mu.degree())?.0 == mu && &g.factorize(&lambda, nu.degree())?.0 == nu {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// Whether `F ⊆ vΛ` is exhaustive: every `μ ∈ vΛ` has a common extension
/// with some member of `F`.
///
/// Quantifies over `μ` of degree at most the join of `F` plus `(1,…,1)`.
pub fn is_exhaustive(g: &KGraph, v: usize, f: &[Path]) -> Result<bool> {
    let mut bound = Degree::zero(g.k());
    for p in f {
        bound = bound.join(p.degree());
    }
    let bound = &bound + &Degree::splat(g.k(), 1);
    is_exhaustive_up_to(g, v, f, &bound)
}

/// [`is_exhaustive`] with an explicit degree bound on the tested `μ`.
pub fn is_exhaustive_up_to(g: &KGraph, v: usize, f: &[Path], bound: &Degree) -> Result<bool> {
    for p in f {
        if p.range() != v {
            return Err(Error::RangeMismatch {
                expected: g.vertex_id(v).to_string(),
                found: g.vertex_id(p.range()).to_string(),
            });
        }
    }
    for mu in g.paths_up_to(v, bound)? {
        let mut hit = false;
        for nu in f {
            if !mce(g, &mu, nu)?.is_empty() {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphFlags {
    pub finitely_aligned: bool,
    pub row_finite: bool,
    pub no_sources: bool,
    pub no_sinks: bool,
}

/// Finiteness and source/sink flags from per-vertex, per-colour edge counts.
pub fn structural_flags(g: &KGraph) -> GraphFlags {
    let f = g.flags();
    GraphFlags {
        finitely_aligned: true,
        row_finite: f.row_finite,
        no_sources: f.no_sources,
        no_sinks: f.no_sinks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeleton::{EdgeSpec, Skeleton, Square};

    fn o2() -> KGraph {
        KGraph::new(&Skeleton {
            k: 1,
            vertices: vec!["v".into()],
            edges: vec![EdgeSpec::new("f1", 1, "v", "v"), EdgeSpec::new("f2", 1, "v", "v")],
            squares: vec![],
        })
        .unwrap()
    }

    fn swap_crossed() -> KGraph {
        KGraph::new(&Skeleton {
            k: 2,
            vertices: vec!["v".into()],
            edges: vec![
                EdgeSpec::new("f1", 1, "v", "v"),
                EdgeSpec::new("f2", 1, "v", "v"),
                EdgeSpec::new("r", 2, "v", "v"),
            ],
            squares: vec![
                Square::new(["f1", "r"], ["r", "f2"]),
                Square::new(["f2", "r"], ["r", "f1"]),
            ],
        })
        .unwrap()
    }

    #[test]
    fn mce_of_path_with_itself() {
        let g = swap_crossed();
        let p = g.path_from_ids(&["f1", "r"]).unwrap();
        let m = mce(&g, &p, &p).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.pairs[0].lambda, p);
        assert!(m.pairs[0].xi.is_vertex() && m.pairs[0].eta.is_vertex());
    }

    #[test]
    fn distinct_loops_have_no_extension() {
        let g = o2();
        let a = g.path_from_ids(&["f1"]).unwrap();
        let b = g.path_from_ids(&["f2"]).unwrap();
        assert!(mce(&g, &a, &b).unwrap().is_empty());
    }

    #[test]
    fn blue_and_red_meet_once() {
        let g = swap_crossed();
        let a = g.path_from_ids(&["f1"]).unwrap();
        let b = g.path_from_ids(&["r"]).unwrap();
        let m = mce(&g, &a, &b).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.pairs[0].lambda.degree(), &Degree::new(vec![1, 1]));
        let brute = mce_by_enumeration(&g, &a, &b).unwrap();
        assert_eq!(m.extensions(), brute.iter().collect::<Vec<_>>());
    }

    #[test]
    fn k1_mce_is_prefix_relation() {
        let g = o2();
        let all = g.paths_up_to(0, &Degree::new(vec![3])).unwrap();
        for a in &all {
            for b in &all {
                let m = mce(&g, a, b).unwrap();
                let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
                let prefix = long.word().starts_with(short.word());
                assert_eq!(!m.is_empty(), prefix);
                assert!(m.len() <= 1);
                if prefix {
                    assert_eq!(&m.pairs[0].lambda, long);
                }
            }
        }
    }

    #[test]
    fn extensions_have_both_prefixes_and_symmetry() {
        let g = swap_crossed();
        let all = g.paths_up_to(0, &Degree::new(vec![2, 1])).unwrap();
        for a in &all {
            for b in &all {
                let m = mce(&g, a, b).unwrap();
                let back = mce(&g, b, a).unwrap();
                assert_eq!(m.extensions(), back.extensions());
                for e in &m.pairs {
                    assert_eq!(&g.segment(&e.lambda, &Degree::zero(2), a.degree()).unwrap(), a);
                    assert_eq!(&g.segment(&e.lambda, &Degree::zero(2), b.degree()).unwrap(), b);
                    assert_eq!(g.compose(a, &e.xi).unwrap(), e.lambda);
                    assert_eq!(g.compose(b, &e.eta).unwrap(), e.lambda);
                }
            }
        }
    }

    #[test]
    fn exhaustive_sets() {
        let g = o2();
        let level = g.enumerate_paths(0, &Degree::new(vec![2])).unwrap();
        assert!(is_exhaustive(&g, 0, &level).unwrap());
        assert!(!is_exhaustive(&g, 0, &[]).unwrap());
        assert!(!is_exhaustive(&g, 0, &level[..3]).unwrap());

        let g = swap_crossed();
        let red = vec![g.path_from_ids(&["r"]).unwrap()];
        assert!(is_exhaustive(&g, 0, &red).unwrap());
        assert!(is_exhaustive_up_to(&g, 0, &red, &Degree::new(vec![3, 3])).unwrap());
    }

    #[test]
    fn flags_of_loops() {
        let f = structural_flags(&o2());
        assert!(f.finitely_aligned && f.row_finite && f.no_sources && f.no_sinks);
    }
}
