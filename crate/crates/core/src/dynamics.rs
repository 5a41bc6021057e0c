//! Simplicity diagnostics for `C*(Λ) ⋊ ℤ^l`: α-cofinality (exact),
//! α-aperiodicity (bounded search), and the same questions asked of the
//! crossed-product graph or phrased for the shift action on `Λ^∞`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::actions::Action;
use crate::constructions::crossed_product;
use crate::error::{Error, Result};
use crate::skeleton::{Degree, KGraph, Path};

pub const DEFAULT_PAIR_BOUND: u32 = 3;
pub const DEFAULT_DEPTH: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CofinalityWitness {
    /// The vertex `v` whose orbit cannot be reached.
    pub vertex: String,
    /// A nonempty set of vertices supporting an infinite path that avoids it.
    pub avoiding: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cofinality {
    pub cofinal: bool,
    pub witness: Option<CofinalityWitness>,
}

fn require_no_sources(g: &KGraph) -> Result<()> {
    if g.flags().no_sources {
        return Ok(());
    }
    let v = (0..g.vertex_count())
        .find(|&v| (0..g.k()).any(|c| g.edges_into(v, c).is_empty()))
        .unwrap_or(0);
    Err(Error::NoSources(g.vertex_id(v).to_string()))
}

/// Vertices `w` with `uΛw ≠ ∅` for some `u ∈ from`.
fn downstream(g: &KGraph, from: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut seen = from.clone();
    let mut stack: Vec<usize> = from.iter().copied().collect();
    while let Some(u) = stack.pop() {
        for c in 0..g.k() {
            for &e in g.edges_into(u, c) {
                let w = g.edge_source(e);
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    seen
}

/// For each vertex, the vertex sets `{λ(p) : p ≤ (1,…,1)}` of its paths
/// of degree `(1,…,1)`.
fn unit_cubes(g: &KGraph) -> Result<Vec<Vec<BTreeSet<usize>>>> {
    let one = Degree::splat(g.k(), 1);
    let corners = one.box_below();
    (0..g.vertex_count())
        .map(|w| {
            g.enumerate_paths(w, &one)?
                .iter()
                .map(|lam| {
                    corners
                        .iter()
                        .map(|p| Ok(g.factorize(lam, p)?.0.source()))
                        .collect::<Result<BTreeSet<usize>>>()
                })
                .collect()
        })
        .collect()
}

/// Exact α-cofinality: for every `v`, no infinite path avoids
/// `R(v) = {w : α_a(v)Λα_b(w) ≠ ∅ for some a, b}`.
///
/// The complement of `R(v)` is closed upwards along paths, so an avoiding
/// path exists iff the greatest set `S` outside `R(v)` in which every vertex
/// has a `(1,…,1)`-path with all corners in `S` is nonempty.
pub fn alpha_cofinal(g: &KGraph, a: &Action) -> Result<Cofinality> {
    require_no_sources(g)?;
    let n = g.vertex_count();
    let cubes = unit_cubes(g)?;
    let orbit_of: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| {
            if a.l() == 0 {
                BTreeSet::from([v])
            } else {
                a.vertex_orbit(v)
            }
        })
        .collect();
    let mut done = BTreeSet::new();
    for v in 0..n {
        let key: Vec<usize> = orbit_of[v].iter().copied().collect();
        if !done.insert(key) {
            continue;
        }
        let reach = downstream(g, &orbit_of[v]);
        let mut s: BTreeSet<usize> = (0..n).filter(|w| orbit_of[*w].is_disjoint(&reach)).collect();
        loop {
            let next: BTreeSet<usize> = s
                .iter()
                .copied()
                .filter(|&w| cubes[w].iter().any(|corners| corners.is_subset(&s)))
                .collect();
            if next == s {
                break;
            }
            s = next;
        }
        if !s.is_empty() {
            return Ok(Cofinality {
                cofinal: false,
                witness: Some(CofinalityWitness {
                    vertex: g.vertex_id(v).to_string(),
                    avoiding: s.iter().map(|&w| g.vertex_id(w).to_string()).collect(),
                }),
            });
        }
    }
    Ok(Cofinality {
        cofinal: true,
        witness: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatingWitness {
    pub vertex: String,
    pub p: Vec<u32>,
    pub q: Vec<u32>,
    pub depth: u32,
    /// A prefix `λ` of an infinite path `x` with `σ^p x ≠ σ^q x`.
    pub prefix: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum Aperiodicity {
    AperiodicWitnessed {
        witnesses: Vec<SeparatingWitness>,
    },
    /// `σ^p(α^∞_{−m}(x)) = σ^q(α^∞_{−n}(x))` for every `x ∈ vΛ^∞` that
    /// was examined. `exact` when this is a proof rather than agreement up
    /// to `depth`.
    PeriodicPairFound {
        vertex: String,
        first: (Vec<u32>, Vec<i64>),
        second: (Vec<u32>, Vec<i64>),
        depth: u32,
        exact: bool,
    },
    UndecidedAtDepth {
        depth: u32,
    },
}

impl Aperiodicity {
    pub fn label(&self) -> &'static str {
        match self {
            Aperiodicity::AperiodicWitnessed { .. } => "aperiodic",
            Aperiodicity::PeriodicPairFound { .. } => "periodic",
            Aperiodicity::UndecidedAtDepth { .. } => "undecided",
        }
    }
}

enum Search {
    Found(SeparatingWitness),
    /// No disagreement; the flag says whether the compared overlap was a
    /// nonempty path rather than a single vertex.
    Agree(bool),
}

/// Look for `λ ∈ v_Λ^{d·1}`, `d ≤ depth`, with `λ(p, p+b) ≠ λ(q, q+b)` for
/// `b = d·1 − p∨q`. Depths increase and paths are scanned in order, so the
/// first witness does not depend on `depth` once it is found.
fn separate(g: &KGraph, v: usize, p: &Degree, q: &Degree, depth: u32) -> Result<Search> {
    let top = p.join(q);
    let start = top.coords().iter().copied().max().unwrap_or(0);
    let mut nondegenerate = false;
    for d in start..=depth {
        let full = Degree::splat(g.k(), d);
        let b = full.checked_sub(&top).expect("d dominates p∨q");
        nondegenerate |= !b.is_zero();
        let (pe, qe) = (p + &b, q + &b);
        for lam in g.enumerate_paths(v, &full)? {
            if g.segment(&lam, p, &pe)? != g.segment(&lam, q, &qe)? {
                return Ok(Search::Found(SeparatingWitness {
                    vertex: g.vertex_id(v).to_string(),
                    p: p.coords().to_vec(),
                    q: q.coords().to_vec(),
                    depth: d,
                    prefix: lam.word().iter().map(|&e| g.edge_id(e).to_string()).collect(),
                }));
            }
        }
    }
    Ok(Search::Agree(nondegenerate))
}

fn pairs(k: usize, bound: u32) -> Vec<(Degree, Degree)> {
    let all = Degree::splat(k, bound).box_below();
    let mut out = Vec::new();
    for (i, p) in all.iter().enumerate() {
        for q in &all[i + 1..] {
            out.push((p.clone(), q.clone()));
        }
    }
    out
}

/// Whether `vΛ^∞` is a single path: every vertex below `v` receives exactly
/// one edge of each colour.
fn deterministic(g: &KGraph, v: usize) -> bool {
    downstream(g, &BTreeSet::from([v]))
        .iter()
        .all(|&w| (0..g.k()).all(|c| g.edges_into(w, c).len() == 1))
}

/// Bounded search for local periodicity of `Λ` itself (`l = 0`).
fn aperiodic_l0(g: &KGraph, pair_bound: u32, depth: u32) -> Result<Aperiodicity> {
    let mut witnesses = Vec::new();
    let mut undecided = false;
    for v in 0..g.vertex_count() {
        for (p, q) in pairs(g.k(), pair_bound) {
            match separate(g, v, &p, &q, depth)? {
                Search::Found(w) => witnesses.push(w),
                Search::Agree(true) => {
                    return Ok(Aperiodicity::PeriodicPairFound {
                        vertex: g.vertex_id(v).to_string(),
                        first: (p.coords().to_vec(), vec![]),
                        second: (q.coords().to_vec(), vec![]),
                        depth,
                        exact: false,
                    })
                }
                Search::Agree(false) => undecided = true,
            }
        }
    }
    if undecided {
        return Ok(Aperiodicity::UndecidedAtDepth { depth });
    }
    Ok(Aperiodicity::AperiodicWitnessed { witnesses })
}

/// α-aperiodicity up to pair bound `B` and depth `D`.
///
/// For `l ≥ 1` on a finite graph `α_{N e_1}` is the identity, where `N` is
/// the order of the action, so `((0,0), (0,N e_1))` is a periodic pair at
/// every vertex and the answer is exact. For `l = 0` this is the bounded
/// search for local periodicity of `Λ`.
pub fn alpha_aperiodic_bounded(g: &KGraph, a: &Action, pair_bound: u32, depth: u32) -> Result<Aperiodicity> {
    require_no_sources(g)?;
    if a.l() >= 1 {
        let mut n = vec![0i64; a.l()];
        n[0] = a.order() as i64;
        return Ok(Aperiodicity::PeriodicPairFound {
            vertex: g.vertex_id(0).to_string(),
            first: (vec![0; g.k()], vec![0; a.l()]),
            second: (vec![0; g.k()], n),
            depth: 0,
            exact: true,
        });
    }
    let mut out = aperiodic_l0(g, pair_bound, depth)?;
    if let Aperiodicity::PeriodicPairFound { vertex, exact, .. } = &mut out {
        *exact = deterministic(g, g.vertex(vertex)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Simple,
    NotSimple,
    UndecidedAtDepth(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub alpha_cofinal: bool,
    pub cofinality_witness: Option<CofinalityWitness>,
    pub aperiodicity: Aperiodicity,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

/// `C*(Λ) ⋊_α ℤ^l` is simple iff `Λ` is α-cofinal and α-aperiodic.
pub fn simplicity(g: &KGraph, a: &Action, pair_bound: u32, depth: u32) -> Result<SimplicityReport> {
    let cof = alpha_cofinal(g, a)?;
    let ap = alpha_aperiodic_bounded(g, a, pair_bound, depth)?;
    let verdict = match (&ap, cof.cofinal) {
        (_, false) | (Aperiodicity::PeriodicPairFound { .. }, _) => Verdict::NotSimple,
        (Aperiodicity::AperiodicWitnessed { .. }, true) => Verdict::Simple,
        (Aperiodicity::UndecidedAtDepth { depth }, true) => Verdict::UndecidedAtDepth(*depth),
    };
    let mut notes = Vec::new();
    match &ap {
        Aperiodicity::PeriodicPairFound { exact: true, .. } if a.l() >= 1 => notes.push(format!(
            "the action has finite order {}, so it is never aperiodic on a finite graph",
            a.order()
        )),
        Aperiodicity::PeriodicPairFound { exact: false, .. } => notes.push(format!(
            "periodic pair agrees on all prefixes up to depth {depth}; not a proof"
        )),
        _ => {}
    }
    if !cof.cofinal {
        notes.push("not α-cofinal".to_string());
    }
    Ok(SimplicityReport {
        alpha_cofinal: cof.cofinal,
        cofinality_witness: cof.witness,
        aperiodicity: ap,
        verdict,
        notes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub agree: bool,
    pub base_cofinal: bool,
    pub crossed_cofinal: bool,
    pub base_aperiodicity: String,
    pub crossed_aperiodicity: String,
}

/// Run the `l = 0` checks on `Λ ×_α ℤ^l` and compare with the α-checks on
/// `Λ`. The crossed-product pair bound is raised to the action order so
/// that the periodic pair coming from `α_{N e_1} = id` is in range.
pub fn crossed_graph_equivalence_check(
    g: &KGraph,
    a: &Action,
    pair_bound: u32,
    depth: u32,
) -> Result<EquivalenceReport> {
    let cp = crossed_product(g, a)?;
    let none = Action::trivial(&cp.graph, 0);
    let base_cof = alpha_cofinal(g, a)?.cofinal;
    let crossed_cof = alpha_cofinal(&cp.graph, &none)?.cofinal;
    let base_ap = alpha_aperiodic_bounded(g, a, pair_bound, depth)?;
    let bound = pair_bound.max(a.order().min(u32::MAX as u64) as u32);
    let crossed_ap = alpha_aperiodic_bounded(&cp.graph, &none, bound, depth.max(bound))?;
    Ok(EquivalenceReport {
        agree: base_cof == crossed_cof && base_ap.label() == crossed_ap.label(),
        base_cofinal: base_cof,
        crossed_cofinal: crossed_cof,
        base_aperiodicity: base_ap.label().to_string(),
        crossed_aperiodicity: crossed_ap.label().to_string(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Freeness {
    Free,
    NotFree,
    UndecidedAtDepth(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CStarView {
    pub topologically_free: Freeness,
    pub irreducible: bool,
}

/// Freeness of the shift on cylinders: for each `Z(λ)` with `d(λ) ≤
/// (1,…,1)` and each pair, look for an extension `λμ` whose shifts by
/// `d(λ)+p` and `d(λ)+q` disagree.
fn cylinder_freeness(g: &KGraph, pair_bound: u32, depth: u32) -> Result<Freeness> {
    let one = Degree::splat(g.k(), 1);
    let mut undecided = false;
    for v in 0..g.vertex_count() {
        for lam in g.paths_up_to(v, &one)? {
            for (p, q) in pairs(g.k(), pair_bound) {
                let (pl, ql) = (lam.degree() + &p, lam.degree() + &q);
                let top = p.join(&q);
                let start = top.coords().iter().copied().max().unwrap_or(0);
                let mut found = false;
                let mut nondegenerate = false;
                'depth: for d in start..=depth {
                    let full = Degree::splat(g.k(), d);
                    let b = full.checked_sub(&top).expect("d dominates p∨q");
                    nondegenerate |= !b.is_zero();
                    for mu in g.enumerate_paths(lam.source(), &full)? {
                        let x: Path = g.compose(&lam, &mu)?;
                        if g.segment(&x, &pl, &(&pl + &b))? != g.segment(&x, &ql, &(&ql + &b))? {
                            found = true;
                            break 'depth;
                        }
                    }
                }
                if !found {
                    if nondegenerate {
                        return Ok(Freeness::NotFree);
                    }
                    undecided = true;
                }
            }
        }
    }
    Ok(if undecided {
        Freeness::UndecidedAtDepth(depth)
    } else {
        Freeness::Free
    })
}

/// The dynamical reformulation on `Λ^∞`: topological freeness of the
/// combined shift and action, and irreducibility (α-cofinality).
pub fn cstar_view(g: &KGraph, a: &Action, pair_bound: u32, depth: u32) -> Result<CStarView> {
    require_no_sources(g)?;
    if !g.flags().no_sinks {
        let v = (0..g.vertex_count())
            .find(|&v| (0..g.k()).any(|c| g.edges_out_of(v, c).is_empty()))
            .unwrap_or(0);
        return Err(Error::NoSinks(g.vertex_id(v).to_string()));
    }
    let topologically_free = if a.l() >= 1 {
        Freeness::NotFree
    } else {
        cylinder_freeness(g, pair_bound, depth)?
    };
    Ok(CStarView {
        topologically_free,
        irreducible: alpha_cofinal(g, a)?.cofinal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn setup(inst: &gallery::GalleryInstance) -> (KGraph, Action) {
        let g = KGraph::new(&inst.skeleton).unwrap();
        let a = match &inst.action {
            Some(spec) => Action::new(&g, spec).unwrap(),
            None => Action::trivial(&g, 0),
        };
        (g, a)
    }

    // Every depth-D path from every vertex ends in R(v).
    fn brute_cofinal(g: &KGraph, a: &Action, depth: u32) -> bool {
        let n = g.vertex_count();
        let orbit = |v: usize| {
            if a.l() == 0 {
                BTreeSet::from([v])
            } else {
                a.vertex_orbit(v)
            }
        };
        for v in 0..n {
            let reach = downstream(g, &orbit(v));
            let in_r = |w: usize| !orbit(w).is_disjoint(&reach);
            for w in 0..n {
                for lam in g.enumerate_paths(w, &Degree::splat(g.k(), depth)).unwrap() {
                    if !in_r(lam.source()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn cofinality_examples() {
        let (g, a) = setup(&gallery::m_loops_cyclic(2).unwrap());
        assert!(alpha_cofinal(&g, &a).unwrap().cofinal);
        let (g, a) = setup(&gallery::two_component());
        let c = alpha_cofinal(&g, &a).unwrap();
        assert!(!c.cofinal);
        assert_eq!(c.witness.unwrap().avoiding, ["b"]);
        let (g, a) = setup(&gallery::cycle_with_rotation(3).unwrap());
        assert!(alpha_cofinal(&g, &a).unwrap().cofinal);
    }

    #[test]
    fn cofinality_matches_brute_force() {
        let mut instances = gallery::action_instances();
        instances.retain(|i| !i.window);
        for inst in &instances {
            let (g, a) = setup(inst);
            let exact = alpha_cofinal(&g, &a).unwrap().cofinal;
            assert_eq!(exact, brute_cofinal(&g, &a, 6), "{}", inst.name);
            let (g0, a0) = (g.clone(), Action::trivial(&g, 0));
            assert_eq!(
                alpha_cofinal(&g0, &a0).unwrap().cofinal,
                brute_cofinal(&g0, &a0, 6),
                "{}",
                inst.name
            );
        }
    }

    // Two cycles feeding a common sink cycle: not cofinal without an action
    // that exchanges the feeders, cofinal with one.
    #[test]
    fn orbit_shifts_matter() {
        use crate::skeleton::{EdgeSpec, Skeleton};
        let sk = Skeleton {
            k: 1,
            vertices: vec!["a".into(), "b".into()],
            edges: vec![EdgeSpec::new("x", 1, "a", "a"), EdgeSpec::new("y", 1, "b", "b")],
            squares: vec![],
        };
        let g = KGraph::new(&sk).unwrap();
        let swap = crate::actions::ZlAction {
            l: 1,
            generators: vec![crate::actions::Automorphism {
                vertex_map: [("a".into(), "b".into()), ("b".into(), "a".into())].into(),
                edge_map: [("x".into(), "y".into()), ("y".into(), "x".into())].into(),
            }],
        };
        let a = Action::new(&g, &swap).unwrap();
        assert!(alpha_cofinal(&g, &a).unwrap().cofinal);
        assert!(!alpha_cofinal(&g, &Action::trivial(&g, 1)).unwrap().cofinal);
        assert_eq!(alpha_cofinal(&g, &a).unwrap().cofinal, brute_cofinal(&g, &a, 4));
    }

    #[test]
    fn aperiodicity_examples() {
        let (g, _) = setup(&gallery::m_loops(2).unwrap());
        let none = Action::trivial(&g, 0);
        let ap = alpha_aperiodic_bounded(&g, &none, 2, 4).unwrap();
        assert_eq!(ap.label(), "aperiodic");

        let (g, _) = setup(&gallery::cycle_with_rotation(2).unwrap());
        let none = Action::trivial(&g, 0);
        match alpha_aperiodic_bounded(&g, &none, 2, 6).unwrap() {
            Aperiodicity::PeriodicPairFound {
                first, second, exact, ..
            } => {
                assert_eq!((first.0, second.0), (vec![0], vec![2]));
                assert!(exact);
            }
            other => panic!("{other:?}"),
        }

        let (g, a) = setup(&gallery::m_loops_cyclic(2).unwrap());
        match alpha_aperiodic_bounded(&g, &a, 3, 6).unwrap() {
            Aperiodicity::PeriodicPairFound { first, second, .. } => {
                assert_eq!(first, (vec![0], vec![0]));
                assert_eq!(second, (vec![0], vec![2]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn witnesses_are_stable_in_depth() {
        let (g, _) = setup(&gallery::m_loops(2).unwrap());
        let none = Action::trivial(&g, 0);
        let at = |d| match alpha_aperiodic_bounded(&g, &none, 2, d).unwrap() {
            Aperiodicity::AperiodicWitnessed { witnesses } => witnesses,
            other => panic!("{other:?}"),
        };
        assert_eq!(at(4), at(6));
    }

    #[test]
    fn undecided_when_overlap_is_trivial() {
        let (g, _) = setup(&gallery::cycle_with_rotation(2).unwrap());
        let none = Action::trivial(&g, 0);
        // Depth 2 with pair (0,2): the overlap is a single vertex.
        assert_eq!(alpha_aperiodic_bounded(&g, &none, 2, 2).unwrap().label(), "undecided");
    }

    #[test]
    fn verdicts() {
        let (g, a) = setup(&gallery::m_loops_cyclic(2).unwrap());
        let r = simplicity(&g, &a, 3, 6).unwrap();
        assert!(r.alpha_cofinal);
        assert_eq!(r.verdict, Verdict::NotSimple);

        let (g, _) = setup(&gallery::m_loops(2).unwrap());
        let r = simplicity(&g, &Action::trivial(&g, 0), 2, 4).unwrap();
        assert_eq!(r.verdict, Verdict::Simple);

        let (g, a) = setup(&gallery::two_component());
        let r = simplicity(&g, &a, 3, 6).unwrap();
        assert!(!r.alpha_cofinal);
        assert_eq!(r.verdict, Verdict::NotSimple);
    }

    #[test]
    fn dynamics_rejects_sources() {
        let inst = gallery::rank2_bratteli(&[1, 1, 1], 2).unwrap();
        let (g, a) = setup(&inst);
        assert!(matches!(alpha_cofinal(&g, &a), Err(Error::NoSources(_))));
    }

    #[test]
    fn crossed_graph_agreement() {
        for inst in [
            gallery::m_loops_cyclic(2).unwrap(),
            gallery::m_loops_identity(2, 1).unwrap(),
            gallery::two_component(),
            gallery::cycle_with_rotation(3).unwrap(),
        ] {
            let (g, a) = setup(&inst);
            let r = crossed_graph_equivalence_check(&g, &a, 2, 4).unwrap();
            assert!(r.agree, "{}: {r:?}", inst.name);
        }
    }

    #[test]
    fn cstar_view_agrees_with_aperiodicity() {
        let (g, _) = setup(&gallery::m_loops(2).unwrap());
        let none = Action::trivial(&g, 0);
        let v = cstar_view(&g, &none, 2, 4).unwrap();
        assert_eq!(
            v,
            CStarView {
                topologically_free: Freeness::Free,
                irreducible: true
            }
        );

        let (g, a) = setup(&gallery::m_loops_cyclic(2).unwrap());
        let v = cstar_view(&g, &a, 2, 4).unwrap();
        assert_eq!(v.topologically_free, Freeness::NotFree);
        assert!(v.irreducible);

        let (g, a) = setup(&gallery::two_component());
        assert!(!cstar_view(&g, &a, 2, 4).unwrap().irreducible);

        for inst in [
            gallery::cycle_with_rotation(2).unwrap(),
            gallery::m_loops(3).unwrap(),
            gallery::two_component(),
        ] {
            let g = KGraph::new(&inst.skeleton).unwrap();
            let none = Action::trivial(&g, 0);
            for d in [2, 3, 5] {
                let ap = alpha_aperiodic_bounded(&g, &none, 2, d).unwrap();
                let fr = cstar_view(&g, &none, 2, d).unwrap().topologically_free;
                let same = matches!(
                    (ap.label(), fr),
                    ("aperiodic", Freeness::Free)
                        | ("periodic", Freeness::NotFree)
                        | ("undecided", Freeness::UndecidedAtDepth(_))
                );
                assert!(same, "{} at depth {d}", inst.name);
            }
        }
    }
}
