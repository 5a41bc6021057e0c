use std::collections::{BTreeMap, BTreeSet};

use kgraph::actions::{Action, Automorphism, ZlAction};
use kgraph::dynamics::{alpha_aperiodic_bounded, alpha_cofinal, cstar_view, Aperiodicity, Freeness};
use kgraph::ktheory::{
    adjacency_and_action, cokernel, crossed_k_groups_orbits, crossed_k_groups_pv, kernel_basis, smith_normal_form,
};
use kgraph::skeleton::{Degree, EdgeSpec, KGraph, Skeleton};
use kgraph::{Error, IntMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

fn det3(m: &[Vec<i64>]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn matrix(max: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| prop::collection::vec(prop::collection::vec(-range..=range, c), r))
}

/// A 1-graph on up to three vertices, without sources, with a random
/// automorphism: multiplicities are constant on orbits of vertex pairs and
/// parallel edges are permuted at random.
fn random_graph_with_action(seed: u64) -> (Skeleton, ZlAction) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=3);
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(&mut rng);
    let orbit = |start: (usize, usize)| {
        let mut out = vec![start];
        let mut cur = (sigma[start.0], sigma[start.1]);
        while cur != start {
            out.push(cur);
            cur = (sigma[cur.0], sigma[cur.1]);
        }
        out
    };
    let mut mult = vec![vec![usize::MAX; n]; n];
    for v in 0..n {
        for w in 0..n {
            if mult[v][w] == usize::MAX {
                let m = rng.gen_range(0..=2);
                for (a, b) in orbit((v, w)) {
                    mult[a][b] = m;
                }
            }
        }
    }
    for v in 0..n {
        if mult[v].iter().all(|&m| m == 0) {
            for (a, b) in orbit((v, v)) {
                mult[a][b] = 1;
            }
        }
    }
    let id = |v: usize, w: usize, t: usize| format!("e{v}{w}_{t}");
    let mut edges = Vec::new();
    let mut edge_map = BTreeMap::new();
    for v in 0..n {
        for w in 0..n {
            let mut p: Vec<usize> = (0..mult[v][w]).collect();
            p.shuffle(&mut rng);
            for t in 0..mult[v][w] {
                edges.push(EdgeSpec::new(&id(v, w, t), 1, &format!("v{v}"), &format!("v{w}")));
                edge_map.insert(id(v, w, t), id(sigma[v], sigma[w], p[t]));
            }
        }
    }
    let vertex_map = (0..n).map(|v| (format!("v{v}"), format!("v{}", sigma[v]))).collect();
    let sk = Skeleton {
        k: 1,
        vertices: (0..n).map(|v| format!("v{v}")).collect(),
        edges,
        squares: vec![],
    };
    let action = ZlAction {
        l: 1,
        generators: vec![Automorphism { vertex_map, edge_map }],
    };
    (sk, action)
}

// Cofinality by exhaustion: R(v) from bounded path enumeration, then every
// diagonal path of depth |V| + 1 must end in R(v).
fn brute_cofinal(g: &KGraph, a: &Action) -> bool {
    let n = g.vertex_count();
    let depth = n as u32 + 1;
    let orbit = |v: usize| {
        if a.l() == 0 {
            BTreeSet::from([v])
        } else {
            a.vertex_orbit(v)
        }
    };
    for v in 0..n {
        let mut reach = BTreeSet::new();
        for u in orbit(v) {
            for p in g.paths_up_to(u, &Degree::splat(g.k(), n as u32)).unwrap() {
                reach.insert(p.source());
            }
        }
        for w in 0..n {
            for p in g.enumerate_paths(w, &Degree::splat(g.k(), depth)).unwrap() {
                if orbit(p.source()).is_disjoint(&reach) {
                    return false;
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_laws(rows in matrix(4, 5)) {
        let m = to_matrix(&rows);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s.clone());
        prop_assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(m.rows()));
        prop_assert_eq!(snf.u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(snf.v.determinant().abs(), BigInt::from(1));
        prop_assert!(snf.s.is_diagonal());
        let d = snf.diagonal();
        for w in d.windows(2) {
            prop_assert!(!w[0].is_negative());
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
    }

    #[test]
    fn smith_form_is_deterministic(rows in matrix(4, 5)) {
        let m = to_matrix(&rows);
        prop_assert_eq!(smith_normal_form(&m), smith_normal_form(&m));
    }

    #[test]
    fn coker_order_is_det(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 3)) {
        let det = det3(&rows);
        prop_assume!(det != 0);
        prop_assert_eq!(cokernel(&to_matrix(&rows)).order(), Some(BigInt::from(det.abs())));
    }

    #[test]
    fn kernel_basis_is_saturated(rows in matrix(4, 3)) {
        let m = to_matrix(&rows);
        let k = kernel_basis(&m);
        prop_assert!(m.mul(&k).is_zero());
        // Saturated: the kernel basis spans a direct summand, so its Smith
        // factors are all 1.
        let snf = smith_normal_form(&k);
        prop_assert!(snf.diagonal().iter().all(|d| d == &BigInt::from(1)));
        prop_assert_eq!(k.cols(), m.cols() - smith_normal_form(&m).rank());
    }

    #[test]
    fn k_theory_methods_agree(seed in any::<u64>()) {
        let (sk, spec) = random_graph_with_action(seed);
        let g = KGraph::new(&sk).unwrap();
        let a = Action::new(&g, &spec).unwrap();
        let (m, p) = adjacency_and_action(&g, &a).unwrap();
        let mt = m.transpose();
        prop_assert_eq!(p.mul(&mt), mt.mul(&p));
        match (crossed_k_groups_pv(&g, &a), crossed_k_groups_orbits(&g, &a)) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(Error::Inapplicable(_)), Err(Error::Inapplicable(_))) => {}
            (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
        }
    }

    #[test]
    fn cofinality_matches_exhaustion(seed in any::<u64>(), with_action in any::<bool>()) {
        let (sk, spec) = random_graph_with_action(seed);
        let g = KGraph::new(&sk).unwrap();
        let a = if with_action { Action::new(&g, &spec).unwrap() } else { Action::trivial(&g, 0) };
        prop_assert_eq!(alpha_cofinal(&g, &a).unwrap().cofinal, brute_cofinal(&g, &a));
    }

    #[test]
    fn witnesses_persist_with_depth(seed in any::<u64>()) {
        let (sk, _) = random_graph_with_action(seed);
        let g = KGraph::new(&sk).unwrap();
        let none = Action::trivial(&g, 0);
        if let Aperiodicity::AperiodicWitnessed { witnesses } = alpha_aperiodic_bounded(&g, &none, 2, 3).unwrap() {
            match alpha_aperiodic_bounded(&g, &none, 2, 5).unwrap() {
                Aperiodicity::AperiodicWitnessed { witnesses: deeper } => prop_assert_eq!(witnesses, deeper),
                other => prop_assert!(false, "deeper search lost witnesses: {:?}", other),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn topological_freeness_matches_aperiodicity(seed in any::<u64>(), depth in 2u32..=4) {
        let (sk, _) = random_graph_with_action(seed);
        let g = KGraph::new(&sk).unwrap();
        prop_assume!(g.flags().no_sinks);
        let none = Action::trivial(&g, 0);
        let ap = alpha_aperiodic_bounded(&g, &none, 2, depth).unwrap();
        let fr = cstar_view(&g, &none, 2, depth).unwrap().topologically_free;
        let same = matches!(
            (&ap, fr),
            (Aperiodicity::AperiodicWitnessed { .. }, Freeness::Free)
                | (Aperiodicity::PeriodicPairFound { .. }, Freeness::NotFree)
                | (Aperiodicity::UndecidedAtDepth { .. }, Freeness::UndecidedAtDepth(_))
        );
        prop_assert!(same, "{:?} vs {:?}", ap, fr);
    }
}

// The agreement property must not be vacuous: some random instances with a
// nontrivial vertex permutation fall under the formulas.
#[test]
fn agreement_is_exercised() {
    let mut applicable = 0;
    let mut moving = 0;
    for seed in 0..200 {
        let (sk, spec) = random_graph_with_action(seed);
        let g = KGraph::new(&sk).unwrap();
        let a = Action::new(&g, &spec).unwrap();
        if let (Ok(x), Ok(y)) = (crossed_k_groups_pv(&g, &a), crossed_k_groups_orbits(&g, &a)) {
            assert_eq!(x, y, "seed {seed}");
            applicable += 1;
            if (0..g.vertex_count()).any(|v| a.vertex_orbit(v).len() > 1) {
                moving += 1;
            }
        }
    }
    println!("{applicable} applicable, {moving} with moving vertices");
    assert!(
        applicable >= 20 && moving >= 5,
        "{applicable} applicable, {moving} moving"
    );
}
