use num_bigint::BigInt;

use super::*;
use crate::gallery;

fn mat(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

fn group(rank: usize, torsion: &[i64]) -> (usize, Vec<BigInt>) {
    (rank, torsion.iter().map(|&d| BigInt::from(d)).collect())
}

fn canon(g: &AbelianGroup) -> (usize, Vec<BigInt>) {
    (g.free_rank, g.torsion.clone())
}

fn setup(inst: &gallery::GalleryInstance) -> (KGraph, Action) {
    let g = KGraph::new(&inst.skeleton).unwrap();
    let a = Action::new(&g, inst.action.as_ref().unwrap()).unwrap();
    (g, a)
}

#[test]
fn smith_examples() {
    let snf = smith_normal_form(&mat(&[&[2, 4], &[6, 8]]));
    assert_eq!(snf.s, mat(&[&[2, 0], &[0, 4]]));
    assert_eq!(snf.u.mul(&mat(&[&[2, 4], &[6, 8]])).mul(&snf.v), snf.s);
    assert_eq!(smith_normal_form(&IntMatrix::identity(3)).s, IntMatrix::identity(3));
    assert!(smith_normal_form(&IntMatrix::zeros(2, 3)).s.is_zero());
}

#[test]
fn smith_needs_divisibility_fix() {
    // diag(2,3) is diagonal but not in Smith form.
    let snf = smith_normal_form(&mat(&[&[2, 0], &[0, 3]]));
    assert_eq!(snf.s, mat(&[&[1, 0], &[0, 6]]));
    assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(2));
}

#[test]
fn cokernel_and_kernel_examples() {
    assert!(cokernel(&mat(&[&[-1]])).is_trivial());
    assert!(kernel_group(&mat(&[&[-1]])).is_trivial());
    let m = mat(&[&[1, -1], &[-1, 1]]);
    assert_eq!(canon(&cokernel(&m)), group(1, &[]));
    let k = kernel_basis(&m);
    assert_eq!(k.cols(), 1);
    let col = k.column(0);
    assert!(col == [BigInt::from(1), BigInt::from(1)] || col == [BigInt::from(-1), BigInt::from(-1)]);
    assert_eq!(canon(&cokernel(&mat(&[&[0]]))), group(1, &[]));
    assert_eq!(kernel_group(&mat(&[&[0]])).free_rank, 1);
}

#[test]
fn lifts_generate() {
    // ℤ²/⟨(2,0),(0,3)⟩ ≅ ℤ/6, generated by the lift.
    let g = cokernel(&mat(&[&[2, 0], &[0, 3]]));
    assert_eq!(canon(&g), group(0, &[6]));
    let x = g.lift.column(0);
    // x must have order exactly 6 modulo the relations.
    let order = (1..=6)
        .find(|&n| {
            let (a, b) = (&x[0] * n, &x[1] * n);
            (&a % 2) == BigInt::from(0) && (&b % 3) == BigInt::from(0)
        })
        .unwrap();
    assert_eq!(order, 6);
}

#[test]
fn hom_certificate_rejects_bad_maps() {
    // ℤ/2 → ℤ/3 by 1 ↦ 1 is not well defined.
    let z2 = Presentation::new(mat(&[&[2]]));
    let z3 = Presentation::new(mat(&[&[3]]));
    assert!(GroupHom::new(z2.clone(), z3.clone(), mat(&[&[1]])).is_err());
    let ok = GroupHom::new(z3.clone(), z3.clone(), mat(&[&[2]])).unwrap();
    assert!(ok.kernel().is_trivial());
    assert!(ok.cokernel().is_trivial());
    // ℤ/4 → ℤ/4 by ×2: ker = coker = ℤ/2.
    let z4 = Presentation::new(mat(&[&[4]]));
    let h = GroupHom::new(z4.clone(), z4, mat(&[&[2]])).unwrap();
    assert_eq!(canon(&h.kernel()), group(0, &[2]));
    assert_eq!(canon(&h.cokernel()), group(0, &[2]));
}

// Elementwise oracle: enumerate ℤ/a → ℤ/b by x ↦ cx.
#[test]
fn hom_kernel_matches_enumeration() {
    for a in 1..=12i64 {
        for b in 1..=12i64 {
            for c in 0..b {
                if (a * c) % b != 0 {
                    continue;
                }
                let h = GroupHom::new(
                    Presentation::new(mat(&[&[a]])),
                    Presentation::new(mat(&[&[b]])),
                    mat(&[&[c]]),
                )
                .unwrap();
                let ker = (0..a).filter(|x| (c * x) % b == 0).count() as i64;
                let img: std::collections::BTreeSet<i64> = (0..a).map(|x| (c * x) % b).collect();
                assert_eq!(h.kernel().order(), Some(BigInt::from(ker)), "{a} {b} {c}");
                assert_eq!(h.cokernel().order(), Some(BigInt::from(b / img.len() as i64)));
            }
        }
    }
}

#[test]
fn adjacency_examples() {
    let (g, a) = setup(&gallery::m_loops_cyclic(2).unwrap());
    let (m, p) = adjacency_and_action(&g, &a).unwrap();
    assert_eq!((m, p), (mat(&[&[2]]), mat(&[&[1]])));
    let (g, a) = setup(&gallery::cycle_with_rotation(2).unwrap());
    let (m, p) = adjacency_and_action(&g, &a).unwrap();
    assert_eq!(m, mat(&[&[0, 1], &[1, 0]]));
    assert_eq!(p, mat(&[&[0, 1], &[1, 0]]));
}

#[test]
fn graph_groups() {
    let k = |inst: gallery::GalleryInstance| graph_k_groups(&KGraph::new(&inst.skeleton).unwrap()).unwrap();
    let o2 = k(gallery::m_loops(2).unwrap());
    assert!(o2.k0.is_trivial() && o2.k1.is_trivial());
    let o3 = k(gallery::m_loops(3).unwrap());
    assert_eq!((canon(&o3.k0), canon(&o3.k1)), (group(0, &[2]), group(0, &[])));
    let c2 = k(gallery::cycle_with_rotation(2).unwrap());
    assert_eq!((canon(&c2.k0), canon(&c2.k1)), (group(1, &[]), group(1, &[])));
}

#[test]
fn crossed_groups_examples() {
    let (g, a) = setup(&gallery::m_loops_cyclic(2).unwrap());
    for r in [
        crossed_k_groups_pv(&g, &a).unwrap(),
        crossed_k_groups_orbits(&g, &a).unwrap(),
    ] {
        assert!(r.k0.is_trivial() && r.k1.is_trivial());
    }
    let (g, a) = setup(&gallery::m_loops_cyclic(3).unwrap());
    for r in [
        crossed_k_groups_pv(&g, &a).unwrap(),
        crossed_k_groups_orbits(&g, &a).unwrap(),
    ] {
        assert_eq!((canon(&r.k0), canon(&r.k1)), (group(0, &[2]), group(0, &[2])));
    }
    let (g, a) = setup(&gallery::m_loops_identity(4, 1).unwrap());
    for r in [
        crossed_k_groups_pv(&g, &a).unwrap(),
        crossed_k_groups_orbits(&g, &a).unwrap(),
    ] {
        assert_eq!((canon(&r.k0), canon(&r.k1)), (group(0, &[3]), group(0, &[3])));
    }
    let (g, a) = setup(&gallery::cycle_with_rotation(2).unwrap());
    assert!(matches!(crossed_k_groups_pv(&g, &a), Err(Error::Inapplicable(_))));
    assert!(matches!(crossed_k_groups_orbits(&g, &a), Err(Error::Inapplicable(_))));
}

#[test]
fn orbit_matrix_examples() {
    let (g, a) = setup(&gallery::m_loops_cyclic(2).unwrap());
    let om = orbit_matrices(&g, &a).unwrap();
    assert_eq!((om.a, om.b), (mat(&[&[2]]), mat(&[&[2]])));
    let (g, a) = setup(&gallery::cycle_with_rotation(2).unwrap());
    let om = orbit_matrices(&g, &a).unwrap();
    assert_eq!(om.orbits, [vec![0, 1]]);
    assert_eq!((om.a, om.b), (mat(&[&[1]]), mat(&[&[1]])));
    let (g, a) = setup(&gallery::two_component());
    let om = orbit_matrices(&g, &a).unwrap();
    assert_eq!(om.a, adjacency(&g));
}

#[test]
fn report_json() {
    let (g, a) = setup(&gallery::m_loops_cyclic(2).unwrap());
    let r = k_theory(&g, Some(&a), Method::Both).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"K0": {"rank": 0, "torsion": []}, "K1": {"rank": 0, "torsion": []}, "method": "both-agree"})
    );
}

#[test]
fn rejects_higher_rank_and_sources() {
    let (g, a) = setup(&gallery::m_loops_cyclic(2).unwrap());
    let cp = crate::constructions::crossed_product(&g, &a).unwrap();
    assert!(matches!(graph_k_groups(&cp.graph), Err(Error::BadParameter(_))));
    let g = KGraph::new(&gallery::rank2_bratteli(&[1, 1, 1], 2).unwrap().skeleton).unwrap();
    assert!(matches!(graph_k_groups(&g), Err(Error::NoSources(_))));
}
