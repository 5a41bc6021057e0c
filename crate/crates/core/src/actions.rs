//! Actions of `ℤ^l` on a k-graph by automorphisms.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::skeleton::{KGraph, Path, Skeleton, ValidationReport, Violation, ViolationKind};

/// One generator as id maps, the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Automorphism {
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, String>,
}

impl Automorphism {
    pub fn identity(sk: &Skeleton) -> Self {
        Automorphism {
            vertex_map: sk.vertices.iter().map(|v| (v.clone(), v.clone())).collect(),
            edge_map: sk.edges.iter().map(|e| (e.id.clone(), e.id.clone())).collect(),
        }
    }
}

/// `l` commuting generators `α_{e_1}, …, α_{e_l}`, the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZlAction {
    pub l: u32,
    pub generators: Vec<Automorphism>,
}

impl ZlAction {
    pub fn identity(sk: &Skeleton, l: u32) -> Self {
        ZlAction {
            l,
            generators: (0..l).map(|_| Automorphism::identity(sk)).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("action serialises")
    }
}

/// A pair of permutations of vertex and edge indices; one element `α_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    pub vertex: Vec<usize>,
    pub edge: Vec<usize>,
}

impl Perm {
    pub fn identity(nv: usize, ne: usize) -> Self {
        Perm {
            vertex: (0..nv).collect(),
            edge: (0..ne).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &Perm) -> Perm {
        Perm {
            vertex: other.vertex.iter().map(|&v| self.vertex[v]).collect(),
            edge: other.edge.iter().map(|&e| self.edge[e]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut vertex = vec![0; self.vertex.len()];
        for (i, &j) in self.vertex.iter().enumerate() {
            vertex[j] = i;
        }
        let mut edge = vec![0; self.edge.len()];
        for (i, &j) in self.edge.iter().enumerate() {
            edge[j] = i;
        }
        Perm { vertex, edge }
    }

    pub fn pow(&self, n: u64) -> Perm {
        let mut out = Perm::identity(self.vertex.len(), self.edge.len());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = base.after(&out);
            }
            base = base.after(&base);
            n >>= 1;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.vertex.iter().enumerate().all(|(i, &j)| i == j) && self.edge.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Least `N ≥ 1` with `self^N = id`.
    pub fn order(&self) -> u64 {
        fn cycles(p: &[usize]) -> u64 {
            let mut seen = vec![false; p.len()];
            let mut acc = 1u64;
            for s in 0..p.len() {
                if seen[s] {
                    continue;
                }
                let mut len = 0u64;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = p[x];
                    len += 1;
                }
                acc = acc.lcm(&len);
            }
            acc
        }
        cycles(&self.vertex).lcm(&cycles(&self.edge))
    }

    pub fn apply_path(&self, g: &KGraph, p: &Path) -> Path {
        let word: Vec<usize> = p.word().iter().map(|&e| self.edge[e]).collect();
        g.path_unchecked(self.vertex[p.range()], word)
    }
}

/// A validated action on a specific [`KGraph`], with generator inverses and
/// orders precomputed.
#[derive(Clone, Debug)]
pub struct Action {
    l: usize,
    gens: Vec<Perm>,
    orders: Vec<u64>,
}

fn push(report: &mut Vec<Violation>, kind: ViolationKind, detail: String) {
    report.push(Violation { kind, detail });
}

fn index_map(
    name: &str,
    gen: usize,
    map: &BTreeMap<String, String>,
    ids: &[String],
    lookup: impl Fn(&str) -> Option<usize>,
    out: &mut Vec<Violation>,
) -> Option<Vec<usize>> {
    let mut perm = vec![usize::MAX; ids.len()];
    let mut ok = true;
    for (from, to) in map {
        match (lookup(from), lookup(to)) {
            (Some(a), Some(b)) => perm[a] = b,
            _ => {
                ok = false;
                push(
                    out,
                    ViolationKind::DanglingEdge,
                    format!("generator {gen}: {name} map {from} -> {to} names an unknown id"),
                );
            }
        }
    }
    for (i, &p) in perm.iter().enumerate() {
        if p == usize::MAX {
            ok = false;
            push(
                out,
                ViolationKind::NotBijective,
                format!("generator {gen}: {name} `{}` has no image", ids[i]),
            );
        }
    }
    if ok {
        let distinct: HashSet<usize> = perm.iter().copied().collect();
        if distinct.len() != perm.len() {
            ok = false;
            push(
                out,
                ViolationKind::NotBijective,
                format!("generator {gen}: {name} map is not injective"),
            );
        }
    }
    ok.then_some(perm)
}

/// Check bijectivity, colour and endpoint equivariance, square preservation
/// and commutation of the generators.
pub fn validate_action(g: &KGraph, a: &ZlAction) -> ValidationReport {
    let mut out = Vec::new();
    if a.generators.len() != a.l as usize {
        push(
            &mut out,
            ViolationKind::ArityMismatch,
            format!("l = {} but {} generators given", a.l, a.generators.len()),
        );
    }
    let mut perms = Vec::new();
    for (i, gen) in a.generators.iter().enumerate() {
        let vm = index_map(
            "vertex",
            i,
            &gen.vertex_map,
            g.vertex_ids(),
            |s| g.vertex(s).ok(),
            &mut out,
        );
        let em = index_map("edge", i, &gen.edge_map, g.edge_ids(), |s| g.edge(s).ok(), &mut out);
        let (Some(vertex), Some(edge)) = (vm, em) else { continue };
        let p = Perm { vertex, edge };
        check_morphism(g, i, &p, &mut out);
        perms.push((i, p));
    }
    for (x, (i, p)) in perms.iter().enumerate() {
        for (j, q) in perms.iter().skip(x + 1) {
            if p.after(q) != q.after(p) {
                push(
                    &mut out,
                    ViolationKind::NotCommuting,
                    format!("generators {i} and {j} do not commute"),
                );
            }
        }
    }
    ValidationReport::from_parts(out, g.flags())
}

fn check_morphism(g: &KGraph, i: usize, p: &Perm, out: &mut Vec<Violation>) {
    for e in 0..g.edge_count() {
        let x = p.edge[e];
        if g.color(x) != g.color(e) {
            push(
                out,
                ViolationKind::NotEquivariant,
                format!("generator {i}: edge {} changes colour", g.edge_id(e)),
            );
        }
        if g.edge_range(x) != p.vertex[g.edge_range(e)] || g.edge_source(x) != p.vertex[g.edge_source(e)] {
            push(
                out,
                ViolationKind::NotEquivariant,
                format!(
                    "generator {i}: edge {} is not mapped compatibly with r and s",
                    g.edge_id(e)
                ),
            );
        }
    }
    let mut squares: Vec<_> = g.squares_indexed().collect();
    squares.sort();
    for ((f, h), (h2, f2)) in squares {
        let image = g.swap_pair(p.edge[f], p.edge[h]);
        if image != Some((p.edge[h2], p.edge[f2])) {
            push(
                out,
                ViolationKind::SquareNotPreserved,
                format!(
                    "generator {i}: square {}{} = {}{} is not mapped to a square",
                    g.edge_id(f),
                    g.edge_id(h),
                    g.edge_id(h2),
                    g.edge_id(f2)
                ),
            );
        }
    }
}

impl Action {
    pub fn new(g: &KGraph, a: &ZlAction) -> Result<Self> {
        let report = validate_action(g, a);
        if !report.ok {
            return Err(Error::InvalidAction(Box::new(report)));
        }
        let gens: Vec<Perm> = a
            .generators
            .iter()
            .map(|gen| Perm {
                vertex: (0..g.vertex_count())
                    .map(|v| g.vertex(&gen.vertex_map[g.vertex_id(v)]).unwrap())
                    .collect(),
                edge: (0..g.edge_count())
                    .map(|e| g.edge(&gen.edge_map[g.edge_id(e)]).unwrap())
                    .collect(),
            })
            .collect();
        Ok(Self::from_perms(gens))
    }

    /// From already-validated generator permutations.
    pub(crate) fn from_perms(gens: Vec<Perm>) -> Self {
        let orders = gens.iter().map(Perm::order).collect();
        Action {
            l: gens.len(),
            gens,
            orders,
        }
    }

    /// The trivial action of `ℤ^l`.
    pub fn trivial(g: &KGraph, l: usize) -> Self {
        Self::from_perms(vec![Perm::identity(g.vertex_count(), g.edge_count()); l])
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn generator(&self, i: usize) -> &Perm {
        &self.gens[i]
    }

    /// `α_m` for `m ∈ ℤ^l`.
    pub fn element(&self, m: &[i64]) -> Perm {
        assert_eq!(m.len(), self.l, "group element has wrong arity");
        let (nv, ne) = (
            self.gens.first().map_or(0, |p| p.vertex.len()),
            self.gens.first().map_or(0, |p| p.edge.len()),
        );
        let mut out = Perm::identity(nv, ne);
        for (i, &mi) in m.iter().enumerate() {
            let n = mi.rem_euclid(self.orders[i] as i64) as u64;
            out = self.gens[i].pow(n).after(&out);
        }
        out
    }

    pub fn apply(&self, g: &KGraph, m: &[i64], p: &Path) -> Path {
        self.element(m).apply_path(g, p)
    }

    /// Orbit of `v` under the whole group, sorted.
    pub fn vertex_orbit(&self, v: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for p in &self.gens {
                let y = p.vertex[x];
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// All vertex orbits, ordered by least element.
    pub fn vertex_orbits(&self, n: usize) -> Vec<Vec<usize>> {
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n {
            if seen[v] {
                continue;
            }
            let orbit: Vec<usize> = if self.l == 0 {
                vec![v]
            } else {
                self.vertex_orbit(v).into_iter().collect()
            };
            for &w in &orbit {
                seen[w] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// Least `N ≥ 1` with every generator's `N`-th power the identity.
    pub fn order(&self) -> u64 {
        self.orders.iter().fold(1, |acc, o| acc.lcm(o))
    }

    pub fn generator_orders(&self) -> &[u64] {
        &self.orders
    }

    /// Back to the JSON form.
    pub fn to_spec(&self, g: &KGraph) -> ZlAction {
        ZlAction {
            l: self.l as u32,
            generators: self
                .gens
                .iter()
                .map(|p| Automorphism {
                    vertex_map: (0..g.vertex_count())
                        .map(|v| (g.vertex_id(v).to_string(), g.vertex_id(p.vertex[v]).to_string()))
                        .collect(),
                    edge_map: (0..g.edge_count())
                        .map(|e| (g.edge_id(e).to_string(), g.edge_id(p.edge[e]).to_string()))
                        .collect(),
                })
                .collect(),
        }
    }
}

/// `action_order` as a free function over the JSON form.
pub fn action_order(g: &KGraph, a: &ZlAction) -> Result<u64> {
    Ok(Action::new(g, a)?.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alignment::mce;
    use crate::skeleton::{Degree, EdgeSpec};

    fn o2() -> (Skeleton, KGraph) {
        let sk = Skeleton {
            k: 1,
            vertices: vec!["v".into()],
            edges: vec![EdgeSpec::new("f1", 1, "v", "v"), EdgeSpec::new("f2", 1, "v", "v")],
            squares: vec![],
        };
        let g = KGraph::new(&sk).unwrap();
        (sk, g)
    }

    fn swap(sk: &Skeleton) -> ZlAction {
        let mut a = ZlAction::identity(sk, 1);
        a.generators[0].edge_map.insert("f1".into(), "f2".into());
        a.generators[0].edge_map.insert("f2".into(), "f1".into());
        a
    }

    fn cycle3() -> (Skeleton, ZlAction) {
        let n = 3;
        let sk = Skeleton {
            k: 1,
            vertices: (0..n).map(|i| format!("u{i}")).collect(),
            edges: (0..n)
                .map(|i| EdgeSpec::new(&format!("c{i}"), 1, &format!("u{i}"), &format!("u{}", (i + 1) % n)))
                .collect(),
            squares: vec![],
        };
        let a = ZlAction {
            l: 1,
            generators: vec![Automorphism {
                vertex_map: (0..n).map(|i| (format!("u{i}"), format!("u{}", (i + 1) % n))).collect(),
                edge_map: (0..n).map(|i| (format!("c{i}"), format!("c{}", (i + 1) % n))).collect(),
            }],
        };
        (sk, a)
    }

    #[test]
    fn identity_and_swap_validate() {
        let (sk, g) = o2();
        assert!(validate_action(&g, &ZlAction::identity(&sk, 2)).ok);
        assert!(validate_action(&g, &swap(&sk)).ok);
    }

    #[test]
    fn broken_maps_are_reported() {
        let (sk, g) = o2();
        let mut a = swap(&sk);
        a.generators[0].vertex_map.insert("v".into(), "nowhere".into());
        let r = validate_action(&g, &a);
        assert!(r.has(ViolationKind::DanglingEdge));

        let mut a = swap(&sk);
        a.generators[0].edge_map.insert("f1".into(), "f1".into());
        assert!(validate_action(&g, &a).has(ViolationKind::NotBijective));

        let mut a = swap(&sk);
        a.l = 2;
        assert!(validate_action(&g, &a).has(ViolationKind::ArityMismatch));
    }

    #[test]
    fn non_equivariant_map_is_reported() {
        let (sk, _) = cycle3();
        let g = KGraph::new(&sk).unwrap();
        let mut a = ZlAction::identity(&sk, 1);
        a.generators[0].edge_map.insert("c0".into(), "c1".into());
        a.generators[0].edge_map.insert("c1".into(), "c0".into());
        assert!(validate_action(&g, &a).has(ViolationKind::NotEquivariant));
    }

    #[test]
    fn swap_application() {
        let (sk, g) = o2();
        let a = Action::new(&g, &swap(&sk)).unwrap();
        let p = g.path_from_ids(&["f1", "f2"]).unwrap();
        assert_eq!(g.display_path(&a.apply(&g, &[1], &p)), "f2.f1");
        assert_eq!(a.apply(&g, &[2], &p), p);
        assert_eq!(a.apply(&g, &[0], &p), p);
        assert_eq!(a.apply(&g, &[-1], &p), a.apply(&g, &[1], &p));
        assert_eq!(a.vertex_orbit(0), BTreeSet::from([0]));
        assert_eq!(a.order(), 2);
    }

    #[test]
    fn rotation_orbits() {
        let (sk, spec) = cycle3();
        let g = KGraph::new(&sk).unwrap();
        let a = Action::new(&g, &spec).unwrap();
        for v in 0..3 {
            assert_eq!(a.vertex_orbit(v).len(), 3);
        }
        assert_eq!(a.order(), 3);
        assert_eq!(a.to_spec(&g), spec);
        let id = Action::new(&g, &ZlAction::identity(&sk, 1)).unwrap();
        assert_eq!(id.vertex_orbit(1), BTreeSet::from([1]));
        assert_eq!(id.order(), 1);
    }

    #[test]
    fn action_laws_on_paths() {
        let (sk, spec) = cycle3();
        let g = KGraph::new(&sk).unwrap();
        let a = Action::new(&g, &spec).unwrap();
        let paths: Vec<Path> = (0..3)
            .flat_map(|v| g.paths_up_to(v, &Degree::new(vec![3])).unwrap())
            .collect();
        for p in &paths {
            for m in -3i64..=3 {
                for n in -3i64..=3 {
                    assert_eq!(a.apply(&g, &[m], &a.apply(&g, &[n], p)), a.apply(&g, &[m + n], p));
                }
            }
            let orbit = a.vertex_orbit(p.range()).len() as u64;
            assert_eq!(a.order() % orbit, 0);
        }
        for x in &paths {
            for y in &paths {
                if x.source() == y.range() {
                    let xy = g.compose(x, y).unwrap();
                    assert_eq!(
                        a.apply(&g, &[1], &xy),
                        g.compose(&a.apply(&g, &[1], x), &a.apply(&g, &[1], y)).unwrap()
                    );
                }
                let lhs: Vec<Path> = mce(&g, &a.apply(&g, &[1], x), &a.apply(&g, &[1], y))
                    .unwrap()
                    .extensions()
                    .into_iter()
                    .cloned()
                    .collect();
                let mut rhs: Vec<Path> = mce(&g, x, y)
                    .unwrap()
                    .extensions()
                    .into_iter()
                    .map(|l| a.apply(&g, &[1], l))
                    .collect();
                rhs.sort();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
