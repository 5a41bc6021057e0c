use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use super::{KGraph, Skeleton};

/// A colour- and square-preserving bijection between two skeletons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonIsomorphism {
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, String>,
}

struct Side {
    g: KGraph,
    // (colour, range, source) -> edges
    bundles: HashMap<(usize, usize, usize), Vec<usize>>,
    signature: Vec<Vec<(usize, usize, usize)>>,
    squares: HashSet<(usize, usize, usize, usize)>,
}

impl Side {
    fn new(sk: &Skeleton) -> Option<Side> {
        let g = KGraph::new(sk).ok()?;
        let mut bundles: HashMap<_, Vec<usize>> = HashMap::new();
        for e in 0..g.edge_count() {
            bundles
                .entry((g.color(e), g.edge_range(e), g.edge_source(e)))
                .or_default()
                .push(e);
        }
        let signature = (0..g.vertex_count())
            .map(|v| {
                (0..g.k())
                    .map(|c| {
                        let loops = g.edges_into(v, c).iter().filter(|&&e| g.edge_source(e) == v).count();
                        (g.edges_into(v, c).len(), g.edges_out_of(v, c).len(), loops)
                    })
                    .collect()
            })
            .collect();
        let squares = g.squares_indexed().map(|((f, gg), (g2, f2))| (f, gg, g2, f2)).collect();
        Some(Side {
            g,
            bundles,
            signature,
            squares,
        })
    }

    fn between(&self, c: usize, r: usize, s: usize) -> usize {
        self.bundles.get(&(c, r, s)).map_or(0, Vec::len)
    }
}

struct Search<'a> {
    a: &'a Side,
    b: &'a Side,
    vmap: Vec<Option<usize>>,
    vused: Vec<bool>,
    emap: Vec<Option<usize>>,
    eused: Vec<bool>,
    // squares of `a` indexed by each member edge
    touching: Vec<Vec<(usize, usize, usize, usize)>>,
}

impl Search<'_> {
    // Candidates for `x` among `pool`, with the same-id element first.
    fn ordered(ids_a: &str, pool: &[usize], id_of: impl Fn(usize) -> String) -> Vec<usize> {
        let mut out: Vec<usize> = pool.to_vec();
        if let Some(i) = out.iter().position(|&y| id_of(y) == ids_a) {
            out.swap(0, i);
            out[1..].sort_unstable();
        }
        out
    }

    fn vertex_ok(&self, v: usize, w: usize) -> bool {
        if self.a.signature[v] != self.b.signature[w] {
            return false;
        }
        for (u, img) in self.vmap.iter().enumerate() {
            let Some(x) = *img else { continue };
            for c in 0..self.a.g.k() {
                if self.a.between(c, v, u) != self.b.between(c, w, x)
                    || self.a.between(c, u, v) != self.b.between(c, x, w)
                {
                    return false;
                }
            }
        }
        true
    }

    fn assign_vertices(&mut self, v: usize) -> bool {
        let n = self.a.g.vertex_count();
        if v == n {
            return self.assign_edges(0);
        }
        let pool: Vec<usize> = (0..n).filter(|&w| !self.vused[w]).collect();
        let cands = Self::ordered(self.a.g.vertex_id(v), &pool, |w| self.b.g.vertex_id(w).to_string());
        for w in cands {
            if !self.vertex_ok(v, w) {
                continue;
            }
            self.vmap[v] = Some(w);
            self.vused[w] = true;
            if self.assign_vertices(v + 1) {
                return true;
            }
            self.vmap[v] = None;
            self.vused[w] = false;
        }
        false
    }

    fn squares_ok(&self, e: usize) -> bool {
        for &(f, g, g2, f2) in &self.touching[e] {
            let imgs = [self.emap[f], self.emap[g], self.emap[g2], self.emap[f2]];
            if let [Some(a), Some(b), Some(c), Some(d)] = imgs {
                if !self.b.squares.contains(&(a, b, c, d)) {
                    return false;
                }
            }
        }
        true
    }

    fn assign_edges(&mut self, e: usize) -> bool {
        let ga = &self.a.g;
        if e == ga.edge_count() {
            return true;
        }
        let key = (
            ga.color(e),
            self.vmap[ga.edge_range(e)].unwrap(),
            self.vmap[ga.edge_source(e)].unwrap(),
        );
        let pool: Vec<usize> = self
            .b
            .bundles
            .get(&key)
            .map(|v| v.iter().copied().filter(|&x| !self.eused[x]).collect())
            .unwrap_or_default();
        let cands = Self::ordered(ga.edge_id(e), &pool, |x| self.b.g.edge_id(x).to_string());
        for x in cands {
            self.emap[e] = Some(x);
            self.eused[x] = true;
            if self.squares_ok(e) && self.assign_edges(e + 1) {
                return true;
            }
            self.emap[e] = None;
            self.eused[x] = false;
        }
        false
    }
}

/// Search for an isomorphism of the k-graphs presented by `a` and `b`.
///
/// Backtracking over vertices then edges; candidates with the same id are
/// tried first, so relabel-free isomorphisms are found immediately. Invalid
/// skeletons are never isomorphic to anything.
pub fn skeleton_isomorphic(a: &Skeleton, b: &Skeleton) -> Option<SkeletonIsomorphism> {
    let sa = Side::new(a)?;
    let sb = Side::new(b)?;
    if sa.g.k() != sb.g.k()
        || sa.g.vertex_count() != sb.g.vertex_count()
        || sa.g.edge_count() != sb.g.edge_count()
        || sa.squares.len() != sb.squares.len()
    {
        return None;
    }
    let mut sig_a = sa.signature.clone();
    let mut sig_b = sb.signature.clone();
    sig_a.sort();
    sig_b.sort();
    if sig_a != sig_b {
        return None;
    }
    let mut touching = vec![Vec::new(); sa.g.edge_count()];
    for &sq in &sa.squares {
        let (f, g, g2, f2) = sq;
        for e in [f, g, g2, f2] {
            if !touching[e].contains(&sq) {
                touching[e].push(sq);
            }
        }
    }
    let mut search = Search {
        a: &sa,
        b: &sb,
        vmap: vec![None; sa.g.vertex_count()],
        vused: vec![false; sb.g.vertex_count()],
        emap: vec![None; sa.g.edge_count()],
        eused: vec![false; sb.g.edge_count()],
        touching,
    };
    if !search.assign_vertices(0) {
        return None;
    }
    let vertex_map = search
        .vmap
        .iter()
        .enumerate()
        .map(|(v, w)| (sa.g.vertex_id(v).to_string(), sb.g.vertex_id(w.unwrap()).to_string()))
        .collect();
    let edge_map = search
        .emap
        .iter()
        .enumerate()
        .map(|(e, x)| (sa.g.edge_id(e).to_string(), sb.g.edge_id(x.unwrap()).to_string()))
        .collect();
    Some(SkeletonIsomorphism { vertex_map, edge_map })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::Square;
    use super::*;

    #[test]
    fn self_isomorphism_is_identity() {
        let sk = swap_crossed();
        let iso = skeleton_isomorphic(&sk, &sk).unwrap();
        assert!(iso.edge_map.iter().all(|(a, b)| a == b));
        assert!(iso.vertex_map.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn different_counts_are_not_isomorphic() {
        assert!(skeleton_isomorphic(&loops(2), &loops(3)).is_none());
    }

    #[test]
    fn relabelled_copy_is_found() {
        let mut sk = swap_crossed();
        for e in &mut sk.edges {
            e.id = format!("x{}", e.id);
            e.range = "w".into();
            e.source = "w".into();
        }
        sk.vertices = vec!["w".into()];
        for sq in &mut sk.squares {
            for id in sq.first.iter_mut().chain(sq.second.iter_mut()) {
                *id = format!("x{id}");
            }
        }
        let iso = skeleton_isomorphic(&swap_crossed(), &sk).unwrap();
        assert_eq!(iso.edge_map["f1"], "xf1");
    }

    // Same coloured graph, commuting squares versus twisted squares.
    #[test]
    fn square_structure_matters() {
        let twisted = swap_crossed();
        let mut commuting = twisted.clone();
        commuting.squares = vec![
            Square::new(["f1", "r"], ["r", "f1"]),
            Square::new(["f2", "r"], ["r", "f2"]),
        ];
        assert!(commuting.validate().ok);
        assert!(skeleton_isomorphic(&twisted, &commuting).is_none());
    }
}
