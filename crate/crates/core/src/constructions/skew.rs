use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::crossed::{CrossedProduct, EdgeOrigin};
use super::product::{in_box, tag, window_points};
use crate::error::{Error, Result};
use crate::skeleton::{EdgeSpec, KGraph, Skeleton, Square};

/// A `ℤ^l`-valued function on edges, extended additively to paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cocycle {
    pub values: BTreeMap<String, Vec<i64>>,
}

impl Cocycle {
    pub fn zero(g: &KGraph, l: usize) -> Self {
        Cocycle {
            values: g.edge_ids().iter().map(|e| (e.clone(), vec![0; l])).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("cocycle serialises")
    }

    /// Rank of the target group, read off the values.
    pub fn rank(&self) -> usize {
        self.values.values().next().map_or(0, Vec::len)
    }

    /// Every edge has a value of the common rank, and `c(f)+c(g) =
    /// c(g')+c(f')` on every square.
    pub fn validate(&self, g: &KGraph) -> Result<()> {
        let l = self.rank();
        for e in g.edge_ids() {
            match self.values.get(e) {
                None => return Err(Error::InvalidCocycle(format!("no value for edge `{e}`"))),
                Some(v) if v.len() != l => {
                    return Err(Error::InvalidCocycle(format!(
                        "value for `{e}` has rank {}, expected {l}",
                        v.len()
                    )))
                }
                _ => {}
            }
        }
        if let Some(extra) = self.values.keys().find(|id| g.edge(id).is_err()) {
            return Err(Error::InvalidCocycle(format!("value for unknown edge `{extra}`")));
        }
        for sq in &g.skeleton().squares {
            let sum = |a: &str, b: &str| -> Vec<i64> {
                self.values[a].iter().zip(&self.values[b]).map(|(x, y)| x + y).collect()
            };
            if sum(&sq.first[0], &sq.first[1]) != sum(&sq.second[0], &sq.second[1]) {
                return Err(Error::InvalidCocycle(format!(
                    "not additive on square {}{} = {}{}",
                    sq.first[0], sq.first[1], sq.second[0], sq.second[1]
                )));
            }
        }
        Ok(())
    }

    pub fn value(&self, edge_id: &str) -> &[i64] {
        &self.values[edge_id]
    }
}

/// `c(λ, m) = −m` on a crossed product.
pub fn canonical_cocycle(cp: &CrossedProduct) -> Cocycle {
    let g = &cp.graph;
    let l = cp.l();
    let values = (0..g.edge_count())
        .map(|e| {
            let mut v = vec![0; l];
            if let EdgeOrigin::Designated(_, i) = cp.edge_origin(e) {
                v[i] = -1;
            }
            (g.edge_id(e).to_string(), v)
        })
        .collect();
    Cocycle { values }
}

/// Id of the vertex or edge `(x, g)` of a skew product or product window.
pub fn tagged_id(x: &str, g: &[i64]) -> String {
    format!("{x}@{}", tag(g))
}

/// `Λ ×_c ℤ^l` restricted to tags in `[−W, W]^l`.
///
/// `(e, g)` runs from `(s(e), g)` to `(r(e), c(e) + g)` and is kept when both
/// ends are in the window. A square is kept when all four of its edges are.
#[derive(Clone, Debug)]
pub struct SkewProduct {
    pub skeleton: Skeleton,
    /// vertex id -> (base vertex id, tag)
    pub vertex_origin: BTreeMap<String, (String, Vec<i64>)>,
    /// edge id -> (base edge id, source tag)
    pub edge_origin: BTreeMap<String, (String, Vec<i64>)>,
}

pub fn skew_product(g: &KGraph, c: &Cocycle, window: u32) -> Result<SkewProduct> {
    c.validate(g)?;
    let l = c.rank();
    let w = window as i64;
    let points = window_points(l, -w, w);
    let mut vertices = Vec::new();
    let mut vertex_origin = BTreeMap::new();
    for v in g.vertex_ids() {
        for t in &points {
            let id = tagged_id(v, t);
            vertex_origin.insert(id.clone(), (v.clone(), t.clone()));
            vertices.push(id);
        }
    }
    let shifted = |e: &str, t: &[i64]| -> Vec<i64> { c.value(e).iter().zip(t).map(|(a, b)| a + b).collect() };
    let mut edges = Vec::new();
    let mut edge_origin = BTreeMap::new();
    let mut present = HashSet::new();
    for e in 0..g.edge_count() {
        let id = g.edge_id(e);
        for t in &points {
            let rt = shifted(id, t);
            if !in_box(&rt, -w, w) {
                continue;
            }
            let eid = tagged_id(id, t);
            edges.push(EdgeSpec::new(
                &eid,
                g.color(e) as u32 + 1,
                &tagged_id(g.vertex_id(g.edge_range(e)), &rt),
                &tagged_id(g.vertex_id(g.edge_source(e)), t),
            ));
            present.insert(eid.clone());
            edge_origin.insert(eid, (id.to_string(), t.clone()));
        }
    }
    let mut squares = Vec::new();
    for sq in &g.skeleton().squares {
        for t in &points {
            let [f, h] = &sq.first;
            let [h2, f2] = &sq.second;
            let ids = [
                tagged_id(f, &shifted(h, t)),
                tagged_id(h, t),
                tagged_id(h2, &shifted(f2, t)),
                tagged_id(f2, t),
            ];
            if ids.iter().all(|x| present.contains(x)) {
                let [a, b, cc, d] = ids;
                squares.push(Square {
                    first: [a, b],
                    second: [cc, d],
                });
            }
        }
    }
    Ok(SkewProduct {
        skeleton: Skeleton {
            k: g.k() as u32,
            vertices,
            edges,
            squares,
        },
        vertex_origin,
        edge_origin,
    })
}
