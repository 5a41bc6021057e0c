//! Skeletons (coloured graphs plus factorisation squares) and the path
//! calculus of the k-graph they present.
//!
//! A [`Skeleton`] is the serialisable description. [`KGraph`] is the indexed,
//! validated form on which paths are computed. Vertex and edge indices inside
//! a `KGraph` follow the lexicographic order of their ids, so comparing index
//! sequences is the same as comparing id sequences.

mod degree;
mod iso;
mod path;
mod validate;

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeSet, HashMap};
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use degree::Degree;
pub use iso::{skeleton_isomorphic, SkeletonIsomorphism};
pub use path::{Path, PathView};
pub use validate::{validate_skeleton, StructuralFlags, ValidationReport, Violation, ViolationKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub id: String,
    pub color: u32,
    pub range: String,
    pub source: String,
}

impl EdgeSpec {
    pub fn new(id: &str, color: u32, range: &str, source: &str) -> Self {
        EdgeSpec {
            id: id.to_string(),
            color,
            range: range.to_string(),
            source: source.to_string(),
        }
    }
}

/// The factorisation rule `first[0]·first[1] = second[0]·second[1]`, where
/// `first` has ascending colours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Square {
    pub first: [String; 2],
    pub second: [String; 2],
}

impl Square {
    pub fn new(first: [&str; 2], second: [&str; 2]) -> Self {
        Square {
            first: first.map(str::to_string),
            second: second.map(str::to_string),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Skeleton {
    pub k: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
    pub squares: Vec<Square>,
}

impl Skeleton {
    /// Parse the JSON skeleton format. Duplicate vertex or edge ids are
    /// rejected here.
    pub fn from_json(text: &str) -> Result<Self> {
        let sk: Skeleton = serde_json::from_str(text)?;
        let mut seen = BTreeSet::new();
        for v in &sk.vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::BadParameter(format!("duplicate vertex id `{v}`")));
            }
        }
        let mut seen = BTreeSet::new();
        for e in &sk.edges {
            if !seen.insert(e.id.as_str()) {
                return Err(Error::BadParameter(format!("duplicate edge id `{}`", e.id)));
            }
        }
        Ok(sk)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("skeleton serialises")
    }

    /// Sorted copy: vertices and edges by id, squares by their first pair.
    pub fn canonical(&self) -> Skeleton {
        let mut sk = self.clone();
        sk.vertices.sort();
        sk.edges.sort_by(|a, b| a.id.cmp(&b.id));
        sk.squares
            .sort_by(|a, b| (&a.first, &a.second).cmp(&(&b.first, &b.second)));
        sk
    }

    pub fn validate(&self) -> ValidationReport {
        validate_skeleton(self)
    }
}

/// A validated skeleton, indexed for path computations.
#[derive(Clone, Debug)]
pub struct KGraph {
    k: usize,
    skeleton: Skeleton,
    flags: StructuralFlags,
    fingerprint: u64,
    vertex_ids: Vec<String>,
    vertex_index: HashMap<String, usize>,
    edge_ids: Vec<String>,
    edge_index: HashMap<String, usize>,
    color: Vec<usize>,
    range: Vec<usize>,
    source: Vec<usize>,
    forward: HashMap<(usize, usize), (usize, usize)>,
    backward: HashMap<(usize, usize), (usize, usize)>,
    // [vertex][color] -> edges, sorted by index.
    into: Vec<Vec<Vec<usize>>>,
    out_of: Vec<Vec<Vec<usize>>>,
}

impl KGraph {
    pub fn new(sk: &Skeleton) -> Result<Self> {
        let report = validate_skeleton(sk);
        if !report.ok {
            return Err(Error::InvalidSkeleton(Box::new(report)));
        }
        let skeleton = sk.canonical();
        let k = skeleton.k as usize;
        let vertex_ids = skeleton.vertices.clone();
        let vertex_index: HashMap<String, usize> = vertex_ids.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let edge_ids: Vec<String> = skeleton.edges.iter().map(|e| e.id.clone()).collect();
        let edge_index: HashMap<String, usize> = edge_ids.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let color: Vec<usize> = skeleton.edges.iter().map(|e| e.color as usize - 1).collect();
        let range: Vec<usize> = skeleton.edges.iter().map(|e| vertex_index[&e.range]).collect();
        let source: Vec<usize> = skeleton.edges.iter().map(|e| vertex_index[&e.source]).collect();

        let mut forward = HashMap::new();
        let mut backward = HashMap::new();
        for sq in &skeleton.squares {
            let f = edge_index[&sq.first[0]];
            let g = edge_index[&sq.first[1]];
            let g2 = edge_index[&sq.second[0]];
            let f2 = edge_index[&sq.second[1]];
            forward.insert((f, g), (g2, f2));
            backward.insert((g2, f2), (f, g));
        }

        let n = vertex_ids.len();
        let mut into = vec![vec![Vec::new(); k]; n];
        let mut out_of = vec![vec![Vec::new(); k]; n];
        for e in 0..edge_ids.len() {
            into[range[e]][color[e]].push(e);
            out_of[source[e]][color[e]].push(e);
        }

        let mut hasher = DefaultHasher::new();
        skeleton.hash(&mut hasher);
        let fingerprint = hasher.finish();

        Ok(KGraph {
            k,
            skeleton,
            flags: report.flags,
            fingerprint,
            vertex_ids,
            vertex_index,
            edge_ids,
            edge_index,
            color,
            range,
            source,
            forward,
            backward,
            into,
            out_of,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        KGraph::new(&Skeleton::from_json(text)?)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The canonical (sorted) skeleton this graph was built from.
    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn flags(&self) -> StructuralFlags {
        self.flags
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertex_ids[v]
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edge_ids[e]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.edge_ids
    }

    pub fn vertex(&self, id: &str) -> Result<usize> {
        self.vertex_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn edge(&self, id: &str) -> Result<usize> {
        self.edge_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    /// 0-based colour of edge `e`.
    pub fn color(&self, e: usize) -> usize {
        self.color[e]
    }

    pub fn edge_range(&self, e: usize) -> usize {
        self.range[e]
    }

    pub fn edge_source(&self, e: usize) -> usize {
        self.source[e]
    }

    /// Edges of 0-based colour `c` with range `v`, i.e. `vΛ^{e_c}`.
    pub fn edges_into(&self, v: usize, c: usize) -> &[usize] {
        &self.into[v][c]
    }

    /// Edges of 0-based colour `c` with source `v`, i.e. `Λ^{e_c}v`.
    pub fn edges_out_of(&self, v: usize, c: usize) -> &[usize] {
        &self.out_of[v][c]
    }

    /// The image of the bicoloured pair `(a, b)` under its factorisation
    /// rule, or `None` for a monochrome or non-composable pair.
    pub fn swap_pair(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        match self.color[a].cmp(&self.color[b]) {
            std::cmp::Ordering::Less => self.forward.get(&(a, b)).copied(),
            std::cmp::Ordering::Greater => self.backward.get(&(a, b)).copied(),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// Rewrite positions `i, i+1` of `word` by the square containing them.
    pub fn swap_adjacent(&self, word: &[usize], i: usize) -> Option<Vec<usize>> {
        let (x, y) = self.swap_pair(word[i], word[i + 1])?;
        let mut out = word.to_vec();
        out[i] = x;
        out[i + 1] = y;
        Some(out)
    }

    pub(crate) fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub(crate) fn squares_indexed(&self) -> impl Iterator<Item = ((usize, usize), (usize, usize))> + '_ {
        self.forward.iter().map(|(a, b)| (*a, *b))
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn indices_follow_id_order() {
        let mut sk = swap_crossed();
        sk.edges.reverse();
        let g = KGraph::new(&sk).unwrap();
        assert_eq!(g.edge_ids(), &["f1", "f2", "r"]);
        assert_eq!(g.color(g.edge("r").unwrap()), 1);
    }

    #[test]
    fn invalid_skeleton_is_rejected() {
        let mut sk = swap_crossed();
        sk.squares.pop();
        assert!(matches!(KGraph::new(&sk), Err(Error::InvalidSkeleton(_))));
    }

    #[test]
    fn json_round_trip_and_unknown_fields() {
        let sk = swap_crossed();
        let back = Skeleton::from_json(&sk.to_json()).unwrap();
        assert_eq!(back, sk);
        let bad = r#"{"k":1,"vertices":["v"],"edges":[],"squares":[],"extra":1}"#;
        assert!(Skeleton::from_json(bad).is_err());
        let dup = r#"{"k":1,"vertices":["v","v"],"edges":[],"squares":[]}"#;
        assert!(matches!(Skeleton::from_json(dup), Err(Error::BadParameter(_))));
    }

    #[test]
    fn swap_pair_uses_both_directions() {
        let g = KGraph::new(&swap_crossed()).unwrap();
        let (f1, f2, r) = (g.edge("f1").unwrap(), g.edge("f2").unwrap(), g.edge("r").unwrap());
        assert_eq!(g.swap_pair(f1, r), Some((r, f2)));
        assert_eq!(g.swap_pair(r, f1), Some((f2, r)));
        assert_eq!(g.swap_pair(f1, f2), None);
    }
}
