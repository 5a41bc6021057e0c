use serde::Serialize;

use crate::actions::{Action, ZlAction};
use crate::alignment::mce_by_enumeration;
use crate::error::{Error, Result};
use crate::skeleton::{Degree, EdgeSpec, KGraph, Path, Skeleton, Square};

/// Id of the new edge `(v, e_i)`; `i` is 1-based.
pub fn designated_edge_id(v: &str, i: usize) -> String {
    format!("({v},e{i})")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrigin {
    Base(usize),
    /// `(v, e_i)` with 0-based `i`.
    Designated(usize, usize),
}

/// The crossed-product graph `Λ ×_α ℤ^l` with the bookkeeping that relates
/// its paths to pairs `(λ, m)`.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub skeleton: Skeleton,
    pub graph: KGraph,
    k: usize,
    l: usize,
    // indices into `graph`
    vertex: Vec<usize>,
    base_edge: Vec<usize>,
    designated: Vec<Vec<usize>>,
    origin: Vec<EdgeOrigin>,
    base_vertex: Vec<usize>,
}

/// Build `Λ ×_α ℤ^l`.
///
/// Base vertices and edges keep their ids. The edge `(v, e_i)` has colour
/// `k + i`, range `v` and source `α_{e_i}^{-1}(v)`.
pub fn crossed_product(base: &KGraph, action: &Action) -> Result<CrossedProduct> {
    let k = base.k();
    let l = action.l();
    let inverses: Vec<_> = (0..l).map(|i| action.generator(i).inverse()).collect();
    let mut sk = Skeleton {
        k: (k + l) as u32,
        vertices: base.vertex_ids().to_vec(),
        edges: Vec::new(),
        squares: base.skeleton().squares.clone(),
    };
    for e in 0..base.edge_count() {
        sk.edges.push(EdgeSpec::new(
            base.edge_id(e),
            base.color(e) as u32 + 1,
            base.vertex_id(base.edge_range(e)),
            base.vertex_id(base.edge_source(e)),
        ));
    }
    for v in 0..base.vertex_count() {
        for (i, inv) in inverses.iter().enumerate() {
            let id = designated_edge_id(base.vertex_id(v), i + 1);
            if base.edge(&id).is_ok() {
                return Err(Error::BadParameter(format!(
                    "base edge id `{id}` collides with a crossed-product edge"
                )));
            }
            sk.edges.push(EdgeSpec::new(
                &id,
                (k + i + 1) as u32,
                base.vertex_id(v),
                base.vertex_id(inv.vertex[v]),
            ));
        }
    }
    let red = |v: usize, i: usize| designated_edge_id(base.vertex_id(v), i + 1);
    for f in 0..base.edge_count() {
        for (i, inv) in inverses.iter().enumerate() {
            sk.squares.push(Square {
                first: [base.edge_id(f).to_string(), red(base.edge_source(f), i)],
                second: [red(base.edge_range(f), i), base.edge_id(inv.edge[f]).to_string()],
            });
        }
    }
    for v in 0..base.vertex_count() {
        for i in 0..l {
            for j in i + 1..l {
                sk.squares.push(Square {
                    first: [red(v, i), red(inverses[i].vertex[v], j)],
                    second: [red(v, j), red(inverses[j].vertex[v], i)],
                });
            }
        }
    }
    let graph = match KGraph::new(&sk) {
        Ok(g) => g,
        Err(Error::InvalidSkeleton(r)) => {
            return Err(Error::Internal(format!(
                "crossed product failed validation: {}",
                r.summary()
            )))
        }
        Err(e) => return Err(e),
    };
    let vertex: Vec<usize> = (0..base.vertex_count())
        .map(|v| graph.vertex(base.vertex_id(v)).unwrap())
        .collect();
    let base_edge: Vec<usize> = (0..base.edge_count())
        .map(|e| graph.edge(base.edge_id(e)).unwrap())
        .collect();
    let designated: Vec<Vec<usize>> = (0..base.vertex_count())
        .map(|v| (0..l).map(|i| graph.edge(&red(v, i)).unwrap()).collect())
        .collect();
    let mut origin = vec![EdgeOrigin::Base(0); graph.edge_count()];
    for (e, &x) in base_edge.iter().enumerate() {
        origin[x] = EdgeOrigin::Base(e);
    }
    for (v, row) in designated.iter().enumerate() {
        for (i, &x) in row.iter().enumerate() {
            origin[x] = EdgeOrigin::Designated(v, i);
        }
    }
    let mut base_vertex = vec![0; graph.vertex_count()];
    for (v, &x) in vertex.iter().enumerate() {
        base_vertex[x] = v;
    }
    sk = graph.skeleton().clone();
    Ok(CrossedProduct {
        skeleton: sk,
        graph,
        k,
        l,
        vertex,
        base_edge,
        designated,
        origin,
        base_vertex,
    })
}

/// [`crossed_product`] from the serialised forms.
pub fn crossed_product_of(sk: &Skeleton, a: &ZlAction) -> Result<CrossedProduct> {
    let base = KGraph::new(sk)?;
    let action = Action::new(&base, a)?;
    crossed_product(&base, &action)
}

impl CrossedProduct {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn vertex(&self, base_v: usize) -> usize {
        self.vertex[base_v]
    }

    pub fn base_vertex(&self, v: usize) -> usize {
        self.base_vertex[v]
    }

    pub fn edge_origin(&self, e: usize) -> EdgeOrigin {
        self.origin[e]
    }

    /// The edge `(v, e_i)` (0-based `i`) as an index of [`Self::graph`].
    pub fn designated_edge(&self, base_v: usize, i: usize) -> usize {
        self.designated[base_v][i]
    }

    /// `ξ(λ, m)`: `λ` followed by the chain of new edges in ascending colour
    /// order. The word is already in normal form.
    pub fn embed(&self, lambda: &Path, m: &[u32]) -> Path {
        assert_eq!(m.len(), self.l, "group degree has wrong arity");
        let mut word: Vec<usize> = lambda.word().iter().map(|&e| self.base_edge[e]).collect();
        let mut at = self.vertex[lambda.source()];
        for (i, &mi) in m.iter().enumerate() {
            for _ in 0..mi {
                let e = self.designated[self.base_vertex[at]][i];
                word.push(e);
                at = self.graph.edge_source(e);
            }
        }
        self.graph.path_unchecked(self.vertex[lambda.range()], word)
    }

    /// Inverse of [`Self::embed`].
    pub fn back(&self, base: &KGraph, p: &Path) -> (Path, Vec<u32>) {
        let (pd, md) = p.degree().split_at(self.k);
        let n = pd.total() as usize;
        let word: Vec<usize> = p.word()[..n]
            .iter()
            .map(|&e| match self.origin[e] {
                EdgeOrigin::Base(b) => b,
                EdgeOrigin::Designated(..) => unreachable!("normal form puts base colours first"),
            })
            .collect();
        let lambda = base.path_unchecked(self.base_vertex[p.range()], word);
        (lambda, md.coords().to_vec())
    }

    /// Check `|(v,0)Γ^{(p,m)}| = |vΛ^p|` for all `p ≤ p_bound`, `m ≤ m_bound`.
    pub fn check_cell_counts(&self, base: &KGraph, p_bound: &Degree, m_bound: &[u32]) -> Result<bool> {
        let mb = Degree::new(m_bound.to_vec());
        for v in 0..base.vertex_count() {
            for p in p_bound.box_below() {
                let expect = base.count_paths(v, &p)?;
                for m in mb.box_below() {
                    if self.graph.count_paths(self.vertex[v], &p.concat(&m))? != expect {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationshipReport {
    pub ok: bool,
    pub pairs_checked: usize,
    pub counterexample: Option<String>,
}

/// Verify `MCE_Γ((μ,m),(ν,n)) = MCE_Λ(μ,ν) × {m∨n}` for all base paths of
/// degree at most `p_bound` and group degrees at most `m_bound`. Both sides
/// are computed by exhaustive enumeration.
pub fn mce_relationship_check(
    base: &KGraph,
    cp: &CrossedProduct,
    p_bound: &Degree,
    m_bound: &[u32],
) -> Result<RelationshipReport> {
    let mb = Degree::new(m_bound.to_vec());
    let ms = mb.box_below();
    let mut checked = 0;
    for v in 0..base.vertex_count() {
        let paths = base.paths_up_to(v, p_bound)?;
        let cells: Vec<(&Path, &Degree)> = paths.iter().flat_map(|p| ms.iter().map(move |m| (p, m))).collect();
        for &(mu, m) in &cells {
            let em = cp.embed(mu, m.coords());
            for &(nu, n) in &cells {
                let en = cp.embed(nu, n.coords());
                let lhs = mce_by_enumeration(&cp.graph, &em, &en)?;
                let join = m.join(n);
                let mut rhs: Vec<Path> = mce_by_enumeration(base, mu, nu)?
                    .iter()
                    .map(|l| cp.embed(l, join.coords()))
                    .collect();
                rhs.sort();
                let mut lhs_sorted = lhs.clone();
                lhs_sorted.sort();
                checked += 1;
                if lhs_sorted != rhs {
                    return Ok(RelationshipReport {
                        ok: false,
                        pairs_checked: checked,
                        counterexample: Some(format!(
                            "({}, {m}) and ({}, {n}): {} extensions in the crossed product, {} predicted",
                            base.display_path(mu),
                            base.display_path(nu),
                            lhs_sorted.len(),
                            rhs.len()
                        )),
                    });
                }
            }
        }
    }
    Ok(RelationshipReport {
        ok: true,
        pairs_checked: checked,
        counterexample: None,
    })
}
