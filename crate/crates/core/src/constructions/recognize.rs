use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::actions::{Automorphism, ZlAction};
use crate::error::{Error, Result};
use crate::skeleton::{Degree, EdgeSpec, KGraph, Skeleton, Square};

/// A graph recognised as a crossed product: the base and the action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub base: Skeleton,
    pub action: ZlAction,
}

/// Like [`Recognition`], but each generator is only defined where the
/// designated edges needed to compute it exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialRecognition {
    pub base: Skeleton,
    pub generators: Vec<Automorphism>,
}

fn split_colors(g: &KGraph, zl_colors: &[u32]) -> Result<(Vec<usize>, Vec<usize>)> {
    let k = g.k();
    let chosen: BTreeSet<usize> = zl_colors.iter().map(|&c| c as usize).collect();
    if chosen.len() != zl_colors.len() || chosen.iter().any(|&c| c == 0 || c > k) {
        return Err(Error::BadParameter(format!(
            "designated colours {zl_colors:?} must be distinct and in 1..={k}"
        )));
    }
    // 0-based; designated kept in the caller's order.
    let designated: Vec<usize> = zl_colors.iter().map(|&c| c as usize - 1).collect();
    let rest: Vec<usize> = (0..k).filter(|c| !chosen.contains(&(c + 1))).collect();
    Ok((designated, rest))
}

fn restrict(g: &KGraph, rest: &[usize]) -> Skeleton {
    let new_color = |c: usize| rest.iter().position(|&x| x == c).map(|p| p as u32 + 1);
    let edges = (0..g.edge_count())
        .filter_map(|e| {
            new_color(g.color(e)).map(|c| {
                EdgeSpec::new(
                    g.edge_id(e),
                    c,
                    g.vertex_id(g.edge_range(e)),
                    g.vertex_id(g.edge_source(e)),
                )
            })
        })
        .collect();
    let mut squares: Vec<Square> = g
        .skeleton()
        .squares
        .iter()
        .filter(|sq| {
            let c = |id: &str| g.color(g.edge(id).unwrap());
            new_color(c(&sq.first[0])).is_some() && new_color(c(&sq.first[1])).is_some()
        })
        .cloned()
        .collect();
    squares.sort_by(|a, b| a.first.cmp(&b.first));
    Skeleton {
        k: rest.len() as u32,
        vertices: g.vertex_ids().to_vec(),
        edges,
        squares,
    }
}

/// `α(v) = r(η_v)` and `α(f) = (η_{r(f)} f)(0, d(f))`, where `η_w` is the
/// designated edge with source `w`. Entries are omitted where `η` is absent.
fn generator(g: &KGraph, color: usize) -> Automorphism {
    let mut eta = vec![None; g.vertex_count()];
    for e in 0..g.edge_count() {
        if g.color(e) == color {
            eta[g.edge_source(e)] = Some(e);
        }
    }
    let mut vertex_map = BTreeMap::new();
    for v in 0..g.vertex_count() {
        if let Some(e) = eta[v] {
            vertex_map.insert(g.vertex_id(v).to_string(), g.vertex_id(g.edge_range(e)).to_string());
        }
    }
    let mut edge_map = BTreeMap::new();
    for f in 0..g.edge_count() {
        if g.color(f) == color {
            continue;
        }
        let Some(e) = eta[g.edge_range(f)] else { continue };
        let ef = g
            .compose(&g.edge_path(e), &g.edge_path(f))
            .expect("composable by construction");
        let (head, _) = g
            .factorize(&ef, &Degree::unit(g.k(), g.color(f)))
            .expect("degree is below");
        edge_map.insert(g.edge_id(f).to_string(), g.edge_id(head.word()[0]).to_string());
    }
    Automorphism { vertex_map, edge_map }
}

/// Recover `(Λ, α)` from a graph in which every vertex receives and emits
/// exactly one edge of each designated colour (1-based colour indices).
pub fn recognize(g: &KGraph, zl_colors: &[u32]) -> Result<Recognition> {
    let (designated, rest) = split_colors(g, zl_colors)?;
    for &c in &designated {
        for v in 0..g.vertex_count() {
            let (i, o) = (g.edges_into(v, c).len(), g.edges_out_of(v, c).len());
            if i != 1 || o != 1 {
                return Err(Error::NonSingletonDegree {
                    vertex: g.vertex_id(v).to_string(),
                    color: c as u32 + 1,
                    incoming: i,
                    outgoing: o,
                });
            }
        }
    }
    let base = restrict(g, &rest);
    let generators: Vec<Automorphism> = designated
        .iter()
        .map(|&c| {
            let mut a = generator(g, c);
            a.edge_map.retain(|id, _| {
                let e = g.edge(id).unwrap();
                !designated.contains(&g.color(e))
            });
            a
        })
        .collect();
    let action = ZlAction {
        l: designated.len() as u32,
        generators,
    };
    let bg = KGraph::new(&base).map_err(|e| Error::Internal(format!("recognised base is invalid: {e}")))?;
    crate::actions::Action::new(&bg, &action)
        .map_err(|e| Error::Internal(format!("recognised action is invalid: {e}")))?;
    Ok(Recognition { base, action })
}

/// Recognition without the degree hypothesis, for truncated windows. Fails
/// only if some vertex has two designated edges of one colour on one side.
pub fn recognize_partial(g: &KGraph, zl_colors: &[u32]) -> Result<PartialRecognition> {
    let (designated, rest) = split_colors(g, zl_colors)?;
    for &c in &designated {
        for v in 0..g.vertex_count() {
            let (i, o) = (g.edges_into(v, c).len(), g.edges_out_of(v, c).len());
            if i > 1 || o > 1 {
                return Err(Error::NonSingletonDegree {
                    vertex: g.vertex_id(v).to_string(),
                    color: c as u32 + 1,
                    incoming: i,
                    outgoing: o,
                });
            }
        }
    }
    let generators = designated
        .iter()
        .map(|&c| {
            let mut a = generator(g, c);
            a.edge_map
                .retain(|id, _| !designated.contains(&g.color(g.edge(id).unwrap())));
            a
        })
        .collect();
    Ok(PartialRecognition {
        base: restrict(g, &rest),
        generators,
    })
}
