use crate::skeleton::{EdgeSpec, KGraph, Skeleton, Square};

/// `(a,b,…)`.
pub fn tag(t: &[i64]) -> String {
    let parts: Vec<String> = t.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

pub(crate) fn in_box(t: &[i64], lo: i64, hi: i64) -> bool {
    t.iter().all(|&x| lo <= x && x <= hi)
}

/// All points of `[lo, hi]^l` in lexicographic order.
pub fn window_points(l: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Id of the lattice edge from `t` to `t + e_j` (1-based `j`).
pub fn lattice_edge_id(t: &[i64], j: usize) -> String {
    format!("{}+e{j}", tag(t))
}

/// The lattice `l`-graph on `[lo, hi]^l`: one edge of colour `j` from
/// `t + e_j` to `t`, and commuting squares.
///
/// With `lo = −W` this is a window of `Δ_l`; with `lo = 0` a window of `Ω_l`.
pub fn lattice_window(l: usize, lo: i64, hi: i64) -> Skeleton {
    let points = window_points(l, lo, hi);
    let step = |t: &[i64], j: usize| {
        let mut s = t.to_vec();
        s[j] += 1;
        s
    };
    let mut edges = Vec::new();
    let mut squares = Vec::new();
    for t in &points {
        for j in 0..l {
            let s = step(t, j);
            if in_box(&s, lo, hi) {
                edges.push(EdgeSpec::new(
                    &lattice_edge_id(t, j + 1),
                    j as u32 + 1,
                    &tag(t),
                    &tag(&s),
                ));
            }
            for i in 0..j {
                let far = step(&step(t, i), j);
                if in_box(&far, lo, hi) {
                    squares.push(Square {
                        first: [lattice_edge_id(t, i + 1), lattice_edge_id(&step(t, i), j + 1)],
                        second: [lattice_edge_id(t, j + 1), lattice_edge_id(&step(t, j), i + 1)],
                    });
                }
            }
        }
    }
    Skeleton {
        k: l as u32,
        vertices: points.iter().map(|t| tag(t)).collect(),
        edges,
        squares,
    }
}

/// The cartesian product `Λ × Γ`, a `(k+l)`-graph with coordinatewise
/// structure. Ids: vertex `x@y`, edges `f@y` and `x@h`.
pub fn cartesian_product(a: &KGraph, b: &KGraph) -> Skeleton {
    let k = a.k() as u32;
    let id = |x: &str, y: &str| format!("{x}@{y}");
    let mut vertices = Vec::new();
    for x in a.vertex_ids() {
        for y in b.vertex_ids() {
            vertices.push(id(x, y));
        }
    }
    let mut edges = Vec::new();
    for f in 0..a.edge_count() {
        for y in b.vertex_ids() {
            edges.push(EdgeSpec::new(
                &id(a.edge_id(f), y),
                a.color(f) as u32 + 1,
                &id(a.vertex_id(a.edge_range(f)), y),
                &id(a.vertex_id(a.edge_source(f)), y),
            ));
        }
    }
    for h in 0..b.edge_count() {
        for x in a.vertex_ids() {
            edges.push(EdgeSpec::new(
                &id(x, b.edge_id(h)),
                k + b.color(h) as u32 + 1,
                &id(x, b.vertex_id(b.edge_range(h))),
                &id(x, b.vertex_id(b.edge_source(h))),
            ));
        }
    }
    let mut squares = Vec::new();
    for sq in &a.skeleton().squares {
        for y in b.vertex_ids() {
            squares.push(Square {
                first: [id(&sq.first[0], y), id(&sq.first[1], y)],
                second: [id(&sq.second[0], y), id(&sq.second[1], y)],
            });
        }
    }
    for sq in &b.skeleton().squares {
        for x in a.vertex_ids() {
            squares.push(Square {
                first: [id(x, &sq.first[0]), id(x, &sq.first[1])],
                second: [id(x, &sq.second[0]), id(x, &sq.second[1])],
            });
        }
    }
    for f in 0..a.edge_count() {
        for h in 0..b.edge_count() {
            let (fi, hi) = (a.edge_id(f), b.edge_id(h));
            squares.push(Square {
                first: [
                    id(fi, b.vertex_id(b.edge_range(h))),
                    id(a.vertex_id(a.edge_source(f)), hi),
                ],
                second: [
                    id(a.vertex_id(a.edge_range(f)), hi),
                    id(fi, b.vertex_id(b.edge_source(h))),
                ],
            });
        }
    }
    Skeleton {
        k: k + b.k() as u32,
        vertices,
        edges,
        squares,
    }
}
