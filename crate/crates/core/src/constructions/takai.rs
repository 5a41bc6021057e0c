use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::crossed::crossed_product;
use super::product::{cartesian_product, lattice_edge_id, lattice_window};
use super::skew::{canonical_cocycle, skew_product, tagged_id};
use crate::actions::Action;
use crate::error::{Error, Result};
use crate::skeleton::{Degree, KGraph, Path};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TakaiReport {
    pub ok: bool,
    pub window: u32,
    pub vertices: usize,
    pub cells_checked: usize,
    pub products_checked: usize,
    pub failure: Option<String>,
}

struct Setup<'a> {
    base: &'a KGraph,
    action: &'a Action,
    cp: super::crossed::CrossedProduct,
    x: KGraph,
    x_vertex: BTreeMap<String, (String, Vec<i64>)>,
    x_edge: BTreeMap<String, (String, Vec<i64>)>,
    y: KGraph,
}

impl Setup<'_> {
    fn rho_vertex(&self, xv: usize) -> Result<usize> {
        let (v, n) = &self.x_vertex[self.x.vertex_id(xv)];
        let bv = self.base.vertex(v)?;
        let img = self.action.element(n).vertex[bv];
        self.y.vertex(&tagged_id(self.base.vertex_id(img), n))
    }

    /// `ρ((λ,m),n) = (α_{n−m}(λ), (n−m, n))`.
    fn rho(&self, p: &Path) -> Result<Path> {
        let (_, n) = &self.x_vertex[self.x.vertex_id(p.source())];
        let (rv, _) = &self.x_vertex[self.x.vertex_id(p.range())];
        let word = p
            .word()
            .iter()
            .map(|&e| self.cp.graph.edge(&self.x_edge[self.x.edge_id(e)].0))
            .collect::<Result<Vec<_>>>()?;
        let gamma = self.cp.graph.path_unchecked(self.cp.graph.vertex(rv)?, word);
        let (lambda, m) = self.cp.back(self.base, &gamma);
        let t0: Vec<i64> = n.iter().zip(&m).map(|(a, &b)| a - b as i64).collect();
        let mu = self.action.apply(self.base, &t0, &lambda);
        let mut yword = Vec::new();
        for &f in mu.word() {
            yword.push(self.y.edge(&tagged_id(self.base.edge_id(f), &t0))?);
        }
        let w = self.base.vertex_id(mu.source());
        let mut t = t0.clone();
        for (j, &mj) in m.iter().enumerate() {
            for _ in 0..mj {
                yword.push(self.y.edge(&format!("{w}@{}", lattice_edge_id(&t, j + 1)))?);
                t[j] += 1;
            }
        }
        if yword.is_empty() {
            return Ok(self
                .y
                .vertex_path(self.y.vertex(&tagged_id(self.base.vertex_id(mu.range()), &t0))?));
        }
        let out = self.y.path_from_word(&yword)?;
        if out.word() != yword.as_slice() {
            return Err(Error::Internal("image word is not in normal form".into()));
        }
        Ok(out)
    }
}

/// Check that `ρ` is an isomorphism from the windowed skew product
/// `(Λ ×_α ℤ^l) ×_c ℤ^l` onto the windowed product `Λ × Δ_l`.
///
/// Cells are quantified up to base degree `(2,…,2)` and every group degree
/// that fits in the window.
pub fn takai_check(base: &KGraph, action: &Action, window: u32) -> Result<TakaiReport> {
    takai_check_with(base, action, window, 2)
}

pub fn takai_check_with(base: &KGraph, action: &Action, window: u32, base_bound: u32) -> Result<TakaiReport> {
    let l = action.l();
    if l == 0 {
        return Err(Error::BadParameter("Takai duality needs l >= 1".into()));
    }
    let cp = crossed_product(base, action)?;
    let sk = skew_product(&cp.graph, &canonical_cocycle(&cp), window)?;
    let x = KGraph::new(&sk.skeleton).map_err(|e| Error::Internal(format!("skew product window: {e}")))?;
    let w = window as i64;
    let delta = KGraph::new(&lattice_window(l, -w, w))?;
    let y =
        KGraph::new(&cartesian_product(base, &delta)).map_err(|e| Error::Internal(format!("product window: {e}")))?;
    let s = Setup {
        base,
        action,
        cp,
        x,
        x_vertex: sk.vertex_origin,
        x_edge: sk.edge_origin,
        y,
    };
    let mut report = TakaiReport {
        ok: true,
        window,
        vertices: s.x.vertex_count(),
        cells_checked: 0,
        products_checked: 0,
        failure: None,
    };
    let fail = |mut r: TakaiReport, msg: String| -> Result<TakaiReport> {
        r.ok = false;
        r.failure = Some(msg);
        Ok(r)
    };

    let vimg = (0..s.x.vertex_count())
        .map(|v| s.rho_vertex(v))
        .collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<usize> = vimg.iter().copied().collect();
    if distinct.len() != vimg.len() || vimg.len() != s.y.vertex_count() {
        return fail(report, "vertex map is not a bijection".into());
    }

    let bound = Degree::splat(base.k(), base_bound).concat(&Degree::splat(l, 2 * window));
    let mut all = Vec::new();
    for d in bound.box_below() {
        let mut images = BTreeSet::new();
        let mut count = 0;
        for v in 0..s.x.vertex_count() {
            for p in s.x.enumerate_paths(v, &d)? {
                let img = match s.rho(&p) {
                    Ok(img) => img,
                    Err(e) => return fail(report, format!("ρ undefined on {}: {e}", s.x.display_path(&p))),
                };
                if img.degree() != p.degree() {
                    return fail(report, format!("ρ changes the degree of {}", s.x.display_path(&p)));
                }
                if img.range() != vimg[p.range()] {
                    return fail(report, format!("ρ does not preserve r on {}", s.x.display_path(&p)));
                }
                if img.source() != vimg[p.source()] {
                    return fail(report, format!("ρ does not preserve s on {}", s.x.display_path(&p)));
                }
                images.insert(img.clone());
                count += 1;
                all.push((p, img));
            }
        }
        let mut target = 0;
        for v in 0..s.y.vertex_count() {
            target += s.y.count_paths(v, &d)?;
        }
        report.cells_checked += count;
        if images.len() != count || count != target {
            return fail(report, format!("ρ is not a bijection in degree {d}"));
        }
    }

    for (p, rp) in &all {
        for (q, rq) in &all {
            if p.source() != q.range() {
                continue;
            }
            let pq = s.x.compose(p, q)?;
            let lhs = match s.rho(&pq) {
                Ok(img) => img,
                Err(e) => return fail(report, format!("ρ undefined on a product: {e}")),
            };
            let rhs = s.y.compose(rp, rq)?;
            report.products_checked += 1;
            if lhs != rhs {
                return fail(
                    report,
                    format!(
                        "ρ({}·{}) differs from ρ({})·ρ({})",
                        s.x.display_path(p),
                        s.x.display_path(q),
                        s.x.display_path(p),
                        s.x.display_path(q)
                    ),
                );
            }
        }
    }
    Ok(report)
}
