use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Skeleton;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ViolationKind {
    DuplicateSquare,
    MissingSquare,
    HexagonFailure,
    DanglingEdge,
    BadColorOrder,
    // Raised only by action validation.
    NotBijective,
    NotEquivariant,
    SquareNotPreserved,
    NotCommuting,
    ArityMismatch,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralFlags {
    pub row_finite: bool,
    pub no_sources: bool,
    pub no_sinks: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub flags: StructuralFlags,
}

impl ValidationReport {
    pub(crate) fn from_parts(violations: Vec<Violation>, flags: StructuralFlags) -> Self {
        ValidationReport {
            ok: violations.is_empty(),
            violations,
            flags,
        }
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }

    pub fn summary(&self) -> String {
        if self.ok {
            return "ok".to_string();
        }
        let mut by_kind: BTreeMap<ViolationKind, usize> = BTreeMap::new();
        for v in &self.violations {
            *by_kind.entry(v.kind).or_default() += 1;
        }
        let parts: Vec<String> = by_kind.iter().map(|(k, n)| format!("{n} {k}")).collect();
        let first = &self.violations[0];
        format!("{} (first: {})", parts.join(", "), first.detail)
    }

    pub(crate) fn push(violations: &mut Vec<Violation>, kind: ViolationKind, detail: String) {
        violations.push(Violation { kind, detail });
    }
}

struct EdgeRec<'a> {
    id: &'a str,
    color: u32,
    range: &'a str,
    source: &'a str,
}

/// Check that the square list of `sk` is permissible and compute the
/// structural flags. Every problem is reported; nothing errors.
pub fn validate_skeleton<'s>(sk: &'s Skeleton) -> ValidationReport {
    use ViolationKind::*;
    let mut out = Vec::new();
    let k = sk.k;
    if k == 0 {
        ValidationReport::push(&mut out, BadColorOrder, "k must be positive".into());
    }

    let mut vertices = BTreeSet::new();
    for v in &sk.vertices {
        if !vertices.insert(v.as_str()) {
            ValidationReport::push(&mut out, DanglingEdge, format!("duplicate vertex id `{v}`"));
        }
    }

    let mut edges: BTreeMap<&str, EdgeRec> = BTreeMap::new();
    for e in &sk.edges {
        if edges.contains_key(e.id.as_str()) {
            ValidationReport::push(&mut out, DanglingEdge, format!("duplicate edge id `{}`", e.id));
            continue;
        }
        let mut fine = true;
        for (what, v) in [("range", &e.range), ("source", &e.source)] {
            if !vertices.contains(v.as_str()) {
                ValidationReport::push(
                    &mut out,
                    DanglingEdge,
                    format!("edge `{}` has undeclared {what} `{v}`", e.id),
                );
                fine = false;
            }
        }
        if e.color == 0 || e.color > k {
            ValidationReport::push(
                &mut out,
                BadColorOrder,
                format!("edge `{}` has color {} outside 1..={k}", e.id, e.color),
            );
            fine = false;
        }
        if fine {
            edges.insert(
                e.id.as_str(),
                EdgeRec {
                    id: e.id.as_str(),
                    color: e.color,
                    range: e.range.as_str(),
                    source: e.source.as_str(),
                },
            );
        }
    }

    // Pair -> indices of squares mentioning it.
    let mut first_uses: BTreeMap<(&str, &str), Vec<usize>> = BTreeMap::new();
    let mut second_uses: BTreeMap<(&str, &str), Vec<usize>> = BTreeMap::new();
    let mut forward: HashMap<(&str, &str), (&str, &str)> = HashMap::new();
    let mut backward: HashMap<(&str, &str), (&str, &str)> = HashMap::new();

    for (idx, sq) in sk.squares.iter().enumerate() {
        let ids = [&sq.first[0], &sq.first[1], &sq.second[0], &sq.second[1]];
        let recs: Vec<Option<&EdgeRec>> = ids.iter().map(|id| edges.get(id.as_str())).collect();
        if let Some(pos) = recs.iter().position(|r| r.is_none()) {
            ValidationReport::push(
                &mut out,
                DanglingEdge,
                format!("square #{idx} refers to unknown edge `{}`", ids[pos]),
            );
            continue;
        }
        let (f, g, g2, f2) = (recs[0].unwrap(), recs[1].unwrap(), recs[2].unwrap(), recs[3].unwrap());
        let label = format!("{}{} = {}{}", f.id, g.id, g2.id, f2.id);
        if f.color >= g.color {
            ValidationReport::push(
                &mut out,
                BadColorOrder,
                format!("square {label}: first pair must have ascending colors"),
            );
            continue;
        }
        if g2.color != g.color || f2.color != f.color {
            ValidationReport::push(
                &mut out,
                BadColorOrder,
                format!("square {label}: second pair colors must be ({}, {})", g.color, f.color),
            );
            continue;
        }
        if f.source != g.range || g2.source != f2.range || f.range != g2.range || g.source != f2.source {
            ValidationReport::push(
                &mut out,
                BadColorOrder,
                format!("square {label}: endpoints do not form a commuting square"),
            );
            continue;
        }
        first_uses.entry((f.id, g.id)).or_default().push(idx);
        second_uses.entry((g2.id, f2.id)).or_default().push(idx);
        forward.insert((f.id, g.id), (g2.id, f2.id));
        backward.insert((g2.id, f2.id), (f.id, g.id));
    }

    for ((a, b), uses) in first_uses.iter().chain(second_uses.iter()) {
        if uses.len() > 1 {
            ValidationReport::push(
                &mut out,
                DuplicateSquare,
                format!("pair ({a}, {b}) appears in {} squares", uses.len()),
            );
        }
    }

    // Bicoloured composable pairs must each appear exactly once.
    let mut into: BTreeMap<&str, Vec<&EdgeRec>> = BTreeMap::new();
    for e in edges.values() {
        into.entry(e.range).or_default().push(e);
    }
    for f in edges.values() {
        for g in into.get(f.source).map(|v| v.as_slice()).unwrap_or(&[]) {
            if f.color == g.color {
                continue;
            }
            let (map, role) = if f.color < g.color {
                (&first_uses, "first")
            } else {
                (&second_uses, "second")
            };
            if !map.contains_key(&(f.id, g.id)) {
                ValidationReport::push(
                    &mut out,
                    MissingSquare,
                    format!(
                        "composable pair ({}, {}) is not the {role} pair of any square",
                        f.id, g.id
                    ),
                );
            }
        }
    }

    if k >= 3 {
        let swap = |a: &'s str, b: &'s str| -> Option<(&'s str, &'s str)> {
            let (ca, cb) = (edges[a].color, edges[b].color);
            if ca < cb {
                forward.get(&(a, b)).copied()
            } else {
                backward.get(&(a, b)).copied()
            }
        };
        let swap_at = |w: [&'s str; 3], i: usize| -> Option<[&'s str; 3]> {
            let (x, y) = swap(w[i], w[i + 1])?;
            let mut n = w;
            n[i] = x;
            n[i + 1] = y;
            Some(n)
        };
        for f in edges.values() {
            for g in into.get(f.source).map(|v| v.as_slice()).unwrap_or(&[]) {
                if g.color == f.color {
                    continue;
                }
                for h in into.get(g.source).map(|v| v.as_slice()).unwrap_or(&[]) {
                    if h.color == f.color || h.color == g.color {
                        continue;
                    }
                    let w = [f.id, g.id, h.id];
                    let left = swap_at(w, 1).and_then(|w| swap_at(w, 0)).and_then(|w| swap_at(w, 1));
                    let right = swap_at(w, 0).and_then(|w| swap_at(w, 1)).and_then(|w| swap_at(w, 0));
                    if let (Some(l), Some(r)) = (left, right) {
                        if l != r {
                            ValidationReport::push(
                                &mut out,
                                HexagonFailure,
                                format!(
                                    "path {}{}{} reverses to {}{}{} and {}{}{}",
                                    w[0], w[1], w[2], l[0], l[1], l[2], r[0], r[1], r[2]
                                ),
                            );
                        }
                    }
                }
            }
        }
    }

    let flags = flags_from_counts(sk, &edges);
    ValidationReport::from_parts(out, flags)
}

fn flags_from_counts(sk: &Skeleton, edges: &BTreeMap<&str, EdgeRec>) -> StructuralFlags {
    let k = sk.k as usize;
    let mut incoming: HashMap<&str, Vec<usize>> = HashMap::new();
    let mut outgoing: HashMap<&str, Vec<usize>> = HashMap::new();
    for e in edges.values() {
        let c = e.color as usize - 1;
        incoming.entry(e.range).or_insert_with(|| vec![0; k])[c] += 1;
        outgoing.entry(e.source).or_insert_with(|| vec![0; k])[c] += 1;
    }
    let all_colors =
        |m: &HashMap<&str, Vec<usize>>, v: &str| m.get(v).is_some_and(|counts| counts.iter().all(|&n| n > 0));
    StructuralFlags {
        row_finite: true,
        no_sources: sk.vertices.iter().all(|v| all_colors(&incoming, v)),
        no_sinks: sk.vertices.iter().all(|v| all_colors(&outgoing, v)),
    }
}
