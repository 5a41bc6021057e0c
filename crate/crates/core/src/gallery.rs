//! Small named instances: loops, cycles, lattice windows, the line-with-shift
//! window and the rank-2 Bratteli diagram of a continued fraction.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::actions::{Automorphism, ZlAction};
use crate::constructions::{designated_edge_id, lattice_window};
use crate::error::{Error, Result};
use crate::skeleton::{EdgeSpec, Skeleton, Square};

#[derive(Clone, Debug, Serialize)]
pub struct GalleryInstance {
    pub name: String,
    pub skeleton: Skeleton,
    pub action: Option<ZlAction>,
    pub note: String,
    /// Truncation of an infinite graph. Boundary vertices may be sources or
    /// sinks, and for `line_window_shift` boundary squares are missing.
    pub window: bool,
}

impl GalleryInstance {
    fn new(name: String, skeleton: Skeleton, action: Option<ZlAction>, note: &str) -> Self {
        GalleryInstance {
            name,
            skeleton,
            action,
            note: note.to_string(),
            window: false,
        }
    }
}

fn loops_skeleton(m: usize) -> Skeleton {
    Skeleton {
        k: 1,
        vertices: vec!["v".into()],
        edges: (1..=m).map(|i| EdgeSpec::new(&format!("f{i}"), 1, "v", "v")).collect(),
        squares: vec![],
    }
}

/// One vertex with `m` loops; `C*` is the Cuntz algebra `O_m`.
pub fn m_loops(m: usize) -> Result<GalleryInstance> {
    if m == 0 {
        return Err(Error::BadParameter("m_loops needs m >= 1".into()));
    }
    Ok(GalleryInstance::new(
        format!("{m}-loops"),
        loops_skeleton(m),
        None,
        "one vertex, m loops",
    ))
}

/// `m` loops with `f_i ↦ f_{i+1}` cyclically; for `m = 2` the swap.
pub fn m_loops_cyclic(m: usize) -> Result<GalleryInstance> {
    let mut inst = m_loops(m)?;
    let mut a = ZlAction::identity(&inst.skeleton, 1);
    for i in 1..=m {
        a.generators[0]
            .edge_map
            .insert(format!("f{i}"), format!("f{}", i % m + 1));
    }
    inst.name = format!("{m}-loops-cyclic");
    inst.action = Some(a);
    inst.note = "loops permuted cyclically".into();
    Ok(inst)
}

/// `m` loops with the trivial `ℤ^l` action.
pub fn m_loops_identity(m: usize, l: u32) -> Result<GalleryInstance> {
    let mut inst = m_loops(m)?;
    inst.action = Some(ZlAction::identity(&inst.skeleton, l));
    inst.name = format!("{m}-loops-identity");
    inst.note = "trivial action".into();
    Ok(inst)
}

/// The `n`-cycle `u_i ← u_{i+1}` via `c_i`, rotated by one step.
pub fn cycle_with_rotation(n: usize) -> Result<GalleryInstance> {
    if n == 0 {
        return Err(Error::BadParameter("cycle_with_rotation needs n >= 1".into()));
    }
    let u = |i: usize| format!("u{}", i % n);
    let c = |i: usize| format!("c{}", i % n);
    let skeleton = Skeleton {
        k: 1,
        vertices: (0..n).map(u).collect(),
        edges: (0..n).map(|i| EdgeSpec::new(&c(i), 1, &u(i), &u(i + 1))).collect(),
        squares: vec![],
    };
    let action = ZlAction {
        l: 1,
        generators: vec![Automorphism {
            vertex_map: (0..n).map(|i| (u(i), u(i + 1))).collect(),
            edge_map: (0..n).map(|i| (c(i), c(i + 1))).collect(),
        }],
    };
    Ok(GalleryInstance::new(
        format!("cycle-{n}-rotation"),
        skeleton,
        Some(action),
        "directed cycle, rotation",
    ))
}

/// Two disjoint copies of the two-loop graph, trivial action.
pub fn two_component() -> GalleryInstance {
    let mut edges = Vec::new();
    for v in ["a", "b"] {
        for i in 1..=2 {
            edges.push(EdgeSpec::new(&format!("{v}{i}"), 1, v, v));
        }
    }
    let skeleton = Skeleton {
        k: 1,
        vertices: vec!["a".into(), "b".into()],
        edges,
        squares: vec![],
    };
    let action = ZlAction::identity(&skeleton, 1);
    GalleryInstance::new(
        "two-component".into(),
        skeleton,
        Some(action),
        "disconnected, trivial action",
    )
}

/// The crossed product of the two-sided line `v_n ← v_{n+1}` by the shift
/// `v_n ↦ v_{n+step}`, on vertices `v_{−radius..radius}`.
///
/// Each dashed edge `(v_n, e_1)` runs from `v_{n−step}` to `v_n`. Squares that
/// would need an edge outside the window are absent, so the window is not
/// permissible at its ends.
pub fn line_window_shift(radius: u32, step: u32) -> Result<GalleryInstance> {
    if radius == 0 || step == 0 {
        return Err(Error::BadParameter("line_window_shift needs radius, step >= 1".into()));
    }
    let (r, s) = (radius as i64, step as i64);
    let v = |n: i64| format!("v{n}");
    let f = |n: i64| format!("f{n}");
    let has_f = |n: i64| -r <= n && n < r;
    let has_red = |n: i64| -r <= n - s && n <= r;
    let mut edges = Vec::new();
    for n in -r..r {
        edges.push(EdgeSpec::new(&f(n), 1, &v(n), &v(n + 1)));
    }
    for n in -r..=r {
        if has_red(n) {
            edges.push(EdgeSpec::new(&designated_edge_id(&v(n), 1), 2, &v(n), &v(n - s)));
        }
    }
    let mut squares = Vec::new();
    for n in -r..r {
        // f_n (v_{n+1}, e_1) = (v_n, e_1) f_{n−step}
        if has_red(n + 1) && has_red(n) && has_f(n - s) {
            squares.push(Square {
                first: [f(n), designated_edge_id(&v(n + 1), 1)],
                second: [designated_edge_id(&v(n), 1), f(n - s)],
            });
        }
    }
    let skeleton = Skeleton {
        k: 2,
        vertices: (-r..=r).map(v).collect(),
        edges,
        squares,
    };
    let mut inst = GalleryInstance::new(
        format!("line-window-{radius}-shift-{step}"),
        skeleton,
        None,
        "window of the line crossed by a shift",
    );
    inst.window = true;
    Ok(inst)
}

/// `Ω_k` on `{0..N}^k`.
pub fn omega_window(k: usize, n: u32) -> Result<GalleryInstance> {
    if k == 0 {
        return Err(Error::BadParameter("omega_window needs k >= 1".into()));
    }
    let mut inst = GalleryInstance::new(
        format!("omega-{k}-{n}"),
        lattice_window(k, 0, n as i64),
        None,
        "window of the one-sided lattice graph",
    );
    inst.window = true;
    Ok(inst)
}

/// `Δ_l` on `{−W..W}^l`.
pub fn delta_window(l: usize, w: u32) -> Result<GalleryInstance> {
    if l == 0 {
        return Err(Error::BadParameter("delta_window needs l >= 1".into()));
    }
    let w = w as i64;
    let mut inst = GalleryInstance::new(
        format!("delta-{l}-{w}"),
        lattice_window(l, -w, w),
        None,
        "window of the two-sided lattice graph",
    );
    inst.window = true;
    Ok(inst)
}

/// The matrices `A_n = Φ_{T_{n−1}+1} ⋯ Φ_{T_n}`, `Φ_i = [[c_i, 1], [1, 0]]`,
/// for `n = 1..=levels`.
pub fn bratteli_matrices(c: &[u64], levels: usize) -> Result<Vec<[[BigInt; 2]; 2]>> {
    if c.is_empty() || c.contains(&0) {
        return Err(Error::BadParameter(
            "continued fraction entries must be positive".into(),
        ));
    }
    let need = levels * (levels + 1) / 2;
    if need > c.len() {
        return Err(Error::BadParameter(format!(
            "{levels} levels need {need} continued fraction entries, got {}",
            c.len()
        )));
    }
    let mul = |a: &[[BigInt; 2]; 2], b: &[[BigInt; 2]; 2]| -> [[BigInt; 2]; 2] {
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    };
    let one = || BigInt::from(1);
    let mut out = Vec::new();
    for n in 1..=levels {
        let mut acc = [[one(), BigInt::from(0)], [BigInt::from(0), one()]];
        for ci in &c[n * (n - 1) / 2..n * (n + 1) / 2] {
            acc = mul(&acc, &[[BigInt::from(*ci), one()], [one(), BigInt::from(0)]]);
        }
        out.push(acc);
    }
    Ok(out)
}

/// Id of the `n`-th edge of the bundle from `v^{m+1}_j` to `v^m_i`.
pub fn bratteli_edge_id(m: usize, i: usize, j: usize, n: u64) -> String {
    format!("e{m}_{i}{j}_{n}")
}

/// The rank-2 Bratteli diagram of `[c_1, c_2, …]` truncated to `levels` edge
/// levels (vertex levels `1..=levels+1`), with the action that fixes
/// vertices and rotates each bundle of parallel edges.
pub fn rank2_bratteli(c: &[u64], levels: usize) -> Result<GalleryInstance> {
    if levels == 0 {
        return Err(Error::BadParameter("rank2_bratteli needs levels >= 1".into()));
    }
    let mats = bratteli_matrices(c, levels)?;
    let v = |m: usize, i: usize| format!("v{m}_{i}");
    let mut vertices = Vec::new();
    for m in 1..=levels + 1 {
        for i in 1..=2 {
            vertices.push(v(m, i));
        }
    }
    let mut edges = Vec::new();
    let mut edge_map = BTreeMap::new();
    for (m, a) in mats.iter().enumerate() {
        let m = m + 1;
        for i in 1..=2 {
            for j in 1..=2 {
                let mult: u64 = (&a[i - 1][j - 1])
                    .try_into()
                    .map_err(|_| Error::BadParameter("bundle multiplicity too large to materialise".into()))?;
                for n in 0..mult {
                    let id = bratteli_edge_id(m, i, j, n);
                    edges.push(EdgeSpec::new(&id, 1, &v(m, i), &v(m + 1, j)));
                    edge_map.insert(id, bratteli_edge_id(m, i, j, (n + 1) % mult));
                }
            }
        }
    }
    let action = ZlAction {
        l: 1,
        generators: vec![Automorphism {
            vertex_map: vertices.iter().map(|x| (x.clone(), x.clone())).collect(),
            edge_map,
        }],
    };
    let skeleton = Skeleton {
        k: 1,
        vertices,
        edges,
        squares: vec![],
    };
    let mut inst = GalleryInstance::new(
        format!("bratteli-{levels}"),
        skeleton,
        Some(action),
        "rank-2 Bratteli diagram, bundles rotated",
    );
    inst.window = true;
    Ok(inst)
}

/// Every named instance carrying an action, all permissible.
pub fn action_instances() -> Vec<GalleryInstance> {
    let mut out = vec![
        m_loops_cyclic(2).unwrap(),
        m_loops_identity(2, 1).unwrap(),
        m_loops_cyclic(3).unwrap(),
        m_loops_identity(3, 1).unwrap(),
        m_loops_identity(2, 2).unwrap(),
        cycle_with_rotation(2).unwrap(),
        cycle_with_rotation(3).unwrap(),
        two_component(),
        rank2_bratteli(&[1, 1, 1], 2).unwrap(),
    ];
    out[4].name = "2-loops-identity-l2".into();
    out
}

/// Look up a builder by name with its parameters, for the command line.
pub fn by_name(name: &str, params: &[i64]) -> Result<GalleryInstance> {
    let p = |i: usize, default: i64| -> Result<u64> {
        let x = params.get(i).copied().unwrap_or(default);
        u64::try_from(x).map_err(|_| Error::BadParameter(format!("parameter {x} must be nonnegative")))
    };
    match name {
        "m-loops" => m_loops(p(0, 2)? as usize),
        "m-loops-cyclic" => m_loops_cyclic(p(0, 2)? as usize),
        "m-loops-identity" => m_loops_identity(p(0, 2)? as usize, p(1, 1)? as u32),
        "cycle-rotation" => cycle_with_rotation(p(0, 3)? as usize),
        "two-component" => Ok(two_component()),
        "line-window-shift" => line_window_shift(p(0, 3)? as u32, p(1, 2)? as u32),
        "omega-window" => omega_window(p(0, 2)? as usize, p(1, 2)? as u32),
        "delta-window" => delta_window(p(0, 1)? as usize, p(1, 1)? as u32),
        "rank2-bratteli" => {
            let levels = p(0, 3)? as usize;
            let c: Vec<u64> = if params.len() > 1 {
                params[1..]
                    .iter()
                    .map(|&x| u64::try_from(x).map_err(|_| Error::BadParameter("entries must be positive".into())))
                    .collect::<Result<_>>()?
            } else {
                vec![1; levels * (levels + 1) / 2]
            };
            rank2_bratteli(&c, levels)
        }
        _ => Err(Error::BadParameter(format!("unknown gallery instance `{name}`"))),
    }
}

pub const NAMES: &[&str] = &[
    "m-loops",
    "m-loops-cyclic",
    "m-loops-identity",
    "cycle-rotation",
    "two-component",
    "line-window-shift",
    "omega-window",
    "delta-window",
    "rank2-bratteli",
];
