use super::matrix::{Matrix, Scalar};

/// `S = U·M·V` with `U`, `V` unimodular and `S` diagonal, `d_1 | d_2 | …`,
/// zeros trailing. `u_inv` is `U⁻¹`, kept for lifting generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: Scalar> SmithForm<T> {
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }
}

struct Work<T> {
    a: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
}

impl<T: Scalar> Work<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    /// `row[dst] += q · row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, q: T) {
        self.a.add_row(dst, src, &q);
        self.u.add_row(dst, src, &q);
        self.u_inv.add_col(src, dst, &-q);
    }

    fn add_col(&mut self, dst: usize, src: usize, q: T) {
        self.a.add_col(dst, src, &q);
        self.v.add_col(dst, src, &q);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Least absolute nonzero entry in the trailing block, ties row-major.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a[(i, j)].abs();
                if x.is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| x < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

pub fn smith_normal_form<T: Scalar>(m: &Matrix<T>) -> SmithForm<T> {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: Matrix::identity(r),
        u_inv: Matrix::identity(r),
        v: Matrix::identity(c),
    };
    for t in 0..r.min(c) {
        let Some((pi, pj)) = w.pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let p = w.a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..r {
                let q = w.a[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    w.add_row(i, t, -q);
                }
                dirty |= !w.a[(i, t)].is_zero();
            }
            for j in t + 1..c {
                let q = w.a[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    w.add_col(j, t, -q);
                }
                dirty |= !w.a[(t, j)].is_zero();
            }
            if !dirty {
                // Enforce t-th factor divides the rest.
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !w.a[(i, j)].is_multiple_of(&p)));
                match bad {
                    Some(i) => w.add_row(t, i, T::one()),
                    None => break,
                }
            }
            let (pi, pj) = w.pivot(t).expect("block is nonzero");
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }
    SmithForm {
        u: w.u,
        u_inv: w.u_inv,
        s: w.a,
        v: w.v,
    }
}

/// Columns form a `ℤ`-basis of `ker M`.
pub fn kernel_basis<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let snf = smith_normal_form(m);
    snf.v.col_slice(snf.rank()..m.cols())
}

/// An integer solution of `A·X = B`, if one exists.
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Option<Matrix<T>> {
    assert_eq!(a.rows(), b.rows(), "dimension mismatch");
    let snf = smith_normal_form(a);
    let ub = snf.u.mul(b);
    let d = snf.diagonal();
    let rank = snf.rank();
    let mut y = Matrix::zeros(a.cols(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let x = &ub[(i, j)];
            if i < rank {
                if !x.is_multiple_of(&d[i]) {
                    return None;
                }
                y[(i, j)] = x.clone() / d[i].clone();
            } else if !x.is_zero() {
                return None;
            }
        }
    }
    Some(snf.v.mul(&y))
}
