use std::fmt;

use num_traits::ToPrimitive;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::matrix::{Matrix, Scalar};
use super::snf::{kernel_basis, smith_normal_form, solve};
use crate::error::{Error, Result};

/// `ℤ^n / im R`, with `n = relations.rows()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation<T> {
    pub relations: Matrix<T>,
}

impl<T: Scalar> Presentation<T> {
    pub fn new(relations: Matrix<T>) -> Self {
        Presentation { relations }
    }

    pub fn free(n: usize) -> Self {
        Presentation {
            relations: Matrix::zeros(n, 0),
        }
    }

    pub fn generators(&self) -> usize {
        self.relations.rows()
    }

    pub fn group(&self) -> FGAbelianGroup<T> {
        cokernel(&self.relations)
    }
}

/// `ℤ^r ⊕ ⊕ ℤ/d_i` with `d_i ≥ 2`, `d_i | d_{i+1}`. Equality compares this
/// canonical form only.
#[derive(Clone, Debug)]
pub struct FGAbelianGroup<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
    /// Column `i` lifts the `i`-th canonical generator (torsion first, then
    /// free) to the presenting free group.
    pub lift: Matrix<T>,
}

impl<T: Scalar> FGAbelianGroup<T> {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<T> {
        (self.free_rank == 0).then(|| self.torsion.iter().fold(T::one(), |a, d| a * d.clone()))
    }

    pub fn canonical(&self) -> (usize, &[T]) {
        (self.free_rank, &self.torsion)
    }
}

impl<T: Scalar> PartialEq for FGAbelianGroup<T> {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl<T: Scalar> Eq for FGAbelianGroup<T> {}

impl<T: Scalar> fmt::Display for FGAbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl<T: Scalar + ToPrimitive> Serialize for FGAbelianGroup<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let torsion: Vec<serde_json::Value> = self
            .torsion
            .iter()
            .map(|d| match d.to_u64() {
                Some(x) => serde_json::Value::from(x),
                None => serde_json::Value::from(d.to_string()),
            })
            .collect();
        let mut st = s.serialize_struct("FGAbelianGroup", 2)?;
        st.serialize_field("rank", &self.free_rank)?;
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

/// `coker M = ℤ^rows / im M`, read off the Smith form.
pub fn cokernel<T: Scalar>(m: &Matrix<T>) -> FGAbelianGroup<T> {
    let snf = smith_normal_form(m);
    let d = snf.diagonal();
    let mut torsion = Vec::new();
    let mut cols = Vec::new();
    for (i, x) in d.iter().enumerate() {
        if !x.is_zero() && !x.is_one() {
            torsion.push(x.clone());
            cols.push(i);
        }
    }
    let rank = snf.rank();
    cols.extend(rank..m.rows());
    let lift = Matrix::from_fn(m.rows(), cols.len(), |i, j| snf.u_inv[(i, cols[j])].clone());
    FGAbelianGroup {
        free_rank: m.rows() - rank,
        torsion,
        lift,
    }
}

/// A homomorphism of presented groups given on generators. Constructed only
/// when the relations of the domain map into the relations of the codomain.
#[derive(Clone, Debug)]
pub struct GroupHom<T> {
    pub domain: Presentation<T>,
    pub codomain: Presentation<T>,
    pub matrix: Matrix<T>,
    /// `X` with `R_codomain · X = matrix · R_domain`.
    pub certificate: Matrix<T>,
}

impl<T: Scalar> GroupHom<T> {
    pub fn new(domain: Presentation<T>, codomain: Presentation<T>, matrix: Matrix<T>) -> Result<Self> {
        if matrix.rows() != codomain.generators() || matrix.cols() != domain.generators() {
            return Err(Error::BadParameter(format!(
                "map is {}x{}, groups have {} and {} generators",
                matrix.rows(),
                matrix.cols(),
                codomain.generators(),
                domain.generators()
            )));
        }
        let image = matrix.mul(&domain.relations);
        let certificate = solve(&codomain.relations, &image)
            .ok_or_else(|| Error::Internal("map does not send relations to relations".into()))?;
        Ok(GroupHom {
            domain,
            codomain,
            matrix,
            certificate,
        })
    }

    pub fn identity(p: Presentation<T>) -> Self {
        let n = p.generators();
        let r = p.relations.cols();
        GroupHom {
            domain: p.clone(),
            codomain: p,
            matrix: Matrix::identity(n),
            certificate: Matrix::identity(r),
        }
    }

    /// `self − other`, for endomorphisms of the same presentation.
    pub fn minus(&self, other: &Self) -> Result<Self> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::BadParameter("maps have different domains".into()));
        }
        Ok(GroupHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.sub(&other.matrix),
            certificate: self.certificate.sub(&other.certificate),
        })
    }

    /// `ℤ^m / (im F + im R_H)`.
    pub fn cokernel(&self) -> FGAbelianGroup<T> {
        cokernel(&self.matrix.hstack(&self.codomain.relations))
    }

    /// `{x : F x ∈ im R_H} / im R_G`, presented on a basis of the preimage.
    pub fn kernel_presentation(&self) -> Presentation<T> {
        let n = self.domain.generators();
        let pre = kernel_basis(&self.matrix.hstack(&self.codomain.relations)).row_slice(0..n);
        let s = pre.cols();
        let rel = kernel_basis(&pre.hstack(&self.domain.relations)).row_slice(0..s);
        Presentation::new(rel)
    }

    pub fn kernel(&self) -> FGAbelianGroup<T> {
        self.kernel_presentation().group()
    }
}
