use std::fmt;
use std::ops::{Add, Index};

use serde::{Deserialize, Serialize};

/// An element of the monoid `ℕ^k`, ordered coordinatewise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn new(coords: Vec<u32>) -> Self {
        Degree(coords)
    }

    pub fn zero(k: usize) -> Self {
        Degree(vec![0; k])
    }

    /// The generator `e_i` (0-based coordinate `i`).
    pub fn unit(k: usize, i: usize) -> Self {
        let mut d = vec![0; k];
        d[i] = 1;
        Degree(d)
    }

    pub fn splat(k: usize, value: u32) -> Self {
        Degree(vec![value; k])
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Coordinatewise `self ≤ other`.
    pub fn le(&self, other: &Degree) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn meet(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self - other`, or `None` unless `other ≤ self`.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        if !other.le(self) {
            return None;
        }
        Some(Degree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Concatenate coordinates: `(p, m) ∈ ℕ^{k+l}`.
    pub fn concat(&self, other: &Degree) -> Degree {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Degree(v)
    }

    /// Split into the first `k` and remaining coordinates.
    pub fn split_at(&self, k: usize) -> (Degree, Degree) {
        (Degree(self.0[..k].to_vec()), Degree(self.0[k..].to_vec()))
    }

    /// All degrees `d` with `0 ≤ d ≤ self`, in lexicographic order.
    pub fn box_below(&self) -> Vec<Degree> {
        let mut out = vec![Vec::with_capacity(self.0.len())];
        for &hi in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=hi).map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Degree).collect()
    }

    /// The ascending color sequence of a normal-form word of this degree
    /// (0-based colors).
    pub fn color_sequence(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat(i).take(n as usize))
            .collect()
    }
}

impl Index<usize> for Degree {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl Add for &Degree {
    type Output = Degree;

    fn add(self, rhs: &Degree) -> Degree {
        Degree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for Degree {
    fn from(v: Vec<u32>) -> Self {
        Degree(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn box_below_counts() {
        let d = Degree::new(vec![2, 1]);
        let b = d.box_below();
        assert_eq!(b.len(), 6);
        assert_eq!(b[0], Degree::zero(2));
        assert_eq!(b[5], d);
    }

    #[test]
    fn color_sequence_is_ascending() {
        assert_eq!(Degree::new(vec![2, 0, 1]).color_sequence(), vec![0, 0, 2]);
    }

    proptest! {
        #[test]
        fn meet_and_join_bracket(a in prop::collection::vec(0u32..5, 3), b in prop::collection::vec(0u32..5, 3)) {
            let (a, b) = (Degree::new(a), Degree::new(b));
            let (m, j) = (a.meet(&b), a.join(&b));
            prop_assert!(m.le(&a) && m.le(&b));
            prop_assert!(a.le(&j) && b.le(&j));
            prop_assert_eq!(j.checked_sub(&a).map(|d| &d + &a), Some(j.clone()));
        }
    }
}
