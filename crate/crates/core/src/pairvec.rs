//! Vectors indexed by unordered taxon pairs in lexicographic order.

use crate::error::{Error, Result};
use crate::rational::Rat;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, AddAssign};

/// Number of unordered pairs on `n` taxa.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Lexicographic index of pair `{i,j}`, 1-based taxa, `i != j`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(1 <= i && i < j && j <= n);
    // pairs (1,2)...(1,n), (2,3)...(2,n), ...
    (i - 1) * n - i * (i - 1) / 2 + (j - i) - 1
}

/// All pairs `{i,j}` with `i < j` in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// A vector with one exact-rational entry per unordered taxon pair,
/// in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairVector {
    n: usize,
    entries: Vec<Rat>,
}

impl PairVector {
    pub fn zero(n: usize) -> Self {
        PairVector {
            n,
            entries: vec![Rat::zero(); pair_count(n)],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != pair_count(n) {
            return Err(Error::DimensionMismatch {
                expected: pair_count(n),
                got: entries.len(),
            });
        }
        Ok(PairVector { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[pair_index(self.n, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        let idx = pair_index(self.n, i, j);
        self.entries[idx] = value;
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.entries
    }

    pub fn dot(&self, other: &PairVector) -> Rat {
        debug_assert_eq!(self.n, other.n);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Sum of entries involving taxon `j` (row sum of the symmetric matrix).
    pub fn row_sum(&self, j: usize) -> Rat {
        (1..=self.n)
            .filter(|&i| i != j)
            .map(|i| self.get(i, j).clone())
            .sum()
    }

    pub fn iter_pairs(&self) -> impl Iterator<Item = ((usize, usize), &Rat)> {
        pairs(self.n).zip(self.entries.iter())
    }
}

impl Add<&PairVector> for &PairVector {
    type Output = PairVector;
    fn add(self, rhs: &PairVector) -> PairVector {
        debug_assert_eq!(self.n, rhs.n);
        PairVector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl AddAssign<&PairVector> for PairVector {
    fn add_assign(&mut self, rhs: &PairVector) {
        debug_assert_eq!(self.n, rhs.n);
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            *a += b;
        }
    }
}

impl fmt::Debug for PairVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn lexicographic_indexing() {
        let order: Vec<(usize, usize)> = pairs(4).collect();
        assert_eq!(order, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        for (k, (i, j)) in pairs(5).enumerate() {
            assert_eq!(pair_index(5, i, j), k);
            assert_eq!(pair_index(5, j, i), k);
        }
    }

    #[test]
    fn row_sums() {
        let v = PairVector::from_entries(4, (1..=6).map(rat).collect()).unwrap();
        // matrix rows: 1:(1,2,3) 2:(1,4,5) 3:(2,4,6) 4:(3,5,6)
        assert_eq!(v.row_sum(1), rat(6));
        assert_eq!(v.row_sum(3), rat(12));
    }
}
