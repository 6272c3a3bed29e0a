//! Splits (bipartitions of the taxon set), split systems, and weightings.

use crate::error::{Error, Result};
use crate::pairvec::PairVector;
use crate::rational::Rat;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

/// A subset of the taxa `{1,..,n}`, stored as a bitmask (bit `i-1` = taxon `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TaxonSet {
    bits: u32,
}

impl TaxonSet {
    pub fn empty() -> Self {
        TaxonSet { bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        TaxonSet {
            bits: (1u32 << n) - 1,
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(taxa: I) -> Self {
        let mut bits = 0;
        for t in taxa {
            debug_assert!((1..=32).contains(&t));
            bits |= 1 << (t - 1);
        }
        TaxonSet { bits }
    }

    /// Interpret a raw bitmask (bit `i-1` = taxon `i`).
    pub fn from_bits(bits: u32) -> Self {
        TaxonSet { bits }
    }

    pub fn singleton(taxon: usize) -> Self {
        TaxonSet::from_iter([taxon])
    }

    pub fn contains(&self, taxon: usize) -> bool {
        self.bits & (1 << (taxon - 1)) != 0
    }

    pub fn insert(&mut self, taxon: usize) {
        self.bits |= 1 << (taxon - 1);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn complement(&self, n: usize) -> TaxonSet {
        TaxonSet {
            bits: !self.bits & TaxonSet::full(n).bits,
        }
    }

    pub fn intersects(&self, other: &TaxonSet) -> bool {
        self.bits & other.bits != 0
    }

    pub fn is_subset_of(&self, other: &TaxonSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &TaxonSet) -> TaxonSet {
        TaxonSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=32usize).filter(move |t| self.contains(*t))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for TaxonSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, t) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "}}")
    }
}

/// A bipartition `A|B` of `{1,..,n}`. The canonical representative is the
/// part that does not contain taxon 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Split {
    part: TaxonSet,
    n: usize,
}

impl Split {
    /// Build a split from either part; the stored part is the one without taxon 1.
    pub fn new(part: TaxonSet, n: usize) -> Result<Self> {
        if n < 4 || n > 32 {
            return Err(Error::Range {
                what: "taxon count",
                value: n,
                min: 4,
                max: 32,
            });
        }
        if !part.is_subset_of(&TaxonSet::full(n)) {
            return Err(Error::InvalidSplit(format!(
                "part {part:?} not within 1..={n}"
            )));
        }
        let part = if part.contains(1) {
            part.complement(n)
        } else {
            part
        };
        if part.is_empty() || part.len() == n {
            return Err(Error::InvalidSplit("part must be proper and nonempty".into()));
        }
        Ok(Split { part, n })
    }

    pub fn from_taxa<I: IntoIterator<Item = usize>>(taxa: I, n: usize) -> Result<Self> {
        Split::new(TaxonSet::from_iter(taxa), n)
    }

    /// The trivial split separating `taxon` from the rest.
    pub fn trivial(taxon: usize, n: usize) -> Self {
        Split::new(TaxonSet::singleton(taxon), n).expect("singleton split")
    }

    /// Canonical part: the side not containing taxon 1.
    pub fn part(&self) -> TaxonSet {
        self.part
    }

    pub fn other_part(&self) -> TaxonSet {
        self.part.complement(self.n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// A split is trivial when one side is a singleton.
    pub fn is_trivial(&self) -> bool {
        self.part.len() == 1 || self.part.len() == self.n - 1
    }

    /// True iff the split puts `i` and `j` on different sides.
    pub fn separates(&self, i: usize, j: usize) -> bool {
        self.part.contains(i) != self.part.contains(j)
    }

    /// Two splits are compatible iff one of the four part intersections is empty.
    pub fn compatible(&self, other: &Split) -> bool {
        debug_assert_eq!(self.n, other.n);
        let (a, b) = (self.part, self.other_part());
        let (c, d) = (other.part, other.other_part());
        !a.intersects(&c) || !a.intersects(&d) || !b.intersects(&c) || !b.intersects(&d)
    }

    /// Crossing is the negation of compatibility.
    pub fn crosses(&self, other: &Split) -> bool {
        !self.compatible(other)
    }
}

impl fmt::Debug for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}|{:?}", self.part, self.other_part())
    }
}

/// A set of nontrivial splits on a common taxon set. The trivial splits are
/// always understood to be present and are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SplitSystem {
    n: usize,
    splits: BTreeSet<Split>,
}

impl SplitSystem {
    pub fn empty(n: usize) -> Self {
        SplitSystem {
            n,
            splits: BTreeSet::new(),
        }
    }

    pub fn new<I: IntoIterator<Item = Split>>(n: usize, splits: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for s in splits {
            if s.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: s.n(),
                });
            }
            if s.is_trivial() {
                continue; // trivial splits are implicit
            }
            set.insert(s);
        }
        Ok(SplitSystem { n, splits: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.splits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.splits.is_empty()
    }

    pub fn contains(&self, s: &Split) -> bool {
        s.is_trivial() || self.splits.contains(s)
    }

    pub fn splits(&self) -> impl Iterator<Item = &Split> {
        self.splits.iter()
    }

    pub fn insert(&mut self, s: Split) {
        if !s.is_trivial() {
            self.splits.insert(s);
        }
    }

    /// All trivial splits on the same taxon set.
    pub fn trivial_splits(&self) -> impl Iterator<Item = Split> + '_ {
        (1..=self.n).map(move |t| Split::trivial(t, self.n))
    }

    /// Nontrivial splits followed by the implicit trivial ones.
    pub fn all_splits(&self) -> impl Iterator<Item = Split> + '_ {
        self.splits.iter().copied().chain(self.trivial_splits())
    }

    /// `a` refines `b` when `a`'s splits contain `b`'s.
    pub fn refines(&self, other: &SplitSystem) -> bool {
        self.n == other.n && other.splits.is_subset(&self.splits)
    }
}

impl fmt::Debug for SplitSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.splits.iter()).finish()
    }
}

/// A nonnegative rational weight for every split of a system, the implicit
/// trivial splits included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weighting {
    n: usize,
    weights: BTreeMap<Split, Rat>,
}

impl Weighting {
    pub fn new(n: usize) -> Self {
        Weighting {
            n,
            weights: BTreeMap::new(),
        }
    }

    /// Weight 1 on every split of the system and every trivial split.
    pub fn unit(system: &SplitSystem) -> Self {
        let mut w = Weighting::new(system.n());
        for s in system.all_splits() {
            w.set(s, Rat::from_integer(1.into()));
        }
        w
    }

    pub fn set(&mut self, split: Split, weight: Rat) {
        debug_assert!(!weight < Rat::zero());
        self.weights.insert(split, weight);
    }

    pub fn get(&self, split: &Split) -> Option<&Rat> {
        self.weights.get(split)
    }

    fn require(&self, split: &Split) -> Result<&Rat> {
        self.weights
            .get(split)
            .ok_or_else(|| Error::MissingWeight(format!("{split:?}")))
    }
}

/// The distance vector of a weighted split system: entry `{i,j}` is the
/// total weight of the splits separating `i` from `j` (trivial splits
/// included). Rejects weightings that do not cover every split.
pub fn distance_vector(system: &SplitSystem, w: &Weighting) -> Result<PairVector> {
    let n = system.n();
    let mut d = PairVector::zero(n);
    for s in system.all_splits() {
        let weight = w.require(&s)?;
        if weight.is_zero() {
            continue;
        }
        for i in 1..=n {
            for j in (i + 1)..=n {
                if s.separates(i, j) {
                    let v = d.get(i, j) + weight;
                    d.set(i, j, v);
                }
            }
        }
    }
    Ok(d)
}

/// Total weight `W(s)`: the sum of all weights, trivial splits included.
pub fn total_weight(system: &SplitSystem, w: &Weighting) -> Result<Rat> {
    let mut total = Rat::zero();
    for s in system.all_splits() {
        total += w.require(&s)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn split(taxa: &[usize], n: usize) -> Split {
        Split::from_taxa(taxa.iter().copied(), n).unwrap()
    }

    #[test]
    fn canonical_representative_is_orientation_free() {
        let a = split(&[3, 4], 4);
        let b = split(&[1, 2], 4);
        assert_eq!(a, b);
        assert!(!a.part().contains(1));
    }

    #[test]
    fn triviality() {
        assert!(split(&[2], 4).is_trivial());
        assert!(split(&[2, 3, 4], 4).is_trivial()); // separates taxon 1
        assert!(!split(&[3, 4], 4).is_trivial());
        assert!(!split(&[2, 3], 5).is_trivial());
    }

    #[test]
    fn compatibility() {
        let s = split(&[1, 2], 4);
        assert!(s.compatible(&s));
        assert!(!s.compatible(&split(&[1, 3], 4)));
        assert!(split(&[1, 2], 5).compatible(&split(&[4, 5], 5)));
    }

    #[test]
    fn crossing_negates_compatibility() {
        let a = split(&[1, 2], 4);
        let b = split(&[2, 3], 4);
        assert!(a.crosses(&b));
        assert!(!a.crosses(&a));
        assert!(!split(&[1, 2], 5).crosses(&split(&[3, 4], 5)));
    }

    #[test]
    fn distance_vector_of_quartet_tree() {
        let ss = SplitSystem::new(4, [split(&[1, 2], 4)]).unwrap();
        let w = Weighting::unit(&ss);
        let d = distance_vector(&ss, &w).unwrap();
        let expect: Vec<Rat> = [2, 3, 3, 3, 3, 2].iter().map(|&x| rat(x)).collect();
        assert_eq!(d.entries(), &expect[..]);
        assert_eq!(total_weight(&ss, &w).unwrap(), rat(5));
    }

    #[test]
    fn distance_vector_of_square_system() {
        let ss = SplitSystem::new(4, [split(&[1, 2], 4), split(&[2, 3], 4)]).unwrap();
        let w = Weighting::unit(&ss);
        let d = distance_vector(&ss, &w).unwrap();
        let expect: Vec<Rat> = [3, 4, 3, 3, 4, 3].iter().map(|&x| rat(x)).collect();
        assert_eq!(d.entries(), &expect[..]);
        assert_eq!(total_weight(&ss, &w).unwrap(), rat(6));
    }

    #[test]
    fn zero_weights_give_zero_vector() {
        let ss = SplitSystem::new(4, [split(&[1, 2], 4)]).unwrap();
        let mut w = Weighting::new(4);
        for s in ss.all_splits() {
            w.set(s, rat(0));
        }
        let d = distance_vector(&ss, &w).unwrap();
        assert!(d.entries().iter().all(|e| e == &rat(0)));
        assert_eq!(total_weight(&ss, &w).unwrap(), rat(0));
    }

    #[test]
    fn missing_weight_rejected() {
        let ss = SplitSystem::new(4, [split(&[1, 2], 4)]).unwrap();
        let w = Weighting::new(4);
        assert!(matches!(
            distance_vector(&ss, &w),
            Err(Error::MissingWeight(_))
        ));
    }

    #[test]
    fn distance_vector_is_linear_in_weights() {
        let ss = SplitSystem::new(4, [split(&[1, 2], 4), split(&[2, 3], 4)]).unwrap();
        let mut w1 = Weighting::new(4);
        let mut w2 = Weighting::new(4);
        let mut wsum = Weighting::new(4);
        for (k, s) in ss.all_splits().enumerate() {
            let a = rat(k as i64 + 1);
            let b = rat(2 * k as i64 + 1);
            w1.set(s, a.clone());
            w2.set(s, b.clone());
            wsum.set(s, a + b);
        }
        let d1 = distance_vector(&ss, &w1).unwrap();
        let d2 = distance_vector(&ss, &w2).unwrap();
        let ds = distance_vector(&ss, &wsum).unwrap();
        assert_eq!(&d1 + &d2, ds);
    }
}
