//! Circular orderings of the taxa, up to rotation and reflection.

use crate::error::{Error, Result};
use crate::splits::{Split, SplitSystem};
use std::fmt;

/// A cyclic arrangement of `{1,..,n}`. The stored cycle is the canonical
/// representative of its class under rotation and reflection: taxon 1
/// first, and the second element smaller than the last.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularOrdering {
    cycle: Vec<usize>,
}

impl CircularOrdering {
    pub fn new(cycle: Vec<usize>) -> Result<Self> {
        let n = cycle.len();
        if n < 4 {
            return Err(Error::InvalidOrdering(format!(
                "need at least 4 taxa, got {n}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &t in &cycle {
            if t < 1 || t > n || seen[t] {
                return Err(Error::InvalidOrdering(format!(
                    "cycle must be a permutation of 1..={n}"
                )));
            }
            seen[t] = true;
        }
        Ok(CircularOrdering {
            cycle: canonicalize(cycle),
        })
    }

    pub fn n(&self) -> usize {
        self.cycle.len()
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Position of `taxon` in the canonical cycle (0-based).
    pub fn position(&self, taxon: usize) -> usize {
        self.cycle.iter().position(|&t| t == taxon).expect("taxon in cycle")
    }

    /// True iff `i` and `j` occupy cyclically adjacent positions.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let n = self.n();
        let (p, q) = (self.position(i), self.position(j));
        (p + 1) % n == q || (q + 1) % n == p
    }

    /// True iff one part of the split occupies consecutive cycle positions,
    /// i.e. the split is drawable as a diagonal of the labeled n-gon.
    pub fn hosts(&self, s: &Split) -> bool {
        debug_assert_eq!(self.n(), s.n());
        let n = self.n();
        let member: Vec<bool> = self.cycle.iter().map(|&t| s.part().contains(t)).collect();
        let mut blocks = 0;
        for p in 0..n {
            if member[p] && !member[(p + n - 1) % n] {
                blocks += 1;
            }
        }
        blocks == 1
    }

    /// The `n(n-3)/2` nontrivial splits drawable as diagonals of this n-gon.
    pub fn diagonal_splits(&self) -> Vec<Split> {
        let n = self.n();
        let mut out = Vec::new();
        // arc of cycle positions p+1..=q, sizes 2..=n-2; each split arises
        // from exactly two complementary arcs, so keep arcs not containing
        // position 0 plus arcs starting at position 1 as canonical reps and
        // dedupe through Split's canonical form.
        let mut seen = std::collections::BTreeSet::new();
        for p in 0..n {
            for len in 2..=(n - 2) {
                let taxa: Vec<usize> = (1..=len).map(|o| self.cycle[(p + o) % n]).collect();
                let s = Split::from_taxa(taxa, n).expect("arc split");
                if seen.insert(s) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    /// All ordering classes on `n` taxa; there are `(n-1)!/2` of them.
    pub fn all_classes(n: usize) -> Vec<CircularOrdering> {
        let rest: Vec<usize> = (2..=n).collect();
        let mut out = Vec::new();
        let mut perm = rest.clone();
        permute(&mut perm, 0, &mut |p| {
            // canonical class representative: second element < last
            if p[0] < p[n - 2] {
                let mut cycle = Vec::with_capacity(n);
                cycle.push(1);
                cycle.extend_from_slice(p);
                out.push(CircularOrdering { cycle });
            }
        });
        out.sort();
        out
    }
}

fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, k: usize, visit: &mut F) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn canonicalize(cycle: Vec<usize>) -> Vec<usize> {
    let n = cycle.len();
    let start = cycle.iter().position(|&t| t == 1).expect("taxon 1 present");
    let rotated: Vec<usize> = (0..n).map(|p| cycle[(start + p) % n]).collect();
    if rotated[1] < rotated[n - 1] {
        rotated
    } else {
        let mut reflected = Vec::with_capacity(n);
        reflected.push(1);
        reflected.extend(rotated[1..].iter().rev());
        reflected
    }
}

/// All ordering classes hosting every split of the system. Empty iff starting
/// from a non-circular system.
pub fn consistent_orderings(system: &SplitSystem) -> Vec<CircularOrdering> {
    CircularOrdering::all_classes(system.n())
        .into_iter()
        .filter(|c| system.splits().all(|s| c.hosts(s)))
        .collect()
}

/// A split system is circular when some labeled n-gon hosts all its splits.
pub fn is_circular(system: &SplitSystem) -> bool {
    CircularOrdering::all_classes(system.n())
        .into_iter()
        .any(|c| system.splits().all(|s| c.hosts(&s)))
}

impl fmt::Debug for CircularOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, t) in self.cycle.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(cycle: &[usize]) -> CircularOrdering {
        CircularOrdering::new(cycle.to_vec()).unwrap()
    }

    fn split(taxa: &[usize], n: usize) -> Split {
        Split::from_taxa(taxa.iter().copied(), n).unwrap()
    }

    #[test]
    fn canonical_form_is_class_invariant() {
        let a = ord(&[1, 2, 3, 4]);
        let b = ord(&[2, 3, 4, 1]); // rotation
        let c = ord(&[1, 4, 3, 2]); // reflection
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.cycle(), &[1, 2, 3, 4]);
    }

    #[test]
    fn class_counts() {
        assert_eq!(CircularOrdering::all_classes(4).len(), 3);
        assert_eq!(CircularOrdering::all_classes(5).len(), 12);
        assert_eq!(CircularOrdering::all_classes(6).len(), 60);
    }

    #[test]
    fn interval_membership() {
        let c = ord(&[1, 2, 3, 4]);
        assert!(c.hosts(&split(&[1, 2], 4)));
        assert!(!c.hosts(&split(&[1, 3], 4)));
        assert!(ord(&[1, 3, 2, 4]).hosts(&split(&[1, 3], 4)));
    }

    #[test]
    fn diagonal_count_matches_polygon() {
        for n in 4..=7 {
            for c in CircularOrdering::all_classes(n) {
                assert_eq!(c.diagonal_splits().len(), n * (n - 3) / 2);
            }
        }
    }

    #[test]
    fn consistent_orderings_of_single_split() {
        let ss = SplitSystem::new(4, [split(&[1, 2], 4)]).unwrap();
        let got = consistent_orderings(&ss);
        assert_eq!(got, vec![ord(&[1, 2, 3, 4]), ord(&[1, 2, 4, 3])]);
    }

    #[test]
    fn consistent_orderings_of_square() {
        let ss = SplitSystem::new(4, [split(&[1, 2], 4), split(&[2, 3], 4)]).unwrap();
        let got = consistent_orderings(&ss);
        assert_eq!(got, vec![ord(&[1, 2, 3, 4])]);
    }

    #[test]
    fn empty_system_allows_everything() {
        let ss = SplitSystem::empty(4);
        assert_eq!(consistent_orderings(&ss).len(), 3);
        assert!(is_circular(&ss));
    }

    #[test]
    fn circularity() {
        let tree = SplitSystem::new(5, [split(&[1, 2], 5), split(&[4, 5], 5)]).unwrap();
        assert!(is_circular(&tree));
        let all3 = SplitSystem::new(
            4,
            [split(&[1, 2], 4), split(&[1, 3], 4), split(&[1, 4], 4)],
        )
        .unwrap();
        assert!(!is_circular(&all3));
    }

    #[test]
    fn compatible_diagonals_do_not_cross() {
        // two splits hosted by a common polygon are compatible iff their
        // diagonals do not cross; exhaustive over pairs for n <= 6
        for n in 4..=6 {
            for c in CircularOrdering::all_classes(n) {
                let diags = c.diagonal_splits();
                for a in &diags {
                    for b in &diags {
                        let cross = diagonals_cross(&c, a, b);
                        assert_eq!(a.compatible(b), !cross, "{a:?} vs {b:?} in {c:?}");
                    }
                }
            }
        }
    }

    // independent geometric crossing test on polygon vertex indices
    fn diagonals_cross(c: &CircularOrdering, a: &Split, b: &Split) -> bool {
        let (a1, a2) = chord(c, a);
        let (b1, b2) = chord(c, b);
        if a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 {
            return false;
        }
        let between = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
        between(b1, a1, a2) != between(b2, a1, a2)
    }

    fn chord(c: &CircularOrdering, s: &Split) -> (usize, usize) {
        // polygon vertex p sits after the edge at position p
        let n = c.n();
        let member: Vec<bool> = c.cycle().iter().map(|&t| s.part().contains(t)).collect();
        for start in 0..n {
            if member[start] && !member[(start + n - 1) % n] {
                let len = s.part().len();
                let p = (start + n - 1) % n;
                let q = (start + len - 1) % n;
                return (p.min(q), p.max(q));
            }
        }
        unreachable!("split not hosted by ordering")
    }
}
