//! The vertex-vector constructions: incidence vectors of circular
//! orderings, tree vectors, level-1 network vectors, and recognition of
//! tree vectors.

use crate::error::{Error, Result};
use crate::networks::{Level1Network, PhyloTree};
use crate::ordering::CircularOrdering;
use crate::pairvec::PairVector;
use crate::rational::{log2_exact, pow2, Rat};
use crate::splits::Split;
use num_traits::{One, Zero};

/// 0/1 adjacency vector of a circular ordering: entry `{i,j}` is 1 iff the
/// taxa are cyclically adjacent.
pub fn incidence_vector(c: &CircularOrdering) -> PairVector {
    let n = c.n();
    let mut x = PairVector::zero(n);
    let cycle = c.cycle();
    for p in 0..n {
        let (i, j) = (cycle[p], cycle[(p + 1) % n]);
        x.set(i, j, Rat::one());
    }
    x
}

/// Pairwise bridge-crossing counts of a network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeCountMatrix {
    n: usize,
    counts: Vec<u32>,
    k: usize,
}

impl BridgeCountMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total bridge count.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of bridges separating `i` from `j`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.counts[crate::pairvec::pair_index(self.n, i, j)]
    }
}

/// Count, for every pair, the bridges whose removal separates the pair.
pub fn bridge_counts(net: &Level1Network) -> BridgeCountMatrix {
    let n = net.n();
    let bridges: Vec<&Split> = net.bridges().collect();
    let counts = crate::pairvec::pairs(n)
        .map(|(i, j)| bridges.iter().filter(|b| b.separates(i, j)).count() as u32)
        .collect();
    BridgeCountMatrix {
        n,
        counts,
        k: bridges.len(),
    }
}

/// The tree vector of a binary tree: entry `{i,j}` is `2^(n-3-b_ij)` where
/// `b_ij` counts the nontrivial splits separating the pair.
pub fn bme_vector(t: &PhyloTree) -> Result<PairVector> {
    let n = t.n();
    if !t.is_binary() {
        return Err(Error::NotBinary {
            got: t.split_count(),
            expected: n - 3,
        });
    }
    let splits: Vec<&Split> = t.splits().collect();
    let mut x = PairVector::zero(n);
    for (i, j) in crate::pairvec::pairs(n) {
        let b = splits.iter().filter(|s| s.separates(i, j)).count() as u32;
        x.set(i, j, pow2((n as u32 - 3) - b));
    }
    Ok(x)
}

/// The network vector: entry `{i,j}` is `2^(k-b_ij)` when some ordering
/// consistent with the displayed splits makes the pair adjacent, else 0.
pub fn network_vector(net: &Level1Network) -> PairVector {
    let n = net.n();
    let b = bridge_counts(net);
    let k = b.k() as u32;
    let orderings = net.consistent_orderings();
    let mut adjacent = vec![false; crate::pairvec::pair_count(n)];
    for c in &orderings {
        let cycle = c.cycle();
        for p in 0..n {
            let (i, j) = (cycle[p], cycle[(p + 1) % n]);
            adjacent[crate::pairvec::pair_index(n, i, j)] = true;
        }
    }
    let mut x = PairVector::zero(n);
    for (i, j) in crate::pairvec::pairs(n) {
        if adjacent[crate::pairvec::pair_index(n, i, j)] {
            x.set(i, j, pow2(k - b.get(i, j)));
        }
    }
    x
}

/// Recognize a tree vector: if `x = bme_vector(t)` for a binary tree `t`,
/// recover `t`; otherwise `None`. The candidate bridge counts are read off
/// the exponents, shifted by two to form a unit-edge tree metric, checked
/// against the four-point condition, and the reconstructed topology is
/// verified by a round trip.
pub fn tree_from_vector(x: &PairVector) -> Option<PhyloTree> {
    let n = x.n();
    // exponents: x_ij = 2^(n-3-b_ij) with 0 <= b_ij <= n-3
    let mut metric = vec![0u32; crate::pairvec::pair_count(n)];
    for ((i, j), value) in x.iter_pairs() {
        let e = log2_exact(value)?;
        if e > n as u32 - 3 {
            return None;
        }
        let b = (n as u32 - 3) - e;
        metric[crate::pairvec::pair_index(n, i, j)] = b + 2;
    }
    let m = |i: usize, j: usize| -> u32 {
        if i == j {
            0
        } else {
            metric[crate::pairvec::pair_index(n, i, j)]
        }
    };
    if !four_point_condition(n, &m) {
        return None;
    }
    let t = reconstruct_unit_binary_tree(n, &metric)?;
    if bme_vector(&t).ok()? == *x {
        Some(t)
    } else {
        None
    }
}

/// Four-point condition: for every quartet the two largest of the three
/// pairings are equal.
fn four_point_condition(n: usize, m: &dyn Fn(usize, usize) -> u32) -> bool {
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                for l in (k + 1)..=n {
                    let mut sums = [
                        m(i, j) + m(k, l),
                        m(i, k) + m(j, l),
                        m(i, l) + m(j, k),
                    ];
                    sums.sort_unstable();
                    if sums[1] != sums[2] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Reconstruct the binary topology of a unit-edge tree metric by repeated
/// cherry contraction. Returns None on any inconsistency.
fn reconstruct_unit_binary_tree(n: usize, metric: &[u32]) -> Option<PhyloTree> {
    use crate::splits::TaxonSet;
    // active clusters: (member taxa, distances to other clusters)
    let mut clusters: Vec<TaxonSet> = (1..=n).map(TaxonSet::singleton).collect();
    let mut dist: Vec<Vec<u32>> = vec![vec![0; n]; n];
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                dist[i - 1][j - 1] = metric[crate::pairvec::pair_index(n, i, j)];
            }
        }
    }
    let mut active: Vec<usize> = (0..n).collect();
    let mut splits = Vec::new();
    while active.len() > 3 {
        // find a cherry: a pair at distance exactly 2
        let mut cherry = None;
        'outer: for (ai, &a) in active.iter().enumerate() {
            for &b in active.iter().skip(ai + 1) {
                if dist[a][b] == 2 {
                    cherry = Some((a, b));
                    break 'outer;
                }
            }
        }
        let (a, b) = cherry?;
        // merge b into a; new distances are one less than the shared values
        for &c in &active {
            if c == a || c == b {
                continue;
            }
            if dist[a][c] != dist[b][c] || dist[a][c] < 3 {
                return None;
            }
            let d = dist[a][c] - 1;
            dist[a][c] = d;
            dist[c][a] = d;
        }
        clusters[a] = clusters[a].union(&clusters[b]);
        active.retain(|&c| c != b);
        if clusters[a].len() <= n - 2 {
            splits.push(Split::new(clusters[a], n).ok()?);
        }
    }
    if splits.len() != n - 3 {
        return None;
    }
    PhyloTree::new(n, splits).ok()
}

/// Sum of incidence vectors over the orderings consistent with the
/// network's displayed splits. Independent route to the network vector.
pub fn incidence_sum(net: &Level1Network) -> PairVector {
    let mut total = PairVector::zero(net.n());
    for c in net.consistent_orderings() {
        total += &incidence_vector(&c);
    }
    total
}
