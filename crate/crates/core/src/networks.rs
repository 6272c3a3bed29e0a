//! Split networks in their polygonal representation: bridges, external
//! refinement, exterior (level-1) networks, displayed splits, and
//! enumeration of binary trees and binary level-1 networks.

use crate::error::{Error, Result};
use crate::ordering::{consistent_orderings, CircularOrdering};
use crate::splits::{Split, SplitSystem};
use std::collections::{BTreeSet, HashMap};

/// Default enumeration caps; overridable through the `*_capped` variants.
pub const DEFAULT_TREE_CAP: usize = 10;
pub const DEFAULT_NETWORK_CAP: usize = 8;

/// A circular split system together with a hosting ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularSplitNetwork {
    ordering: CircularOrdering,
    system: SplitSystem,
}

impl CircularSplitNetwork {
    pub fn new(ordering: CircularOrdering, system: SplitSystem) -> Result<Self> {
        if ordering.n() != system.n() {
            return Err(Error::DimensionMismatch {
                expected: ordering.n(),
                got: system.n(),
            });
        }
        for s in system.splits() {
            if !ordering.hosts(s) {
                return Err(Error::InvalidNetwork(format!(
                    "split {s:?} is not an interval of {ordering:?}"
                )));
            }
        }
        Ok(CircularSplitNetwork { ordering, system })
    }

    pub fn ordering(&self) -> &CircularOrdering {
        &self.ordering
    }

    pub fn system(&self) -> &SplitSystem {
        &self.system
    }

    pub fn n(&self) -> usize {
        self.system.n()
    }

    /// The bridges: nontrivial splits compatible with every other split of
    /// the system (the noncrossing diagonals of the polygon).
    pub fn bridges(&self) -> Vec<Split> {
        self.system
            .splits()
            .filter(|s| self.system.splits().all(|t| s.compatible(t)))
            .copied()
            .collect()
    }

    /// Externally refined: no nontrivial split can be added that is hosted by
    /// the ordering and compatible with every split already present.
    pub fn is_externally_refined(&self) -> bool {
        self.addable_diagonal().is_none()
    }

    fn addable_diagonal(&self) -> Option<Split> {
        self.ordering
            .diagonal_splits()
            .into_iter()
            .find(|cand| {
                !self.system.contains(cand)
                    && self.system.splits().all(|s| cand.compatible(s))
            })
    }

    /// Greedily add noncrossing diagonals until externally refined.
    pub fn externally_refine(&self) -> CircularSplitNetwork {
        let mut net = self.clone();
        while let Some(d) = net.addable_diagonal() {
            net.system.insert(d);
        }
        net
    }

    /// The exterior image: forget everything but the ordering and the
    /// bridges. Only defined for externally refined networks.
    pub fn exterior_network(&self) -> Result<Level1Network> {
        if let Some(d) = self.addable_diagonal() {
            return Err(Error::NotExternallyRefined(format!("{d:?}")));
        }
        Level1Network::new(self.ordering.clone(), self.bridges())
    }
}

/// A cell of the polygon subdivision induced by the bridge diagonals.
/// Corners are polygon vertex indices in cyclic order; a 3-sided cell is a
/// tree node of the network, a cell with 4 or more sides is a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    corners: Vec<usize>,
}

impl Cell {
    pub fn corners(&self) -> &[usize] {
        &self.corners
    }

    pub fn side_count(&self) -> usize {
        self.corners.len()
    }

    pub fn is_cycle(&self) -> bool {
        self.corners.len() >= 4
    }
}

/// A binary level-1 network: a circular ordering class plus pairwise
/// noncrossing nontrivial diagonals (the bridges). Every cell of the
/// induced polygon subdivision has at least three sides, so all internal
/// degrees are three.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level1Network {
    ordering: CircularOrdering,
    bridges: BTreeSet<Split>,
    cells: Vec<Cell>,
}

impl Level1Network {
    pub fn new<I: IntoIterator<Item = Split>>(
        ordering: CircularOrdering,
        bridges: I,
    ) -> Result<Self> {
        let n = ordering.n();
        let mut set = BTreeSet::new();
        for b in bridges {
            if b.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: b.n(),
                });
            }
            if b.is_trivial() {
                return Err(Error::InvalidNetwork(format!("trivial bridge {b:?}")));
            }
            if !ordering.hosts(&b) {
                return Err(Error::InvalidNetwork(format!(
                    "bridge {b:?} is not an interval of {ordering:?}"
                )));
            }
            set.insert(b);
        }
        for a in &set {
            for b in &set {
                if a < b && a.crosses(b) {
                    return Err(Error::InvalidNetwork(format!(
                        "bridges {a:?} and {b:?} cross"
                    )));
                }
            }
        }
        let chords: Vec<(usize, usize)> = set.iter().map(|s| chord_of(&ordering, s)).collect();
        let cells = subdivide(n, &chords);
        Ok(Level1Network {
            ordering,
            bridges: set,
            cells,
        })
    }

    pub fn n(&self) -> usize {
        self.ordering.n()
    }

    /// Number of bridges.
    pub fn bridge_count(&self) -> usize {
        self.bridges.len()
    }

    pub fn ordering(&self) -> &CircularOrdering {
        &self.ordering
    }

    pub fn bridges(&self) -> impl Iterator<Item = &Split> {
        self.bridges.iter()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// All nontrivial splits displayed by minimal cuts: the bridges plus,
    /// for each cycle cell, the splits cut by chords between its corners.
    pub fn displayed_splits(&self) -> SplitSystem {
        let n = self.n();
        let mut out = SplitSystem::empty(n);
        for b in &self.bridges {
            out.insert(*b);
        }
        for cell in &self.cells {
            if !cell.is_cycle() {
                continue;
            }
            let cs = cell.corners();
            for x in 0..cs.len() {
                for y in (x + 1)..cs.len() {
                    if let Some(s) = split_of_chord(&self.ordering, cs[x], cs[y]) {
                        out.insert(s);
                    }
                }
            }
        }
        out
    }

    /// Orderings hosting every displayed split; there are `2^k` of them.
    pub fn consistent_orderings(&self) -> Vec<CircularOrdering> {
        consistent_orderings(&self.displayed_splits())
    }

    /// The same network re-anchored at the smallest consistent ordering.
    pub fn canonicalized(&self) -> Level1Network {
        let mut orders = self.consistent_orderings();
        orders.sort();
        let first = orders.into_iter().next().expect("own ordering is consistent");
        Level1Network::new(first, self.bridges.iter().copied()).expect("same bridges")
    }
}

/// Chord endpoints (polygon vertex indices, normalized min < max) of a split
/// hosted by the ordering. Polygon vertex `p` sits between the edges at
/// positions `p` and `p+1 (mod n)`.
fn chord_of(ordering: &CircularOrdering, s: &Split) -> (usize, usize) {
    let n = ordering.n();
    let member: Vec<bool> = ordering
        .cycle()
        .iter()
        .map(|&t| s.part().contains(t))
        .collect();
    for start in 0..n {
        if member[start] && !member[(start + n - 1) % n] {
            let len = s.part().len();
            let p = (start + n - 1) % n;
            let q = (start + len - 1) % n;
            return (p.min(q), p.max(q));
        }
    }
    unreachable!("split not hosted by ordering");
}

/// The nontrivial split cut off by the chord from vertex `p` to vertex `q`,
/// or None when the chord cuts a single edge or is a full side.
fn split_of_chord(ordering: &CircularOrdering, p: usize, q: usize) -> Option<Split> {
    let n = ordering.n();
    let (p, q) = (p.min(q), p.max(q));
    let len = q - p;
    if len < 2 || len > n - 2 {
        return None;
    }
    let taxa: Vec<usize> = (p + 1..=q).map(|pos| ordering.cycle()[pos]).collect();
    Some(Split::from_taxa(taxa, n).expect("chord split"))
}

/// Subdivide the polygon `0..n-1` by pairwise noncrossing chords.
fn subdivide(n: usize, chords: &[(usize, usize)]) -> Vec<Cell> {
    let mut cells = Vec::new();
    let corners: Vec<usize> = (0..n).collect();
    subdivide_region(corners, chords.to_vec(), &mut cells);
    cells.sort_by(|a, b| a.corners.cmp(&b.corners));
    cells
}

fn subdivide_region(corners: Vec<usize>, chords: Vec<(usize, usize)>, out: &mut Vec<Cell>) {
    if chords.is_empty() {
        out.push(Cell { corners });
        return;
    }
    let (p, q) = chords[0];
    let ip = corners.iter().position(|&c| c == p).expect("chord endpoint");
    let iq = corners.iter().position(|&c| c == q).expect("chord endpoint");
    let (lo, hi) = (ip.min(iq), ip.max(iq));
    let side_a: Vec<usize> = corners[lo..=hi].to_vec();
    let side_b: Vec<usize> = corners[hi..]
        .iter()
        .chain(corners[..=lo].iter())
        .copied()
        .collect();
    let in_a: BTreeSet<usize> = side_a.iter().copied().collect();
    let (mut chords_a, mut chords_b) = (Vec::new(), Vec::new());
    for &(a, b) in &chords[1..] {
        // noncrossing chords lie fully inside one side; chords touching the
        // dividing chord's endpoints go where their other endpoint lives
        if in_a.contains(&a) && in_a.contains(&b) && !(a == p && b == q) && !(a == q && b == p) {
            chords_a.push((a, b));
        } else {
            chords_b.push((a, b));
        }
    }
    subdivide_region(side_a, chords_a, out);
    subdivide_region(side_b, chords_b, out);
}

/// An unrooted phylogenetic tree on `{1,..,n}`: a set of pairwise compatible
/// nontrivial splits. Binary iff it has `n-3` of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhyloTree {
    n: usize,
    splits: BTreeSet<Split>,
}

impl PhyloTree {
    pub fn new<I: IntoIterator<Item = Split>>(n: usize, splits: I) -> Result<Self> {
        let system = SplitSystem::new(n, splits)?;
        let splits: BTreeSet<Split> = system.splits().copied().collect();
        for a in &splits {
            for b in &splits {
                if a < b && a.crosses(b) {
                    return Err(Error::InvalidNetwork(format!(
                        "incompatible tree splits {a:?}, {b:?}"
                    )));
                }
            }
        }
        Ok(PhyloTree { n, splits })
    }

    /// The star tree: no nontrivial splits.
    pub fn star(n: usize) -> Self {
        PhyloTree {
            n,
            splits: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn splits(&self) -> impl Iterator<Item = &Split> {
        self.splits.iter()
    }

    pub fn split_count(&self) -> usize {
        self.splits.len()
    }

    pub fn is_binary(&self) -> bool {
        self.splits.len() == self.n - 3
    }

    /// Total edge count including the n leaf edges.
    pub fn edge_count(&self) -> usize {
        self.n + self.splits.len()
    }

    pub fn as_split_system(&self) -> SplitSystem {
        SplitSystem::new(self.n, self.splits.iter().copied()).expect("valid system")
    }

    /// `self` refines `other` when its split set contains the other's.
    pub fn refines(&self, other: &PhyloTree) -> bool {
        self.n == other.n && other.splits.is_subset(&self.splits)
    }

    pub fn contains_split(&self, s: &Split) -> bool {
        self.splits.contains(s)
    }

    /// A cherry: a pair of taxa forming a 2-leaf clade.
    pub fn has_cherry(&self, a: usize, b: usize) -> bool {
        if self.n == 4 {
            // in a quartet tree the nontrivial split makes two cherries
            return self
                .splits
                .iter()
                .any(|s| s.separates(a, b) == false && (s.part().len() == 2 || s.part().len() == self.n - 2) && {
                    let two = if s.part().len() == 2 { s.part() } else { s.other_part() };
                    two.contains(a) && two.contains(b)
                });
        }
        match Split::from_taxa([a, b], self.n) {
            Ok(s) => self.splits.contains(&s),
            Err(_) => false,
        }
    }

    pub fn cherries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if self.has_cherry(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// (2n-5)!! — the number of binary trees on n leaves.
pub fn double_factorial_trees(n: usize) -> u64 {
    let mut out = 1u64;
    let mut k = 2 * n as u64 - 5;
    while k > 1 {
        out *= k;
        k -= 2;
    }
    out
}

/// All binary trees on `{1,..,n}`, each exactly once, by recursive leaf
/// insertion into every edge. Sorted by split set.
pub fn enumerate_binary_trees(n: usize) -> Result<Vec<PhyloTree>> {
    enumerate_binary_trees_capped(n, DEFAULT_TREE_CAP)
}

pub fn enumerate_binary_trees_capped(n: usize, cap: usize) -> Result<Vec<PhyloTree>> {
    if n < 4 || n > cap {
        return Err(Error::Range {
            what: "tree taxon count",
            value: n,
            min: 4,
            max: cap,
        });
    }
    // edge lists over node ids: leaves 1..=n, internal n+1..=2n-2
    let mut trees: Vec<Vec<(usize, usize)>> = vec![vec![(1, n + 1), (2, n + 1), (3, n + 1)]];
    for leaf in 4..=n {
        let fresh = n + leaf - 2;
        let mut next = Vec::with_capacity(trees.len() * (2 * leaf - 5));
        for t in &trees {
            for (k, &(u, v)) in t.iter().enumerate() {
                let mut nt: Vec<(usize, usize)> = Vec::with_capacity(t.len() + 2);
                nt.extend(t.iter().take(k).copied());
                nt.extend(t.iter().skip(k + 1).copied());
                nt.push((u, fresh));
                nt.push((fresh, v));
                nt.push((fresh, leaf));
                next.push(nt);
            }
        }
        trees = next;
    }
    let mut out: Vec<PhyloTree> = trees
        .iter()
        .map(|edges| tree_from_edges(n, edges))
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

fn tree_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<PhyloTree> {
    let max_node = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); max_node + 1];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut splits = Vec::new();
    for &(u, v) in edges {
        if u <= n || v <= n {
            continue; // leaf edge -> trivial split
        }
        // leaves on the u-side of edge (u,v)
        let mut stack = vec![u];
        let mut seen = vec![false; max_node + 1];
        seen[u] = true;
        seen[v] = true;
        let mut part = Vec::new();
        while let Some(x) = stack.pop() {
            if x <= n {
                part.push(x);
            }
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        splits.push(Split::from_taxa(part, n)?);
    }
    PhyloTree::new(n, splits)
}

/// All binary level-1 networks with `n` leaves and `k` bridges, deduplicated
/// by vertex vector and sorted by it.
pub fn enumerate_level1_networks(n: usize, k: usize) -> Result<Vec<Level1Network>> {
    enumerate_level1_networks_capped(n, k, DEFAULT_NETWORK_CAP)
}

pub fn enumerate_level1_networks_capped(
    n: usize,
    k: usize,
    cap: usize,
) -> Result<Vec<Level1Network>> {
    if n < 4 || n > cap {
        return Err(Error::Range {
            what: "network taxon count",
            value: n,
            min: 4,
            max: cap,
        });
    }
    if k > n - 3 {
        return Err(Error::Range {
            what: "bridge count",
            value: k,
            min: 0,
            max: n - 3,
        });
    }
    let mut by_vector: HashMap<crate::pairvec::PairVector, Level1Network> = HashMap::new();
    for ordering in CircularOrdering::all_classes(n) {
        let diagonals = ordering.diagonal_splits();
        let chords: Vec<(usize, usize)> = diagonals
            .iter()
            .map(|s| chord_of(&ordering, s))
            .collect();
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        noncrossing_subsets(&chords, k, 0, &mut chosen, &mut |subset| {
            let bridges = subset.iter().map(|&i| diagonals[i]);
            let net = Level1Network::new(ordering.clone(), bridges).expect("valid subset");
            let vector = crate::vectors::network_vector(&net);
            by_vector.entry(vector).or_insert(net);
        });
    }
    let mut out: Vec<(crate::pairvec::PairVector, Level1Network)> = by_vector.into_iter().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, net)| net.canonicalized()).collect())
}

fn noncrossing_subsets<F: FnMut(&[usize])>(
    chords: &[(usize, usize)],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut F,
) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    let need = k - chosen.len();
    for i in start..chords.len() {
        if chords.len() - i < need {
            break;
        }
        let ok = chosen.iter().all(|&j| !chords_cross(chords[j], chords[i]));
        if ok {
            chosen.push(i);
            noncrossing_subsets(chords, k, i + 1, chosen, emit);
            chosen.pop();
        }
    }
}

fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
        return false;
    }
    let between = |x: usize| a.0 < x && x < a.1;
    between(b.0) != between(b.1)
}

/// Cladistic information content: the fraction of binary trees displaying a
/// maximal pairwise-compatible subset of the network's displayed splits.
pub fn cladistic_information_content(net: &Level1Network) -> Result<crate::rational::Rat> {
    use crate::rational::Rat;
    use num_bigint::BigInt;
    let n = net.n();
    let sigma: Vec<Split> = net.displayed_splits().splits().copied().collect();
    let maximal = maximal_compatible_subsets(&sigma);
    let trees = enumerate_binary_trees(n)?;
    let count = trees
        .iter()
        .filter(|t| {
            maximal
                .iter()
                .any(|m| m.iter().all(|s| t.contains_split(s)))
        })
        .count();
    Ok(Rat::new(
        BigInt::from(count),
        BigInt::from(double_factorial_trees(n)),
    ))
}

/// All maximal pairwise-compatible subsets (maximal cliques of the
/// compatibility graph).
fn maximal_compatible_subsets(splits: &[Split]) -> Vec<Vec<Split>> {
    let m = splits.len();
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p: Vec<usize> = (0..m).collect();
    let x = Vec::new();
    bron_kerbosch(splits, &mut r, p, x, &mut out);
    out
}

fn bron_kerbosch(
    splits: &[Split],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<Split>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.iter().map(|&i| splits[i]).collect());
        return;
    }
    let mut p = p;
    let mut x = x;
    while let Some(v) = p.first().copied() {
        let compat = |i: usize| splits[i].compatible(&splits[v]) && i != v;
        r.push(v);
        bron_kerbosch(
            splits,
            r,
            p.iter().copied().filter(|&i| compat(i)).collect(),
            x.iter().copied().filter(|&i| compat(i)).collect(),
            out,
        );
        r.pop();
        p.retain(|&i| i != v);
        x.push(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn split(taxa: &[usize], n: usize) -> Split {
        Split::from_taxa(taxa.iter().copied(), n).unwrap()
    }

    fn ord(cycle: &[usize]) -> CircularOrdering {
        CircularOrdering::new(cycle.to_vec()).unwrap()
    }

    fn net(cycle: &[usize], parts: &[&[usize]]) -> CircularSplitNetwork {
        let n = cycle.len();
        let system = SplitSystem::new(n, parts.iter().map(|p| split(p, n))).unwrap();
        CircularSplitNetwork::new(ord(cycle), system).unwrap()
    }

    #[test]
    fn bridges_of_caterpillar() {
        let t = net(&[1, 2, 3, 4, 5], &[&[1, 2], &[4, 5]]);
        let mut bridges = t.bridges();
        bridges.sort();
        assert_eq!(bridges, vec![split(&[4, 5], 5), split(&[1, 2], 5)].into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>());
        assert_eq!(t.bridges().len(), 2);
    }

    #[test]
    fn square_has_no_bridges() {
        let sq = net(&[1, 2, 3, 4], &[&[1, 2], &[2, 3]]);
        assert!(sq.bridges().is_empty());
    }

    #[test]
    fn mixed_system_bridges() {
        let s = net(&[1, 2, 3, 4, 5], &[&[1, 2], &[3, 4], &[4, 5]]);
        assert_eq!(s.bridges(), vec![split(&[1, 2], 5)]);
    }

    #[test]
    fn external_refinement() {
        let binary = net(&[1, 2, 3, 4, 5], &[&[1, 2], &[4, 5]]);
        assert!(binary.is_externally_refined());
        let square = net(&[1, 2, 3, 4], &[&[1, 2], &[2, 3]]);
        assert!(square.is_externally_refined());
        let single = net(&[1, 2, 3, 4], &[&[1, 2]]);
        assert!(!single.is_externally_refined());
    }

    #[test]
    fn exterior_of_tree_is_all_bridges() {
        let tree = net(&[1, 2, 3, 4, 5], &[&[1, 2], &[4, 5]]);
        let l = tree.exterior_network().unwrap();
        assert_eq!(l.bridge_count(), 2);
        assert!(l.cells().iter().all(|c| !c.is_cycle()));
    }

    #[test]
    fn exterior_of_square_is_one_cycle() {
        let sq = net(&[1, 2, 3, 4], &[&[1, 2], &[2, 3]]);
        let l = sq.exterior_network().unwrap();
        assert_eq!(l.bridge_count(), 0);
        assert_eq!(l.cells().len(), 1);
        assert!(l.cells()[0].is_cycle());
        assert_eq!(l.cells()[0].side_count(), 4);
    }

    #[test]
    fn exterior_rejects_unrefined() {
        let single = net(&[1, 2, 3, 4], &[&[1, 2]]);
        assert!(matches!(
            single.exterior_network(),
            Err(Error::NotExternallyRefined(_))
        ));
    }

    #[test]
    fn displayed_splits_of_tree_and_square() {
        let tree = Level1Network::new(ord(&[1, 2, 3, 4, 5]), [split(&[1, 2], 5), split(&[4, 5], 5)])
            .unwrap();
        let sigma = tree.displayed_splits();
        assert_eq!(sigma.len(), 2);
        assert!(sigma.contains(&split(&[1, 2], 5)));
        assert!(sigma.contains(&split(&[4, 5], 5)));

        let sq = Level1Network::new(ord(&[1, 2, 3, 4]), []).unwrap();
        let sigma = sq.displayed_splits();
        assert_eq!(sigma.len(), 2);
        assert!(sigma.contains(&split(&[1, 2], 4)));
        assert!(sigma.contains(&split(&[2, 3], 4)));
        assert!(!sigma.contains(&split(&[1, 3], 4)));
    }

    #[test]
    fn displayed_splits_of_single_bridge() {
        let l = Level1Network::new(ord(&[1, 2, 3, 4, 5]), [split(&[1, 2], 5)]).unwrap();
        let sigma = l.displayed_splits();
        let expect =
            SplitSystem::new(5, [split(&[1, 2], 5), split(&[3, 4], 5), split(&[4, 5], 5)]).unwrap();
        assert_eq!(sigma, expect);
    }

    #[test]
    fn refinement_is_superset() {
        let a = SplitSystem::new(4, [split(&[1, 2], 4)]).unwrap();
        let b = SplitSystem::new(4, [split(&[1, 3], 4)]).unwrap();
        assert!(a.refines(&a));
        assert!(!a.refines(&b));
        let refined = SplitSystem::new(5, [split(&[1, 2], 5), split(&[4, 5], 5)]).unwrap();
        let coarse = SplitSystem::new(5, [split(&[1, 2], 5)]).unwrap();
        assert!(refined.refines(&coarse));
        assert!(!coarse.refines(&refined));
    }

    #[test]
    fn binary_tree_counts() {
        assert_eq!(enumerate_binary_trees(4).unwrap().len(), 3);
        assert_eq!(enumerate_binary_trees(5).unwrap().len(), 15);
        assert_eq!(enumerate_binary_trees(7).unwrap().len(), 945);
        assert_eq!(double_factorial_trees(7), 945);
        for n in 4..=8 {
            assert_eq!(
                enumerate_binary_trees(n).unwrap().len() as u64,
                double_factorial_trees(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn binary_trees_are_distinct_and_binary() {
        let trees = enumerate_binary_trees(6).unwrap();
        let set: BTreeSet<&PhyloTree> = trees.iter().collect();
        assert_eq!(set.len(), trees.len());
        assert!(trees.iter().all(|t| t.is_binary()));
    }

    #[test]
    fn tree_cap_is_enforced() {
        assert!(enumerate_binary_trees_capped(9, 8).is_err());
        assert!(enumerate_binary_trees(3).is_err());
    }

    #[test]
    fn level1_network_counts() {
        assert_eq!(enumerate_level1_networks(5, 0).unwrap().len(), 12);
        assert_eq!(enumerate_level1_networks(5, 1).unwrap().len(), 30);
        assert_eq!(enumerate_level1_networks(5, 2).unwrap().len(), 15);
    }

    #[test]
    fn level1_trees_match_binary_trees() {
        // k = n-3 networks are exactly the binary trees, via split sets
        for n in 4..=6 {
            let nets = enumerate_level1_networks(n, n - 3).unwrap();
            let trees = enumerate_binary_trees(n).unwrap();
            let net_splits: BTreeSet<BTreeSet<Split>> = nets
                .iter()
                .map(|l| l.bridges().copied().collect())
                .collect();
            let tree_splits: BTreeSet<BTreeSet<Split>> = trees
                .iter()
                .map(|t| t.splits().copied().collect())
                .collect();
            assert_eq!(net_splits, tree_splits, "n={n}");
        }
    }

    #[test]
    fn cic_values() {
        let tree = Level1Network::new(ord(&[1, 2, 3, 4]), [split(&[1, 2], 4)]).unwrap();
        assert_eq!(cladistic_information_content(&tree).unwrap(), frac(1, 3));
        let sq = Level1Network::new(ord(&[1, 2, 3, 4]), []).unwrap();
        assert_eq!(cladistic_information_content(&sq).unwrap(), frac(2, 3));
    }

    #[test]
    fn exterior_preserves_splits_and_bridges() {
        // displayed splits of the exterior contain the original system, and
        // bridges agree; exhaustive over circular systems for n <= 5
        for n in 4..=5usize {
            for ordering in CircularOrdering::all_classes(n) {
                let diagonals = ordering.diagonal_splits();
                let m = diagonals.len();
                for mask in 0u32..(1 << m) {
                    let chosen: Vec<Split> = (0..m)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| diagonals[i])
                        .collect();
                    let system = SplitSystem::new(n, chosen).unwrap();
                    let net = CircularSplitNetwork::new(ordering.clone(), system.clone()).unwrap();
                    if !net.is_externally_refined() {
                        continue;
                    }
                    let l = net.exterior_network().unwrap();
                    let sigma = l.displayed_splits();
                    assert!(sigma.refines(&system), "sigma must display the system");
                    let mut net_bridges = net.bridges();
                    net_bridges.sort();
                    let mut l_bridges: Vec<Split> = l.bridges().copied().collect();
                    l_bridges.sort();
                    assert_eq!(net_bridges, l_bridges);
                }
            }
        }
    }

    #[test]
    fn every_circular_system_embeds_in_a_level1_sigma() {
        // refine to externally refined, take the exterior, and check the
        // displayed splits contain the input system; exhaustive n <= 5
        for n in 4..=5usize {
            for ordering in CircularOrdering::all_classes(n) {
                let diagonals = ordering.diagonal_splits();
                let m = diagonals.len();
                for mask in 0u32..(1 << m) {
                    let chosen: Vec<Split> = (0..m)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| diagonals[i])
                        .collect();
                    let system = SplitSystem::new(n, chosen).unwrap();
                    let net = CircularSplitNetwork::new(ordering.clone(), system.clone()).unwrap();
                    let refined = net.externally_refine();
                    assert!(refined.is_externally_refined());
                    let sigma = refined.exterior_network().unwrap().displayed_splits();
                    assert!(sigma.refines(&system));
                }
            }
        }
    }
}
