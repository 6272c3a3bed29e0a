//! The split-network polytopes: vertex sets of the `BME(n,k)` family, the
//! known facet families, the relaxed BME polytope, face maps induced by
//! networks and trees, and counts for the simplicial complex of circular
//! split networks.

use crate::error::{Error, Result};
use crate::geometry::{HPolytope, LinearFunctional, VPolytope};
use crate::networks::{enumerate_level1_networks, CircularSplitNetwork, Level1Network, PhyloTree};
use crate::ordering::CircularOrdering;
use crate::pairvec::{pair_count, pair_index, pairs, PairVector};
use crate::rational::{pow2, Rat};
use crate::splits::{distance_vector, total_weight, Split, SplitSystem, TaxonSet, Weighting};
use crate::vectors::network_vector;
use num_traits::One;
use std::collections::BTreeSet;

/// Vertices of `BME(n,k)`: the network vectors of all binary level-1
/// networks with `k` bridges. `k = 0` gives the incidence vectors of the
/// symmetric traveling salesman polytope, `k = n-3` the tree vectors.
pub fn polytope_vertices(n: usize, k: usize) -> Result<VPolytope> {
    if !(4..=7).contains(&n) {
        return Err(Error::Range {
            what: "polytope taxon count",
            value: n,
            min: 4,
            max: 7,
        });
    }
    let nets = enumerate_level1_networks(n, k)?;
    let vertices = nets
        .iter()
        .map(|net| network_vector(net).into_entries())
        .collect();
    Ok(VPolytope::new(pair_count(n), vertices))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FacetFamily {
    /// Sum over pairs inside a part bounded above.
    Split { part: TaxonSet },
    /// Intersecting cherries `{a,b},{b,c}`.
    Cherry { a: usize, b: usize, c: usize },
    /// Lower bound for a pair at opposite caterpillar ends.
    Caterpillar { i: usize, j: usize },
    /// Row-sum equality for one taxon.
    Degree { taxon: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintSense {
    Le,
    Ge,
    Eq,
}

/// One member of a named facet family, with its exact functional.
#[derive(Clone, Debug)]
pub struct FacetInequality {
    pub family: FacetFamily,
    pub normal: Vec<Rat>,
    pub rhs: Rat,
    pub sense: ConstraintSense,
}

impl FacetInequality {
    pub fn satisfied_by(&self, x: &PairVector) -> bool {
        let v = crate::geometry::matrix::dot(&self.normal, x.entries());
        match self.sense {
            ConstraintSense::Le => v <= self.rhs,
            ConstraintSense::Ge => v >= self.rhs,
            ConstraintSense::Eq => v == self.rhs,
        }
    }

    pub fn tight_at(&self, x: &PairVector) -> bool {
        crate::geometry::matrix::dot(&self.normal, x.entries()) == self.rhs
    }

    fn add_to(&self, p: &mut HPolytope) {
        match self.sense {
            ConstraintSense::Le => p.add_le(self.normal.clone(), self.rhs.clone()),
            ConstraintSense::Ge => p.add_ge(self.normal.clone(), self.rhs.clone()),
            ConstraintSense::Eq => p.add_eq(self.normal.clone(), self.rhs.clone()),
        }
    }
}

/// Split-face inequality: the pairs inside `part` sum to at most
/// `(|part|-1) 2^k`.
pub fn split_face_inequality(part: TaxonSet, n: usize, k: usize) -> Result<FacetInequality> {
    let size = part.len();
    if size < 2 || size > n - 2 {
        return Err(Error::InvalidSplit(format!(
            "split-face part must have 2..={} taxa, got {size}",
            n - 2
        )));
    }
    let mut normal = vec![Rat::from_integer(0.into()); pair_count(n)];
    for i in part.iter() {
        for j in part.iter() {
            if i < j {
                normal[pair_index(n, i, j)] = Rat::one();
            }
        }
    }
    Ok(FacetInequality {
        family: FacetFamily::Split { part },
        normal,
        rhs: Rat::from_integer((size as i64 - 1).into()) * pow2(k as u32),
        sense: ConstraintSense::Le,
    })
}

/// Intersecting-cherry facet: `x_ab + x_bc - x_ac <= 2^(n-3)`.
pub fn cherry_facet(a: usize, b: usize, c: usize, n: usize) -> Result<FacetInequality> {
    if a == b || b == c || a == c || a > n || b > n || c > n || a < 1 || b < 1 || c < 1 {
        return Err(Error::InvalidSplit(format!(
            "cherry triple must be distinct taxa in 1..={n}: ({a},{b},{c})"
        )));
    }
    let mut normal = vec![Rat::from_integer(0.into()); pair_count(n)];
    normal[pair_index(n, a, b)] = Rat::one();
    normal[pair_index(n, b, c)] = Rat::one();
    normal[pair_index(n, a, c)] = -Rat::one();
    Ok(FacetInequality {
        family: FacetFamily::Cherry { a, b, c },
        normal,
        rhs: pow2(n as u32 - 3),
        sense: ConstraintSense::Le,
    })
}

/// Caterpillar facet: `x_ij >= 1`.
pub fn caterpillar_facet(i: usize, j: usize, n: usize) -> Result<FacetInequality> {
    if i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(Error::InvalidSplit(format!(
            "caterpillar pair must be distinct taxa in 1..={n}: ({i},{j})"
        )));
    }
    let mut normal = vec![Rat::from_integer(0.into()); pair_count(n)];
    normal[pair_index(n, i, j)] = Rat::one();
    Ok(FacetInequality {
        family: FacetFamily::Caterpillar { i, j },
        normal,
        rhs: Rat::one(),
        sense: ConstraintSense::Ge,
    })
}

/// The n row-sum equalities: for each taxon the entries involving it sum
/// to `2^(k+1)`.
pub fn degree_equalities(n: usize, k: usize) -> Vec<FacetInequality> {
    (1..=n)
        .map(|taxon| {
            let mut normal = vec![Rat::from_integer(0.into()); pair_count(n)];
            for i in 1..=n {
                if i != taxon {
                    normal[pair_index(n, i, taxon)] = Rat::one();
                }
            }
            FacetInequality {
                family: FacetFamily::Degree { taxon },
                normal,
                rhs: pow2(k as u32 + 1),
                sense: ConstraintSense::Eq,
            }
        })
        .collect()
}

/// Every constraint of the relaxed BME polytope, in a fixed order: degree
/// equalities, split faces over all parts of size 2..=n-2, caterpillar
/// bounds for all pairs, and intersecting-cherry facets for all middles.
/// Redundant members are kept; irredundancy is a separate measurement.
pub fn relaxed_bme_constraints(n: usize) -> Vec<FacetInequality> {
    let k = n - 3;
    let mut out = degree_equalities(n, k);
    for bits in 1u32..(1 << n) {
        let part = TaxonSet::from_bits(bits);
        let size = part.len();
        if (2..=n - 2).contains(&size) {
            out.push(split_face_inequality(part, n, k).expect("valid part"));
        }
    }
    for (i, j) in pairs(n) {
        out.push(caterpillar_facet(i, j, n).expect("valid pair"));
    }
    for b in 1..=n {
        for a in 1..=n {
            for c in (a + 1)..=n {
                if a != b && c != b {
                    out.push(cherry_facet(a, b, c, n).expect("valid triple"));
                }
            }
        }
    }
    out
}

/// The relaxed BME polytope as an H-polytope.
pub fn relaxed_bme(n: usize) -> HPolytope {
    let mut p = HPolytope::new(pair_count(n));
    for c in relaxed_bme_constraints(n) {
        c.add_to(&mut p);
    }
    p
}

/// What a face is anchored to.
#[derive(Clone, Debug)]
pub enum FaceAnchor {
    Network(SplitSystem),
    Tree(PhyloTree),
    Ordering(CircularOrdering),
}

/// A supported face: the functional, its exact lower bound over the
/// polytope's vertex set, and the indices of the tight vertices.
#[derive(Clone, Debug)]
pub struct FaceDescriptor {
    pub anchor: FaceAnchor,
    pub functional: LinearFunctional,
    pub bound: Rat,
    pub tight: Vec<usize>,
}

impl FaceDescriptor {
    pub fn tight_vertices<'a>(&self, vp: &'a VPolytope) -> Vec<&'a Vec<Rat>> {
        self.tight.iter().map(|&i| &vp.vertices[i]).collect()
    }
}

/// The face of `BME(n,k)` induced by a circular split system: the
/// functional is the unit-weight distance vector of the system, the bound
/// `2^(k+1) W(s)`, and the tight vertices are computed by exact equality
/// against the polytope's vertices.
pub fn network_face(
    s: &CircularSplitNetwork,
    k: usize,
    vertices: &VPolytope,
) -> Result<FaceDescriptor> {
    let n = s.n();
    if k > n - 3 {
        return Err(Error::Range {
            what: "bridge count",
            value: k,
            min: 0,
            max: n - 3,
        });
    }
    let w = Weighting::unit(s.system());
    let d = distance_vector(s.system(), &w)?;
    let total = total_weight(s.system(), &w)?;
    let bound = pow2(k as u32 + 1) * total;
    let functional = LinearFunctional::linear(d.into_entries());
    let tight = tight_indices(vertices, &functional, &bound);
    Ok(FaceDescriptor {
        anchor: FaceAnchor::Network(s.system().clone()),
        functional,
        bound,
        tight,
    })
}

/// Face induced by a level-1 network through its displayed splits.
pub fn network_face_of_level1(
    net: &Level1Network,
    k: usize,
    vertices: &VPolytope,
) -> Result<FaceDescriptor> {
    let s = CircularSplitNetwork::new(net.ordering().clone(), net.displayed_splits())?;
    network_face(&s, k, vertices)
}

/// The face of `BME(n)` dual to a (possibly non-binary) tree: functional
/// is the unit-weight tree distance vector, bound `2^(n-2) |E(t)|`, tight
/// vertices are the binary refinements.
pub fn tree_face_map(t: &PhyloTree, bme_vertices: &VPolytope) -> Result<FaceDescriptor> {
    let n = t.n();
    let system = t.as_split_system();
    let w = Weighting::unit(&system);
    let d = distance_vector(&system, &w)?;
    let bound = pow2(n as u32 - 2) * Rat::from_integer((t.edge_count() as i64).into());
    let functional = LinearFunctional::linear(d.into_entries());
    let tight = tight_indices(bme_vertices, &functional, &bound);
    Ok(FaceDescriptor {
        anchor: FaceAnchor::Tree(t.clone()),
        functional,
        bound,
        tight,
    })
}

/// The face of `STSP(n)` dual to a circular split network: the tight
/// vertices are exactly the incidence vectors of the consistent orderings.
pub fn ordering_face_map(
    s: &CircularSplitNetwork,
    stsp_vertices: &VPolytope,
) -> Result<FaceDescriptor> {
    let mut face = network_face(s, 0, stsp_vertices)?;
    face.anchor = FaceAnchor::Network(s.system().clone());
    Ok(face)
}

fn tight_indices(vp: &VPolytope, functional: &LinearFunctional, bound: &Rat) -> Vec<usize> {
    vp.vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| functional.eval(v) == *bound)
        .map(|(i, _)| i)
        .collect()
}

/// All circular split systems on `n` taxa (deduplicated as split sets,
/// the empty system included).
pub fn circular_split_systems(n: usize) -> Vec<SplitSystem> {
    let mut seen: BTreeSet<Vec<Split>> = BTreeSet::new();
    for ordering in CircularOrdering::all_classes(n) {
        let diagonals = ordering.diagonal_splits();
        let m = diagonals.len();
        for mask in 0u32..(1 << m) {
            let mut chosen: Vec<Split> = (0..m)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| diagonals[i])
                .collect();
            chosen.sort();
            seen.insert(chosen);
        }
    }
    seen.into_iter()
        .map(|splits| SplitSystem::new(n, splits).expect("valid system"))
        .collect()
}

/// Counts of the simplicial complex of circular split networks: entry `k`
/// is the number of circular systems with exactly `k+1` nontrivial splits.
/// `chamber_pairs` counts (ordering class, diagonal subset) pairs before
/// identification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsnFVector {
    pub split_set_counts: Vec<u64>,
    pub chamber_pair_counts: Vec<u64>,
}

impl CsnFVector {
    /// Dimension of the complex: the largest k with a nonzero count.
    pub fn dimension(&self) -> usize {
        self.split_set_counts
            .iter()
            .rposition(|&c| c > 0)
            .expect("nonempty complex")
    }
}

pub fn csn_f_vector(n: usize) -> Result<CsnFVector> {
    if !(4..=6).contains(&n) {
        return Err(Error::Range {
            what: "csn taxon count",
            value: n,
            min: 4,
            max: 6,
        });
    }
    let top = pair_count(n) - n; // largest split count
    let mut split_set_counts = vec![0u64; top];
    let mut chamber_pair_counts = vec![0u64; top];
    let mut seen: BTreeSet<Vec<Split>> = BTreeSet::new();
    for ordering in CircularOrdering::all_classes(n) {
        let diagonals = ordering.diagonal_splits();
        let m = diagonals.len();
        for mask in 1u32..(1 << m) {
            let mut chosen: Vec<Split> = (0..m)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| diagonals[i])
                .collect();
            chosen.sort();
            let size = chosen.len();
            chamber_pair_counts[size - 1] += 1;
            if seen.insert(chosen) {
                split_set_counts[size - 1] += 1;
            }
        }
    }
    Ok(CsnFVector {
        split_set_counts,
        chamber_pair_counts,
    })
}

/// Dimension of the shared face of two distinct chambers: the number of
/// diagonal splits hosted by both polygons, minus one.
pub fn chamber_overlap(c1: &CircularOrdering, c2: &CircularOrdering) -> Result<i64> {
    if c1 == c2 {
        return Err(Error::InvalidOrdering(
            "chamber overlap needs two distinct ordering classes".into(),
        ));
    }
    let d2: BTreeSet<Split> = c2.diagonal_splits().into_iter().collect();
    let shared = c1
        .diagonal_splits()
        .into_iter()
        .filter(|s| d2.contains(s))
        .count() as i64;
    Ok(shared - 1)
}
