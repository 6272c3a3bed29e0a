//! Exact-rational combinatorics and geometry of circular split networks.
//!
//! The library models splits, circular orderings, split networks, and
//! binary level-1 networks over a taxon set `{1,..,n}`, builds the
//! polytopes whose vertices are incidence vectors of circular orderings
//! (STSP), tree vectors (BME), and level-1 network vectors (the
//! `BME(n,k)` family), and runs balanced-minimum-evolution tree
//! inference both by exhaustive search and by exact linear programming
//! over a relaxation assembled from the known facet families.
//!
//! All arithmetic is arbitrary-precision rational; every count,
//! dimension, and face identity exposed here is exact.

pub mod checks;
pub mod error;
pub mod formats;
pub mod geometry;
pub mod inference;
pub mod networks;
pub mod ordering;
pub mod pairvec;
pub mod polytopes;
pub mod rational;
pub mod splits;
pub mod vectors;

pub use error::{Error, Result};
pub use networks::{CircularSplitNetwork, Level1Network, PhyloTree};
pub use ordering::CircularOrdering;
pub use pairvec::PairVector;
pub use rational::Rat;
pub use splits::{Split, SplitSystem, TaxonSet, Weighting};
