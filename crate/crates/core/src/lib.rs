//! Symmetry-aware topological descriptors of molecular graphs.
//!
//! This crate computes the Graovac-Pisanski index, the Wiener index, the
//! automorphism group, and the vertex-orbit partition of connected molecular
//! graphs (hydrogen-suppressed carbon skeletons), and fits the melting-point
//! regression models that go with them. A bundled data set of 65 hydrocarbons
//! (the straight-chain alkanes C2..C32, 20 polyaromatic hydrocarbons, and 14
//! octane isomers) ships with published descriptor values so every structure
//! encoding can be cross-checked.
//!
//! The Graovac-Pisanski index of a graph `G` is
//!
//! ```text
//! GP(G) = |V(G)| / (2 |Aut(G)|) * sum_u sum_a d(u, a(u))
//! ```
//!
//! summed over all vertices `u` and automorphisms `a`; equivalently, with
//! `V_1..V_t` the vertex orbits under the natural action of `Aut(G)`,
//!
//! ```text
//! GP(G) = |V(G)| * sum_i W(V_i) / |V_i|
//! ```
//!
//! where `W(S)` is the Wiener index restricted to `S`. Both forms are
//! implemented and every descriptor computation evaluates both, failing
//! loudly if they ever disagree.
//!
//! All vertices are 1-indexed in the public API. GP values are exact
//! rationals ([`Rational`]); every bundled molecule has an integer GP.
//!
//! # Example
//!
//! The skeleton of 2-methyl-3-ethyl-pentane has four automorphisms, five
//! vertex orbits, and GP = 32:
//!
//! ```
//! use gpindex_core::{descriptor_record, MolecularGraph};
//!
//! let edges = [(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (3, 7), (7, 8)];
//! let graph = MolecularGraph::new(8, &edges, None)?;
//! let record = descriptor_record(&graph)?;
//! assert_eq!(record.gp_string(), "32");
//! assert_eq!(record.aut_order, 4);
//! assert_eq!(record.orbit_count, 5);
//! assert_eq!(record.wiener, 67);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

#![forbid(unsafe_code)]

pub mod dataset;
pub mod descriptors;
pub mod distance;
pub mod graph;
pub mod qspr;
pub mod regression;
pub mod symmetry;

pub use dataset::{bundled_family, reference_values, verify_bundle, Family, MoleculeEntry, Split};
pub use descriptors::{descriptor_record, DescriptorRecord, Rational};
pub use distance::DistanceMatrix;
pub use graph::{GraphError, MolecularGraph};
pub use regression::{ModelKind, RegressionFit, ResidualTable};
pub use symmetry::{AutomorphismSet, OrbitPartition, Permutation};
