//! Distance-balance analysis for graphs and graph products.
//!
//! The crate decides, for small undirected graphs, whether every vertex pair
//! at distance `l` splits the remaining vertices evenly between its two
//! sides (`l`-distance-balance), and studies how that property interacts
//! with three graph products: cartesian, lexicographic and corona.
//!
//! Modules:
//!
//! * [`bitset`], [`graph`] — graphs on up to 64 vertices with word-sized
//!   adjacency sets, standard families, complement and join.
//! * [`graph6`] — graph6 and edge-list text formats.
//! * [`enumerate`] — exhaustive labeled enumeration of small graphs.
//! * [`metrics`] — BFS distances, W-partitions, balance profiles, local
//!   regularity and related classification.
//! * [`products`] — the three products, their closed-form distance laws and
//!   the counting helpers used by the characterizations.
//! * [`verify`] — executable characterization checks: each check predicts
//!   balance of a product from factor-side conditions and compares the
//!   prediction against brute-force evaluation, either for a single
//!   instance or over exhaustive sweeps of small graphs.

pub mod bitset;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod metrics;
pub mod products;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use graph::{join, parse_graph_spec, Family, Graph, GraphError, VertexId};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use metrics::{
    all_pairs_distances, balance_profile, Balance, BalanceProfile, DistanceMatrix, MetricsError,
    UNREACHABLE,
};
pub use products::{ProductGraph, ProductKind, ProductVertex};

/// Version string reported by tools built on this crate.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
