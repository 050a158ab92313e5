//! Spectral analysis of k-uniform hypergraphs.
//!
//! A k-uniform hypergraph on n vertices has an order-k, dimension-n adjacency
//! tensor whose entries are 1/(k-1)! on every arrangement of an edge. For a
//! connected hypergraph this tensor has a unique positive eigenvector `x`
//! (normalized so that the k-th powers of its entries sum to 1) attached to
//! the spectral radius `rho`. This crate computes the pair (`rho`, `x`) by a
//! certified power iteration, never materializing the tensor, and evaluates a
//! family of closed-form bounds that relate `rho`, the principal ratio
//! `gamma = x_max / x_min`, vertex degrees, the diameter, and the vertex and
//! edge counts.
//!
//! Modules:
//!
//! * [`hypergraph`] - the incidence structure, parsing, BFS distances.
//! * [`spectral`] - tensor application, power iteration, certification.
//! * [`dense`] - a from-scratch Jacobi eigensolver used as the k=2 oracle.
//! * [`bounds`] - bound calculators and per-instance verification reports.
//! * [`generators`] - deterministic families and seeded random instances.
//! * [`report`] - JSON analysis reports with reproducible float formatting.

pub mod bounds;
pub mod dense;
pub mod generators;
pub mod hypergraph;
pub mod report;
pub mod rng;
pub mod spectral;

pub use bounds::{full_report, verify_instance, BoundId, BoundReport, Quantity, Relation};
pub use hypergraph::{DistanceTable, Hypergraph, HypergraphError};
pub use spectral::{
    principal_eigenpair, CwBracket, SpectralError, SpectralOptions, SpectralResult,
};

/// Largest edge cardinality accepted by spectral routines and generators.
///
/// Per-edge products are formed directly in binary64; k entries of a
/// normalized eigenvector multiply without under/overflow for k up to this
/// bound, so larger k is rejected rather than silently degraded.
pub const MAX_EDGE_CARDINALITY: usize = 16;
