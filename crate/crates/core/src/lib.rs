//! biclab: exact biclique decompositions of graphs, the constructive upper
//! bounds behind them, and a log-space probability lab for the associated
//! G(n,p) quantities.
//!
//! The crate has three layers:
//!
//! * graph plumbing — [`graph::Graph`] with bitset adjacency rows, seeded
//!   [`graph::gnp_sample`] sampling (SplitMix64, bit-reproducible), and the
//!   edge-list text format;
//! * exact solvers — independence number [`alpha::alpha`], largest induced
//!   complete bipartite subgraph [`beta::beta`], minimum biclique
//!   partitions [`tau::exact_tau`] / [`tau::exact_tau_prime`], the
//!   subset-minimization identity [`tau::tau_subset_min`], and the sparse
//!   gamma maximization [`sparse::gamma_max`], all returning validated
//!   certificates;
//! * numerics — expected-count formulas, the k0 threshold, moment-term
//!   margin tables, Poisson event predictions ([`problab`]) and the
//!   divisor-sum tail scan ([`divisor`]).

pub mod alpha;
pub mod beta;
pub mod bitset;
pub mod blocks;
pub mod builders;
pub mod divisor;
pub mod graph;
pub mod mwis;
pub mod numeric;
pub mod problab;
pub mod rng;
pub mod search;
pub mod sparse;
pub mod tau;

pub use bitset::VertexSet;
pub use blocks::{BipartiteBlock, Decomposition, DecompositionKind, SparseCover};
pub use graph::{gnp_sample, GnpParams, Graph};
pub use search::SearchError;
pub use tau::TauPrime;
