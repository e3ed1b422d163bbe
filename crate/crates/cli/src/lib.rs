//! Monte Carlo harness and shared plumbing behind the `biclab` binary.

pub mod mc;

pub use mc::{
    mc_alpha_beta, mc_sparse, AlphaBetaResult, EventLabel, ExperimentConfig, McError, SparseResult,
};
