//! Exact analysis: walk distributions, capture-time tables, bound checks.

pub mod exact;
pub mod lemmas;
pub mod walks;

pub use exact::{
    exact_expected_capture, optimal_capture_values, MemorylessPolicy, ValueTable,
    DEFAULT_TOLERANCE, MAX_SWEEPS, SOLVER_VERTEX_LIMIT,
};
pub use lemmas::{run_suite, run_suite_with, Counterexample, LemmaReport, LemmaSuite, SuiteBounds};
pub use walks::{hitting_time_matrix, hitting_times, tstep_distribution, DistanceDistribution};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AnalysisError {
    #[error("solver stalled: residual {residual:e} after {sweeps} sweeps")]
    NonConvergence { residual: f64, sweeps: u64 },
    #[error("graph has {n} vertices; exact tables support at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("this check needs a regular graph")]
    NotRegular,
    #[error("bad check domain: {0}")]
    BadDomain(String),
}
