//! Monte Carlo verification of random matrix fluctuation predictions.
//!
//! Samplers for the standard self-adjoint ensembles, batched estimators of
//! classical trace and entry cumulants, and report builders that compare
//! the estimates against exact predictions from the combinatorial crates.
//! Everything is bit-reproducible for a fixed seed and sample count: each
//! sample owns a counter-derived generator and reductions run in sample
//! index order regardless of the thread budget.

pub mod config;
pub mod ensemble;
pub mod entries;
pub mod fluct;
pub mod freeness;
pub mod haar;
pub mod report;
pub mod stats;
pub mod traces;

pub use config::SampleConfig;
pub use ensemble::{haar_unitary, EnsembleSpec, Kind, Matrix};
pub use entries::verify_entry_cumulants;
pub use fluct::verify_fluctuations;
pub use freeness::verify_asymptotic_freeness;
pub use haar::haar_monomial_estimate;
pub use report::{FluctuationReport, ReportRow};
pub use stats::{ComplexEstimate, Estimate};
pub use traces::{estimate_phi, trace_powers};

#[derive(Debug, thiserror::Error)]
pub enum RmtError {
    #[error("invalid ensemble: {0}")]
    InvalidSpec(String),
    #[error("too few samples: need at least {need}, got {got}")]
    TooFewSamples { need: usize, got: usize },
    #[error("bad sampling configuration: {0}")]
    BadConfig(String),
    #[error("no prediction available: {0}")]
    NoPrediction(String),
}
