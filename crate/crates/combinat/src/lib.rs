//! Foundation types for the higher-order freeness toolkit: permutations with
//! cycle bookkeeping, set partitions with the join lattice, noncrossing and
//! annular-noncrossing enumeration, exact counting sequences, and classical
//! moment/cumulant calculus on the partition lattice.
//!
//! Everything numeric is exact: counts are `BigInt`, values are `Scalar`
//! (arbitrary-precision rationals). Indices are 0-based throughout the API;
//! only `Display` output uses the 1-based cycle notation common on paper.

pub mod count;
pub mod cumulants;
pub mod noncrossing;
pub mod perm;
pub mod scalar;
pub mod setpart;
pub mod shape;

pub use count::{annular_catalan, binomial, catalan, factorial};
pub use perm::Permutation;
pub use scalar::{int, ratio, Scalar};
pub use setpart::SetPartition;
pub use shape::{Profile, Shape};

use thiserror::Error;

/// Input validation failure for constructors that accept raw data.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("not a bijection on 0..{n}: {reason}")]
    NotABijection { n: usize, reason: String },
    #[error("blocks do not partition 0..{n}: {reason}")]
    NotAPartition { n: usize, reason: String },
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },
}
