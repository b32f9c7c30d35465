//! Exact unitary Weingarten calculus at finite matrix dimension, and the
//! finite-dimension moment/cumulant transforms built on it.

pub mod finite_n;
pub mod linalg;
pub mod wg;

pub use finite_n::{
    cumulants_from_moments_direct, cumulants_from_moments_solve, moments_from_cumulants_table,
    table_from_multiplicative, PsTable,
};
pub use wg::{haar_monomial_expectation, relative_cumulant, WgSuite, WgTable};
