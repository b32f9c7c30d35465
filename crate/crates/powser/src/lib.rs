//! Exact truncated power series over big rationals, in one and two
//! variables, and the moment/cumulant transforms built on them.

pub mod series1;
pub mod series2;
pub mod transforms;

pub use series1::Series1;
pub use series2::Series2;
