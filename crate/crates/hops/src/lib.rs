//! Higher-order probability spaces over partitioned permutations.
//!
//! A single element is described by one number per Young diagram: its
//! moments or, after convolution with the Moebius function, its free
//! cumulants. Several elements are described by oracles that evaluate
//! moments of words, decorated position by position. Freeness is the
//! vanishing of mixed cumulants, and the central construction here is the
//! joint oracle of two free sets, built from the cumulants of one side and
//! the moments of the other. Formal series around the Itzykson-Zuber
//! integral close the circle back to single-variable data.

pub mod dist;
pub mod join;
pub mod oracle;
pub mod series;

pub use dist::{
    add_free, cumulants_from_moments, moments_from_cumulants, CumulantSet, Distribution,
};
pub use join::{
    centered_pair_correlation, decorated_cumulant, free_join, mixed_cumulant_report,
    paired_covariance, FreeJoin, LetterCumulants, MixedCumulantReport,
};
pub use oracle::{canonical_word, check_axioms, moment_on, words, MomentOracle, TableOracle, UNIT};
pub use series::{iz_r, iz_series, rank2};
