//! Monte Carlo estimates of Haar-unitary matrix-element monomials,
//! E[ u_{r1 c1} ... u_{rk ck} conj(u_{r1' c1'}) ... conj(u_{rl' cl'}) ].

use num_complex::Complex;

use crate::config::SampleConfig;
use crate::ensemble::{derive_rng, haar_unitary};
use crate::stats::{batched_complex, ComplexEstimate};
use crate::RmtError;

pub fn haar_monomial_estimate(
    n_dim: usize,
    rows: &[usize],
    cols: &[usize],
    rows_c: &[usize],
    cols_c: &[usize],
    config: &SampleConfig,
) -> Result<ComplexEstimate, RmtError> {
    config.validate()?;
    if n_dim == 0 {
        return Err(RmtError::InvalidSpec("dimension must be positive".into()));
    }
    if rows.len() != cols.len() || rows_c.len() != cols_c.len() {
        return Err(RmtError::BadConfig(
            "row and column index lists must pair up".into(),
        ));
    }
    if rows
        .iter()
        .chain(cols)
        .chain(rows_c)
        .chain(cols_c)
        .any(|&i| i >= n_dim)
    {
        return Err(RmtError::BadConfig("matrix index out of range".into()));
    }

    let values = config.run(|i| {
        let mut rng = derive_rng(config.seed, i);
        let u = haar_unitary(n_dim, &mut rng);
        let mut prod = Complex::new(1.0, 0.0);
        for (&r, &c) in rows.iter().zip(cols) {
            prod *= u[(r, c)];
        }
        for (&r, &c) in rows_c.iter().zip(cols_c) {
            prod *= u[(r, c)].conj();
        }
        prod
    });
    Ok(batched_complex(config.samples, config.batch_size, |range| {
        let count = (range.end - range.start) as f64;
        values[range].iter().sum::<Complex<f64>>() / count
    }))
}
