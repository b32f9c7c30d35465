//! Trace statistics of sampled matrices.

use num_complex::Complex;

use crate::config::SampleConfig;
use crate::ensemble::{EnsembleSpec, Matrix};
use crate::stats::{joint_cumulant_batched, Estimate};
use crate::RmtError;

/// Tr A^k for k = 1..=max_power using the fewest multiplications:
/// only powers up to ceil(max/2) are materialized and the high traces are
/// read off as Tr(A^p A^q) without forming the product.
pub fn trace_powers(a: &Matrix, max_power: usize) -> Vec<Complex<f64>> {
    assert!(max_power >= 1);
    let h = max_power.div_ceil(2);
    let mut pows: Vec<Matrix> = Vec::with_capacity(h);
    pows.push(a.clone());
    for _ in 1..h {
        let next = pows.last().unwrap() * a;
        pows.push(next);
    }
    let mut traces = Vec::with_capacity(max_power);
    for k in 1..=max_power {
        let t = if k <= h {
            pows[k - 1].trace()
        } else {
            pair_trace(&pows[h - 1], &pows[k - h - 1])
        };
        traces.push(t);
    }
    traces
}

/// Tr(P Q) in O(N^2) without materializing the product.
pub fn pair_trace(p: &Matrix, q: &Matrix) -> Complex<f64> {
    let n = p.nrows();
    let mut acc = Complex::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            acc += p[(i, j)] * q[(j, i)];
        }
    }
    acc
}

/// Classical cumulant of the tuple (Tr A^{p_1}, ..., Tr A^{p_r}), scaled by
/// N^{r-2} so the limit is the corresponding higher-order moment of the
/// ensemble. Requires at least 25 * 4^r samples so the batch estimates of
/// an order-r cumulant are usable.
pub fn estimate_phi(
    spec: &EnsembleSpec,
    powers: &[usize],
    config: &SampleConfig,
) -> Result<Estimate, RmtError> {
    spec.validate()?;
    config.validate()?;
    let r = powers.len();
    if r == 0 || r > 6 {
        return Err(RmtError::BadConfig("between 1 and 6 trace powers".into()));
    }
    let need = 25usize.saturating_mul(4usize.pow(r as u32));
    if config.samples < need {
        return Err(RmtError::TooFewSamples {
            need,
            got: config.samples,
        });
    }
    let max_power = *powers.iter().max().unwrap();
    let rows = config.run(|i| {
        let a = spec.sample(config.seed, i);
        let tr = trace_powers(&a, max_power);
        powers.iter().map(|&p| tr[p - 1].re).collect::<Vec<f64>>()
    });
    let mut data: Vec<Vec<f64>> = vec![Vec::with_capacity(config.samples); r];
    for row in &rows {
        for (k, &v) in row.iter().enumerate() {
            data[k].push(v);
        }
    }
    let raw = joint_cumulant_batched(&data, config.batch_size);
    let scale = (spec.n as f64).powi(r as i32 - 2);
    Ok(raw.scaled(scale))
}
