//! Estimators: batch-means error bars and joint cumulants of sample data.
//!
//! Joint cumulants use the set-partition Moebius formula over sample
//! moments. Plugging sample means into that formula gives an O(1/S) bias;
//! with the sample counts used here the bias is far below the statistical
//! error and is absorbed into the error budget.

use combinat::SetPartition;
use num_complex::Complex;
use num_traits::ToPrimitive;
use std::ops::Range;

#[derive(Clone, Copy, Debug)]
pub struct Estimate {
    pub value: f64,
    pub std_err: f64,
}

impl Estimate {
    pub fn z(&self, prediction: f64) -> f64 {
        if self.std_err == 0.0 {
            if self.value == prediction {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.value - prediction) / self.std_err
        }
    }

    pub fn scaled(&self, factor: f64) -> Estimate {
        Estimate {
            value: self.value * factor,
            std_err: self.std_err * factor.abs(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ComplexEstimate {
    pub value: Complex<f64>,
    /// Componentwise standard errors (real part, imaginary part).
    pub std_err: Complex<f64>,
}

/// Runs `eval` on the full sample range for the point estimate and on each
/// complete batch for the spread. A short trailing batch is dropped from
/// the error bar only; the estimate itself uses every sample.
pub fn batched(samples: usize, batch_size: usize, eval: impl Fn(Range<usize>) -> f64) -> Estimate {
    let value = eval(0..samples);
    let batches = samples / batch_size;
    let mut vals = Vec::with_capacity(batches);
    for b in 0..batches {
        vals.push(eval(b * batch_size..(b + 1) * batch_size));
    }
    Estimate {
        value,
        std_err: spread(&vals),
    }
}

pub fn batched_complex(
    samples: usize,
    batch_size: usize,
    eval: impl Fn(Range<usize>) -> Complex<f64>,
) -> ComplexEstimate {
    let value = eval(0..samples);
    let batches = samples / batch_size;
    let mut re = Vec::with_capacity(batches);
    let mut im = Vec::with_capacity(batches);
    for b in 0..batches {
        let v = eval(b * batch_size..(b + 1) * batch_size);
        re.push(v.re);
        im.push(v.im);
    }
    ComplexEstimate {
        value,
        std_err: Complex::new(spread(&re), spread(&im)),
    }
}

/// Standard error of the mean of batch values.
fn spread(vals: &[f64]) -> f64 {
    let b = vals.len();
    if b < 2 {
        return f64::INFINITY;
    }
    let mean = vals.iter().sum::<f64>() / b as f64;
    let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (b - 1) as f64;
    (var / b as f64).sqrt()
}

/// Joint cumulant k(X_1, ..., X_r) of the columns of `data` over a sample
/// range, via subset means and the partition lattice Moebius function.
fn joint_cumulant_on(data: &[Vec<f64>], range: Range<usize>) -> f64 {
    let r = data.len();
    assert!(r >= 1 && r <= 6, "joint cumulant order out of range");
    let count = (range.end - range.start) as f64;
    // means[mask] = sample mean of the product over the variables in mask.
    let mut means = vec![0.0f64; 1 << r];
    for mask in 1usize..(1 << r) {
        let mut acc = 0.0;
        for s in range.clone() {
            let mut prod = 1.0;
            for (k, col) in data.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    prod *= col[s];
                }
            }
            acc += prod;
        }
        means[mask] = acc / count;
    }
    let full = SetPartition::full(r);
    let mut total = 0.0;
    for part in SetPartition::all(r) {
        let coeff = part.moebius_to(&full).to_f64().expect("small integer");
        let mut prod = 1.0;
        for block in part.blocks() {
            let mut mask = 0usize;
            for &k in &block {
                mask |= 1 << k;
            }
            prod *= means[mask];
        }
        total += coeff * prod;
    }
    total
}

/// Joint cumulant of real columns with batch-means error bars.
pub fn joint_cumulant_batched(data: &[Vec<f64>], batch_size: usize) -> Estimate {
    let samples = data[0].len();
    batched(samples, batch_size, |range| joint_cumulant_on(data, range))
}

fn joint_cumulant_on_complex(data: &[Vec<Complex<f64>>], range: Range<usize>) -> Complex<f64> {
    let r = data.len();
    assert!(r >= 1 && r <= 6, "joint cumulant order out of range");
    let count = (range.end - range.start) as f64;
    let mut means = vec![Complex::new(0.0, 0.0); 1 << r];
    for mask in 1usize..(1 << r) {
        let mut acc = Complex::new(0.0, 0.0);
        for s in range.clone() {
            let mut prod = Complex::new(1.0, 0.0);
            for (k, col) in data.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    prod *= col[s];
                }
            }
            acc += prod;
        }
        means[mask] = acc / count;
    }
    let full = SetPartition::full(r);
    let mut total = Complex::new(0.0, 0.0);
    for part in SetPartition::all(r) {
        let coeff = part.moebius_to(&full).to_f64().expect("small integer");
        let mut prod = Complex::new(1.0, 0.0);
        for block in part.blocks() {
            let mut mask = 0usize;
            for &k in &block {
                mask |= 1 << k;
            }
            prod *= means[mask];
        }
        total += prod * coeff;
    }
    total
}

pub fn joint_cumulant_batched_complex(
    data: &[Vec<Complex<f64>>],
    batch_size: usize,
) -> ComplexEstimate {
    let samples = data[0].len();
    batched_complex(samples, batch_size, |range| {
        joint_cumulant_on_complex(data, range)
    })
}

/// Averages a per-tuple complex joint cumulant over several variable
/// tuples: `tuples[t]` holds the columns for tuple t, every tuple has the
/// same order, and each batch value is the tuple average of the cumulant
/// evaluated on that batch alone.
pub fn averaged_joint_cumulant_complex(
    tuples: &[Vec<Vec<Complex<f64>>>],
    batch_size: usize,
) -> ComplexEstimate {
    let samples = tuples[0][0].len();
    batched_complex(samples, batch_size, |range| {
        let mut acc = Complex::new(0.0, 0.0);
        for data in tuples {
            acc += joint_cumulant_on_complex(data, range.clone());
        }
        acc / tuples.len() as f64
    })
}

pub fn mean_batched(data: &[f64], batch_size: usize) -> Estimate {
    batched(data.len(), batch_size, |range| {
        let count = (range.end - range.start) as f64;
        data[range].iter().sum::<f64>() / count
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_cumulant_is_the_covariance() {
        let x: Vec<f64> = (0..200).map(|i| ((i * 37 + 11) % 101) as f64 / 101.0).collect();
        let y: Vec<f64> = (0..200).map(|i| ((i * 53 + 29) % 97) as f64 / 97.0).collect();
        let data = [x.clone(), y.clone()];
        let k2 = joint_cumulant_on(&data, 0..200);
        let mx = x.iter().sum::<f64>() / 200.0;
        let my = y.iter().sum::<f64>() / 200.0;
        let cov = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (a - mx) * (b - my))
            .sum::<f64>()
            / 200.0;
        assert!((k2 - cov).abs() < 1e-12);
    }

    #[test]
    fn third_cumulant_matches_the_central_moment_formula() {
        let x: Vec<f64> = (0..150).map(|i| (((i * 17) % 31) as f64 - 15.0) / 7.0).collect();
        let data = [x.clone(), x.clone(), x.clone()];
        let k3 = joint_cumulant_on(&data, 0..150);
        let m = x.iter().sum::<f64>() / 150.0;
        let mu3 = x.iter().map(|a| (a - m).powi(3)).sum::<f64>() / 150.0;
        // For a single variable the third cumulant is the third central moment.
        assert!((k3 - mu3).abs() < 1e-12, "{k3} vs {mu3}");
    }

    #[test]
    fn batch_errors_shrink_with_more_data() {
        let data: Vec<f64> = (0..4000)
            .map(|i| (((i * 2654435761u64 as usize) >> 7) % 1000) as f64 / 1000.0)
            .collect();
        let est = mean_batched(&data, 125);
        assert!((est.value - 0.5).abs() < 0.05);
        assert!(est.std_err > 0.0 && est.std_err < 0.05);
    }
}
