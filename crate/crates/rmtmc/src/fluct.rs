//! Global fluctuations of traces against the exact moment transforms.
//!
//! For the Gaussian and Wishart families the first-order cumulant series is
//! known in closed form and the second-order cumulants vanish identically,
//! so every prediction here comes out of the exact series transforms with
//! `C2 = 0`. Covariances of traces then converge with O(1/N^2) corrections,
//! and third-order trace cumulants decay like 1/N; both effects are far
//! below the statistical error at the sample sizes this module enforces.

use combinat::{ratio, Scalar};
use num_traits::{One, ToPrimitive};
use powser::transforms::{moments_from_cumulants, second_order_moments};
use powser::{Series1, Series2};

use crate::config::SampleConfig;
use crate::ensemble::{EnsembleSpec, Kind};
use crate::report::{FluctuationReport, ReportRow};
use crate::stats::{batched, joint_cumulant_batched};
use crate::traces::trace_powers;
use crate::RmtError;

/// First-order cumulant series of the limiting distribution, where one is
/// known in closed form.
pub fn cumulant_series(spec: &EnsembleSpec, trunc: usize) -> Result<Series1, RmtError> {
    match &spec.kind {
        Kind::Gue => {
            let mut c = Series1::zero(trunc);
            c.set(0, Scalar::one());
            if trunc >= 2 {
                c.set(2, Scalar::one());
            }
            Ok(c)
        }
        Kind::Wishart { .. } => {
            let m = spec.wishart_columns().expect("wishart spec") as i64;
            let c_eff = ratio(m, spec.n as i64);
            let mut c = Series1::zero(trunc);
            c.set(0, Scalar::one());
            for k in 1..=trunc {
                c.set(k, c_eff.clone());
            }
            Ok(c)
        }
        _ => Err(RmtError::NoPrediction(
            "closed-form cumulants are wired only for the Gaussian and Wishart families".into(),
        )),
    }
}

/// Estimates trace means, trace covariances, and third trace cumulants, and
/// scores them against the exact transform predictions.
pub fn verify_fluctuations(
    spec: &EnsembleSpec,
    pairs: &[(usize, usize)],
    config: &SampleConfig,
) -> Result<FluctuationReport, RmtError> {
    spec.validate()?;
    config.validate()?;
    if pairs.is_empty() {
        return Err(RmtError::BadConfig("need at least one power pair".into()));
    }
    if pairs.iter().any(|&(m, n)| m == 0 || n == 0) {
        return Err(RmtError::BadConfig("trace powers must be positive".into()));
    }
    // Third cumulants are order 3: same sample floor as estimate_phi.
    let need = 25 * 4usize.pow(3);
    if config.samples < need {
        return Err(RmtError::TooFewSamples {
            need,
            got: config.samples,
        });
    }

    let max_power = pairs.iter().map(|&(m, n)| m.max(n)).max().unwrap();
    let cap = pairs.iter().map(|&(m, n)| m + n).max().unwrap().max(2);
    let c1 = cumulant_series(spec, cap.max(max_power))?;
    let alpha1 = moments_from_cumulants(&c1);
    let alpha2 = second_order_moments(&c1, &Series2::zero(cap));

    let n = spec.n;
    let rows = config.run(|i| {
        let a = spec.sample(config.seed, i);
        trace_powers(&a, max_power)
            .into_iter()
            .map(|t| t.re)
            .collect::<Vec<f64>>()
    });
    let mut cols: Vec<Vec<f64>> = vec![Vec::with_capacity(config.samples); max_power];
    for row in &rows {
        for (k, &v) in row.iter().enumerate() {
            cols[k].push(v);
        }
    }

    let mut powers: Vec<usize> = pairs.iter().flat_map(|&(m, k)| [m, k]).collect();
    powers.sort_unstable();
    powers.dedup();

    let mut report = FluctuationReport::default();
    for &p in &powers {
        let col = &cols[p - 1];
        let est = batched(config.samples, config.batch_size, |range| {
            let count = (range.end - range.start) as f64;
            col[range].iter().sum::<f64>() / count / n as f64
        });
        let pred = alpha1.coeff(p).to_f64().expect("prediction fits in f64");
        report.push(ReportRow::predicted(
            format!("tr(A^{p})"),
            n,
            config.samples,
            est.value,
            est.std_err,
            pred,
            "first-order moments of C(x)",
        ));
    }
    for &(m, k) in pairs {
        let data = [cols[m - 1].clone(), cols[k - 1].clone()];
        let est = joint_cumulant_batched(&data, config.batch_size);
        let pred = alpha2.coeff(m, k).to_f64().expect("prediction fits in f64");
        report.push(ReportRow::predicted(
            format!("cov(Tr A^{m};Tr A^{k})"),
            n,
            config.samples,
            est.value,
            est.std_err,
            pred,
            "second-order transform with C2 = 0",
        ));
    }
    for &p in &powers {
        let data = [cols[p - 1].clone(), cols[p - 1].clone(), cols[p - 1].clone()];
        let est = joint_cumulant_batched(&data, config.batch_size);
        report.push(ReportRow::predicted(
            format!("k3(Tr A^{p})"),
            n,
            config.samples,
            est.value,
            est.std_err,
            0.0,
            "third trace cumulant tends to zero",
        ));
    }
    Ok(report)
}
