//! Entry-level cumulants of unitarily invariant ensembles.
//!
//! For a unitarily invariant family the classical cumulant of the entries
//! along an index cycle recovers the free cumulants:
//! N^{n-1} k_n(a_{i1 i2}, ..., a_{in i1}) -> kappa_n, and for two disjoint
//! cycles N^{m+n} k_{m+n}(both cycles) -> kappa_{m,n}. Estimates are
//! averaged over several choices of the index tuple.

use num_complex::Complex;

use crate::config::SampleConfig;
use crate::ensemble::{EnsembleSpec, Kind, Matrix};
use crate::report::{FluctuationReport, ReportRow};
use crate::stats::averaged_joint_cumulant_complex;
use crate::RmtError;

/// Free-cumulant predictions where the limit is known in closed form.
fn kappa_prediction(spec: &EnsembleSpec, cycles: &[usize]) -> Option<f64> {
    match (&spec.kind, cycles.len()) {
        (Kind::Gue, 1) => Some(if cycles[0] == 2 { 1.0 } else { 0.0 }),
        // Gaussian and Wishart second-order cumulants vanish identically.
        (Kind::Gue, 2) | (Kind::Wishart { .. }, 2) => Some(0.0),
        (Kind::Wishart { .. }, 1) => {
            let m = spec.wishart_columns()? as f64;
            Some(m / spec.n as f64)
        }
        _ => None,
    }
}

/// One index cycle per entry of `cycles` (one or two cycles), offset by `t`.
fn cycle_entries(a: &Matrix, cycles: &[usize], t: usize) -> Vec<Complex<f64>> {
    let mut vars = Vec::new();
    let mut base = t;
    for &len in cycles {
        for k in 0..len {
            let i = base + k;
            let j = base + (k + 1) % len;
            vars.push(a[(i, j)]);
        }
        base += len;
    }
    vars
}

pub fn verify_entry_cumulants(
    spec: &EnsembleSpec,
    cycles: &[usize],
    config: &SampleConfig,
) -> Result<FluctuationReport, RmtError> {
    spec.validate()?;
    config.validate()?;
    if cycles.is_empty() || cycles.len() > 2 || cycles.iter().any(|&c| c == 0) {
        return Err(RmtError::BadConfig(
            "entry cumulants take one or two positive cycle lengths".into(),
        ));
    }
    if !spec.is_unitarily_invariant() {
        return Err(RmtError::InvalidSpec(
            "entry cumulants need a unitarily invariant ensemble".into(),
        ));
    }
    let total: usize = cycles.iter().sum();
    if total > 6 {
        return Err(RmtError::BadConfig("at most six entries per cumulant".into()));
    }
    if spec.n < total + 1 {
        return Err(RmtError::InvalidSpec(
            "dimension too small for the requested cycles".into(),
        ));
    }
    let need = 25 * 4usize.pow(total as u32);
    if config.samples < need {
        return Err(RmtError::TooFewSamples {
            need,
            got: config.samples,
        });
    }

    let offsets = (spec.n - total + 1).min(6);
    let per_sample = config.run(|i| {
        let a = spec.sample(config.seed, i);
        (0..offsets)
            .map(|t| cycle_entries(&a, cycles, t))
            .collect::<Vec<Vec<Complex<f64>>>>()
    });
    // tuples[t][v] = the v-th variable's sample column for offset t.
    let mut tuples: Vec<Vec<Vec<Complex<f64>>>> =
        vec![vec![Vec::with_capacity(config.samples); total]; offsets];
    for sample in &per_sample {
        for (t, vars) in sample.iter().enumerate() {
            for (v, &z) in vars.iter().enumerate() {
                tuples[t][v].push(z);
            }
        }
    }
    let est = averaged_joint_cumulant_complex(&tuples, config.batch_size);

    let scale = match cycles.len() {
        1 => (spec.n as f64).powi(cycles[0] as i32 - 1),
        _ => (spec.n as f64).powi(total as i32),
    };
    let name = match cycles.len() {
        1 => format!("N^{}*k{}(entry cycle {})", cycles[0] - 1, total, cycles[0]),
        _ => format!(
            "N^{}*k{}(cycles {} and {})",
            total, total, cycles[0], cycles[1]
        ),
    };
    let pred = kappa_prediction(spec, cycles);
    let mut report = FluctuationReport::default();
    for (part, value, std_err) in [
        (".re", est.value.re * scale, est.std_err.re * scale),
        (".im", est.value.im * scale, est.std_err.im * scale),
    ] {
        let target = if part == ".re" { pred } else { pred.map(|_| 0.0) };
        let quantity = format!("{name}{part}");
        match target {
            Some(p) => report.push(ReportRow::predicted(
                quantity,
                spec.n,
                config.samples,
                value,
                std_err,
                p,
                "free cumulants of the limiting family",
            )),
            None => report.push(ReportRow::informational(
                quantity,
                spec.n,
                config.samples,
                value,
                std_err,
                "no closed-form limit wired for this family",
            )),
        }
    }
    Ok(report)
}
