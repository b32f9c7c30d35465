//! Monte Carlo checks of first- and second-order asymptotic freeness for a
//! pair of independent matrix families.
//!
//! All centered alternating words are expanded into raw traces once per
//! sample, and the centering constants are the plug-in marginal moments of
//! whichever sample range is being evaluated. Predictions for the
//! trace-word covariances use the cyclic spoke products built from the same
//! estimated marginal moments; each row is scored by batching the
//! difference between estimate and prediction, which keeps the error bar
//! honest when the two share samples.

use std::ops::Range;

use crate::config::SampleConfig;
use crate::ensemble::EnsembleSpec;
use crate::report::{FluctuationReport, ReportRow};
use crate::stats::batched;
use crate::traces::pair_trace;
use crate::RmtError;

/// Raw traces of one sample pair: powers of each matrix alone and the small
/// mixed words every centered quantity below expands into.
struct RawTraces {
    /// Tr A^k for k = 1..=3.
    ta: [f64; 3],
    tb: [f64; 3],
    /// Tr(A^n B^m) for n, m = 1..=2.
    tab: [[f64; 2]; 2],
    /// Tr(ABAB).
    tabab: f64,
}

fn raw_traces(a: &crate::ensemble::Matrix, b: &crate::ensemble::Matrix) -> RawTraces {
    let a2 = a * a;
    let b2 = b * b;
    let ab = a * b;
    RawTraces {
        ta: [
            a.trace().re,
            a2.trace().re,
            pair_trace(&a2, a).re,
        ],
        tb: [
            b.trace().re,
            b2.trace().re,
            pair_trace(&b2, b).re,
        ],
        tab: [
            [ab.trace().re, pair_trace(a, &b2).re],
            [pair_trace(&a2, b).re, pair_trace(&a2, &b2).re],
        ],
        tabab: pair_trace(&ab, &ab).re,
    }
}

struct Pool {
    raw: Vec<RawTraces>,
    n: f64,
}

impl Pool {
    fn mean(&self, range: &Range<usize>, f: impl Fn(&RawTraces) -> f64) -> f64 {
        let count = (range.end - range.start) as f64;
        self.raw[range.clone()].iter().map(f).sum::<f64>() / count
    }

    /// Normalized marginal moment of A over the range, k <= 3.
    fn alpha_a(&self, range: &Range<usize>, k: usize) -> f64 {
        self.mean(range, |r| r.ta[k - 1]) / self.n
    }

    fn alpha_b(&self, range: &Range<usize>, k: usize) -> f64 {
        self.mean(range, |r| r.tb[k - 1]) / self.n
    }

    /// Tr((A^n - aI)(B^m - bI)) per sample, centered by the range moments.
    fn centered_pair(&self, range: &Range<usize>, n: usize, m: usize) -> Vec<f64> {
        let aa = self.alpha_a(range, n);
        let bb = self.alpha_b(range, m);
        self.raw[range.clone()]
            .iter()
            .map(|r| {
                r.tab[n - 1][m - 1] - aa * r.tb[m - 1] - bb * r.ta[n - 1] + self.n * aa * bb
            })
            .collect()
    }

    /// Tr((A - aI)(B - bI)(A - aI)(B - bI)) per sample, expanded into the
    /// raw traces.
    fn centered_quad(&self, range: &Range<usize>) -> Vec<f64> {
        let a = self.alpha_a(range, 1);
        let b = self.alpha_b(range, 1);
        self.raw[range.clone()]
            .iter()
            .map(|r| {
                r.tabab - 2.0 * a * r.tab[0][1] - 2.0 * b * r.tab[1][0]
                    + 4.0 * a * b * r.tab[0][0]
                    + a * a * r.tb[1]
                    + b * b * r.ta[1]
                    - 2.0 * a * a * b * r.tb[0]
                    - 2.0 * a * b * b * r.ta[0]
                    + a * a * b * b * self.n
            })
            .collect()
    }
}

fn covariance(x: &[f64], y: &[f64]) -> f64 {
    let count = x.len() as f64;
    let mx = x.iter().sum::<f64>() / count;
    let my = y.iter().sum::<f64>() / count;
    x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum::<f64>() / count
}

fn spoke(f: impl Fn(usize) -> f64, u: usize, v: usize) -> f64 {
    f(u + v) - f(u) * f(v)
}

/// Scores estimate against prediction with the error bar of their batched
/// difference. Quantities assembled from traces carry roundoff of order
/// N * eps, and algebraically degenerate words (a sign diagonal squares to
/// the identity, say) can collapse to exactly that noise; flooring the
/// error bar at the roundoff scale keeps such rows from scoring spuriously.
fn scored_row(
    quantity: String,
    pool: &Pool,
    config: &SampleConfig,
    est_fn: impl Fn(&Range<usize>) -> f64,
    pred_fn: impl Fn(&Range<usize>) -> f64,
    provenance: &str,
) -> ReportRow {
    let full = 0..config.samples;
    let est = est_fn(&full);
    let pred = pred_fn(&full);
    let diff = batched(config.samples, config.batch_size, |r| {
        est_fn(&r) - pred_fn(&r)
    });
    // diff.value == est - pred, so the row's z is the batched difference
    // over its own standard error.
    ReportRow::predicted(
        quantity,
        pool.n as usize,
        config.samples,
        est,
        diff.std_err.max(1e-12 * pool.n),
        pred,
        provenance,
    )
}

pub fn verify_asymptotic_freeness(
    spec_a: &EnsembleSpec,
    spec_b: &EnsembleSpec,
    config: &SampleConfig,
) -> Result<FluctuationReport, RmtError> {
    spec_a.validate()?;
    spec_b.validate()?;
    config.validate()?;
    if spec_a.n != spec_b.n {
        return Err(RmtError::InvalidSpec(
            "both families must share one dimension".into(),
        ));
    }
    if !spec_a.is_unitarily_invariant() && !spec_b.is_unitarily_invariant() {
        return Err(RmtError::InvalidSpec(
            "asymptotic freeness needs at least one unitarily invariant side".into(),
        ));
    }
    let need = 25 * 4usize.pow(2);
    if config.samples < need {
        return Err(RmtError::TooFewSamples {
            need,
            got: config.samples,
        });
    }

    // Independent streams: sample 2i feeds A, sample 2i+1 feeds B.
    let raw = config.run(|i| {
        let a = spec_a.sample(config.seed, 2 * i);
        let b = spec_b.sample(config.seed, 2 * i + 1);
        raw_traces(&a, &b)
    });
    let pool = Pool {
        raw,
        n: spec_a.n as f64,
    };

    let mut report = FluctuationReport::default();

    // First order: normalized traces of centered alternating pairs vanish.
    for (n, m) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
        report.push(scored_row(
            format!("tr((A^{n}-aI)(B^{m}-bI))"),
            &pool,
            config,
            |r| {
                (pool.mean(r, |t| t.tab[n - 1][m - 1])
                    - pool.mean(r, |t| t.ta[n - 1]) * pool.mean(r, |t| t.tb[m - 1]) / pool.n)
                    / pool.n
            },
            |_| 0.0,
            "first-order asymptotic freeness",
        ));
    }

    // One-pair words: cov of two centered alternating words against the
    // single spoke product of the marginal moments.
    for (n, m, nt, mt) in [(1usize, 1usize, 1usize, 1usize), (2, 1, 1, 2)] {
        report.push(scored_row(
            format!("cov(Tr[(A^{n}-a)(B^{m}-b)];Tr[(A^{nt}-a)(B^{mt}-b)])"),
            &pool,
            config,
            |r| covariance(&pool.centered_pair(r, n, m), &pool.centered_pair(r, nt, mt)),
            |r| {
                spoke(|k| pool.alpha_a(r, k), n, nt) * spoke(|k| pool.alpha_b(r, k), m, mt)
            },
            "second-order freeness display",
        ));
    }

    // Two-pair word against itself: the display sums over both cyclic
    // alignments, each contributing the same product of four spokes.
    report.push(scored_row(
        "cov(Tr[(A-a)(B-b)(A-a)(B-b)];same)".into(),
        &pool,
        config,
        |r| {
            let z = pool.centered_quad(r);
            covariance(&z, &z)
        },
        |r| {
            let sa = spoke(|k| pool.alpha_a(r, k), 1, 1);
            let sb = spoke(|k| pool.alpha_b(r, k), 1, 1);
            2.0 * (sa * sb) * (sa * sb)
        },
        "second-order freeness display",
    ));

    // Words with different numbers of pairs have no covariance.
    report.push(scored_row(
        "cov(Tr[(A-a)(B-b)];Tr[(A-a)(B-b)(A-a)(B-b)])".into(),
        &pool,
        config,
        |r| covariance(&pool.centered_pair(r, 1, 1), &pool.centered_quad(r)),
        |_| 0.0,
        "second-order freeness display",
    ));

    Ok(report)
}
