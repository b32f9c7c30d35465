//! Matrix ensembles and the per-sample generators that draw from them.
//!
//! Every entry is produced by a counter-mode generator keyed on
//! (master seed, sample index), so sample `i` is the same matrix no matter
//! how many threads are running or in which order samples complete.
//! Normals come from the trigonometric Box-Muller transform; that choice is
//! part of the reproducibility contract and must not be swapped for a
//! ziggurat or rejection sampler.

use nalgebra::DMatrix;
use num_complex::Complex;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::RmtError;

pub type Matrix = DMatrix<Complex<f64>>;

#[derive(Clone, Debug)]
pub enum Kind {
    /// Hermitian Gaussian, scaled so E tr(A^2) -> 1.
    Gue,
    /// A = X X* / N with X an N x round(ratio N) matrix of unit-variance
    /// complex Gaussians.
    Wishart { ratio: f64 },
    /// Fixed diagonal matrix; consumes no randomness.
    DeterministicDiagonal(Vec<f64>),
    /// U A U* with A drawn from the inner ensemble and U an independent
    /// Haar unitary.
    HaarConjugate(Box<Kind>),
}

#[derive(Clone, Debug)]
pub struct EnsembleSpec {
    pub kind: Kind,
    pub n: usize,
}

impl EnsembleSpec {
    pub fn gue(n: usize) -> Self {
        EnsembleSpec { kind: Kind::Gue, n }
    }

    pub fn wishart(n: usize, ratio: f64) -> Self {
        EnsembleSpec {
            kind: Kind::Wishart { ratio },
            n,
        }
    }

    pub fn diagonal(values: Vec<f64>) -> Self {
        let n = values.len();
        EnsembleSpec {
            kind: Kind::DeterministicDiagonal(values),
            n,
        }
    }

    pub fn haar_conjugate(inner: EnsembleSpec) -> Self {
        let n = inner.n;
        EnsembleSpec {
            kind: Kind::HaarConjugate(Box::new(inner.kind)),
            n,
        }
    }

    pub fn validate(&self) -> Result<(), RmtError> {
        if self.n == 0 {
            return Err(RmtError::InvalidSpec("dimension must be positive".into()));
        }
        fn check(kind: &Kind, n: usize) -> Result<(), RmtError> {
            match kind {
                Kind::Gue => Ok(()),
                Kind::Wishart { ratio } => {
                    if !ratio.is_finite() || *ratio <= 0.0 {
                        return Err(RmtError::InvalidSpec(
                            "Wishart ratio must be positive".into(),
                        ));
                    }
                    if ((*ratio * n as f64).round() as i64) < 1 {
                        return Err(RmtError::InvalidSpec(
                            "Wishart needs at least one column; raise N or the ratio".into(),
                        ));
                    }
                    Ok(())
                }
                Kind::DeterministicDiagonal(values) => {
                    if values.len() != n {
                        return Err(RmtError::InvalidSpec(format!(
                            "diagonal has {} entries but the dimension is {}",
                            values.len(),
                            n
                        )));
                    }
                    Ok(())
                }
                Kind::HaarConjugate(inner) => check(inner, n),
            }
        }
        check(&self.kind, self.n)
    }

    /// Columns of the rectangular factor for a Wishart spec.
    pub fn wishart_columns(&self) -> Option<usize> {
        match &self.kind {
            Kind::Wishart { ratio } => Some((ratio * self.n as f64).round() as usize),
            _ => None,
        }
    }

    /// True when sampling actually consumes randomness.
    pub fn is_random(&self) -> bool {
        fn random(kind: &Kind) -> bool {
            match kind {
                Kind::DeterministicDiagonal(_) => false,
                Kind::HaarConjugate(_) => true,
                _ => true,
            }
        }
        random(&self.kind)
    }

    /// True when the distribution is invariant under unitary conjugation,
    /// which is what the entry-level and freeness checks rely on.
    pub fn is_unitarily_invariant(&self) -> bool {
        match &self.kind {
            Kind::Gue | Kind::Wishart { .. } => true,
            Kind::HaarConjugate(_) => true,
            Kind::DeterministicDiagonal(_) => false,
        }
    }

    pub fn sample(&self, seed: u64, index: u64) -> Matrix {
        let mut rng = derive_rng(seed, index);
        sample_kind(&self.kind, self.n, &mut rng)
    }
}

fn sample_kind(kind: &Kind, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    match kind {
        Kind::Gue => gue_matrix(n, rng),
        Kind::Wishart { ratio } => {
            let m = ((*ratio * n as f64).round() as usize).max(1);
            wishart_matrix(n, m, rng)
        }
        Kind::DeterministicDiagonal(values) => {
            Matrix::from_diagonal(&nalgebra::DVector::from_iterator(
                n,
                values.iter().map(|&v| Complex::new(v, 0.0)),
            ))
        }
        Kind::HaarConjugate(inner) => {
            let a = sample_kind(inner, n, rng);
            let u = haar_unitary(n, rng);
            &u * a * u.adjoint()
        }
    }
}

/// Expands (seed, index) into a generator with well-separated streams.
pub fn derive_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut state = seed ^ (index.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut key = [0u8; 32];
    for chunk in key.chunks_mut(8) {
        state = splitmix64(&mut state);
        chunk.copy_from_slice(&state.to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One standard normal pair via Box-Muller.
fn normal_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let u1: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let theta = 2.0 * std::f64::consts::PI * u2;
    (r * theta.cos(), r * theta.sin())
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    normal_pair(rng).0
}

/// Unit-variance complex Gaussian: (x + iy)/sqrt(2) with x, y standard.
fn complex_gaussian(rng: &mut ChaCha8Rng) -> Complex<f64> {
    let (x, y) = normal_pair(rng);
    Complex::new(x, y) / f64::sqrt(2.0)
}

/// Hermitian Gaussian with E tr(A^2) -> 1: real diagonal of variance 1/N,
/// off-diagonal complex entries of total variance 1/N. Entries are drawn in
/// row-major order over the upper triangle so the stream layout is fixed.
fn gue_matrix(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let scale = 1.0 / (n as f64).sqrt();
    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        a[(i, i)] = Complex::new(standard_normal(rng) * scale, 0.0);
        for j in (i + 1)..n {
            let z = complex_gaussian(rng) * scale;
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    a
}

fn wishart_matrix(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut x = DMatrix::zeros(n, m);
    for i in 0..n {
        for j in 0..m {
            x[(i, j)] = complex_gaussian(rng);
        }
    }
    (&x * x.adjoint()) / Complex::new(n as f64, 0.0)
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with each
/// column rephased by r_jj / |r_jj| so the factorization is the unique one
/// with positive diagonal.
pub fn haar_unitary(n: usize, rng: &mut impl RngCore) -> Matrix {
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let u1: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
            let u2: f64 = rng.gen();
            let r = (-2.0 * u1.ln()).sqrt();
            let theta = 2.0 * std::f64::consts::PI * u2;
            g[(i, j)] = Complex::new(r * theta.cos(), r * theta.sin()) / f64::sqrt(2.0);
        }
    }
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            Complex::new(1.0, 0.0)
        };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}
