//! One-variable series truncated at a fixed degree.
//!
//! Truncation discipline: binary arithmetic insists on equal truncation
//! orders so that mixed-precision results cannot appear silently. The only
//! operations that change the order are the exact ones (`shift_up`,
//! `truncate_to`, `derivative`) and `compose`, which returns the order both
//! inputs support.

use combinat::Scalar;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series1 {
    coeffs: Vec<Scalar>,
}

impl Series1 {
    pub fn zero(trunc: usize) -> Self {
        Series1 { coeffs: vec![Scalar::zero(); trunc + 1] }
    }

    pub fn constant(c: Scalar, trunc: usize) -> Self {
        let mut s = Series1::zero(trunc);
        s.coeffs[0] = c;
        s
    }

    /// Coefficients of `x^0 .. x^trunc`; the vector length fixes the order.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty());
        Series1 { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, k: usize, v: Scalar) {
        assert!(k < self.coeffs.len(), "degree {k} beyond truncation");
        self.coeffs[k] = v;
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn truncate_to(&self, trunc: usize) -> Series1 {
        assert!(trunc <= self.trunc());
        Series1 { coeffs: self.coeffs[..=trunc].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Series1 {
        Series1 { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `x`: exact, raises the order by one.
    pub fn shift_up(&self) -> Series1 {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Scalar::zero());
        coeffs.extend_from_slice(&self.coeffs);
        Series1 { coeffs }
    }

    /// `x f'(x)`, exact at the same order: coefficient `k` becomes `k c_k`.
    pub fn x_derivative(&self) -> Series1 {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * Scalar::from_integer(k.into()))
            .collect();
        Series1 { coeffs }
    }

    /// `f'(x)`; the order drops by one.
    pub fn derivative(&self) -> Series1 {
        assert!(self.trunc() >= 1);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Scalar::from_integer(k.into()))
            .collect();
        Series1 { coeffs }
    }

    /// `self(inner)` for `inner` without constant term. Exact through the
    /// order both inputs support.
    pub fn compose(&self, inner: &Series1) -> Series1 {
        assert!(inner.coeff(0).is_zero(), "inner series needs a zero constant term");
        let t = self.trunc().min(inner.trunc());
        let inner_t = inner.truncate_to(t);
        let mut acc = Series1::zero(t);
        for k in (0..self.coeffs.len()).rev() {
            acc = &(&acc * &inner_t) + &Series1::constant(self.coeffs[k].clone(), t);
        }
        acc
    }

    /// `1 / self` at the same order; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Series1 {
        let c0 = self.coeff(0);
        assert!(!c0.is_zero(), "no reciprocal: zero constant term");
        let t = self.trunc();
        let mut inv = Series1::zero(t);
        inv.coeffs[0] = Scalar::one() / &c0;
        for k in 1..=t {
            let mut s = Scalar::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &inv.coeffs[k - j];
            }
            inv.coeffs[k] = -s / &c0;
        }
        inv
    }

    /// Compositional inverse: `g` with `self(g(x)) = x`, at the same order.
    /// Needs a zero constant term and an invertible linear term.
    pub fn reversion(&self) -> Series1 {
        assert!(self.coeff(0).is_zero(), "reversion needs a zero constant term");
        let a1 = self.coeff(1);
        assert!(!a1.is_zero(), "reversion needs an invertible linear term");
        let t = self.trunc();
        let mut g = Series1::zero(t);
        g.coeffs[1] = Scalar::one() / &a1;
        for k in 2..=t {
            let e = self.compose(&g).coeff(k);
            g.coeffs[k] = -e / &a1;
        }
        debug_assert!({
            let mut x = Series1::zero(t);
            if t >= 1 {
                x.coeffs[1] = Scalar::one();
            }
            self.compose(&g) == x
        });
        g
    }

    /// Value of the truncating polynomial at a point.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl Add for &Series1 {
    type Output = Series1;
    fn add(self, rhs: &Series1) -> Series1 {
        assert_eq!(self.trunc(), rhs.trunc(), "order mismatch");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Series1 { coeffs }
    }
}

impl Sub for &Series1 {
    type Output = Series1;
    fn sub(self, rhs: &Series1) -> Series1 {
        assert_eq!(self.trunc(), rhs.trunc(), "order mismatch");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Series1 { coeffs }
    }
}

impl Mul for &Series1 {
    type Output = Series1;
    fn mul(self, rhs: &Series1) -> Series1 {
        assert_eq!(self.trunc(), rhs.trunc(), "order mismatch");
        let t = self.trunc();
        let mut out = Series1::zero(t);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > t {
                    break;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl Neg for &Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        Series1 { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}
