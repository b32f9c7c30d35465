//! Two-variable series truncated by total degree.
//!
//! Coefficients live on the triangle `i + j <= cap`; the square storage
//! beyond it stays zero. Division by `x - y` consumes one order and
//! announces that by returning a smaller cap; multiplication by `xy` is
//! exact and returns a larger one.

use crate::Series1;
use combinat::Scalar;
use num_traits::Zero;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series2 {
    cap: usize,
    c: Vec<Vec<Scalar>>,
}

impl Series2 {
    pub fn zero(cap: usize) -> Self {
        Series2 { cap, c: vec![vec![Scalar::zero(); cap + 1]; cap + 1] }
    }

    pub fn constant(v: Scalar, cap: usize) -> Self {
        let mut s = Series2::zero(cap);
        s.c[0][0] = v;
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Coefficient of `x^i y^j`; zero outside the triangle.
    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        if i + j <= self.cap {
            self.c[i][j].clone()
        } else {
            Scalar::zero()
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i + j <= self.cap, "({i},{j}) beyond total degree {}", self.cap);
        self.c[i][j] = v;
    }

    pub fn truncate_to(&self, cap: usize) -> Series2 {
        assert!(cap <= self.cap);
        let mut out = Series2::zero(cap);
        for i in 0..=cap {
            for j in 0..=cap - i {
                out.c[i][j] = self.c[i][j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|row| row.iter().all(Scalar::is_zero))
    }

    pub fn scale(&self, v: &Scalar) -> Series2 {
        let mut out = self.clone();
        for row in &mut out.c {
            for a in row {
                *a = &*a * v;
            }
        }
        out
    }

    /// Separable series `f(x) g(y)` restricted to the triangle.
    pub fn outer(f: &Series1, g: &Series1, cap: usize) -> Series2 {
        assert!(f.trunc() >= cap && g.trunc() >= cap, "factors too short for cap {cap}");
        let mut out = Series2::zero(cap);
        for i in 0..=cap {
            let fi = f.coeff(i);
            if fi.is_zero() {
                continue;
            }
            for j in 0..=cap - i {
                out.c[i][j] = &fi * &g.coeff(j);
            }
        }
        out
    }

    /// Multiplication by `xy`: exact, cap grows by two.
    pub fn mul_xy(&self) -> Series2 {
        let mut out = Series2::zero(self.cap + 2);
        for i in 0..=self.cap {
            for j in 0..=self.cap - i {
                out.c[i + 1][j + 1] = self.c[i][j].clone();
            }
        }
        out
    }

    /// Division by `xy`: the first row and column must vanish.
    pub fn div_xy(&self) -> Series2 {
        assert!(self.cap >= 2);
        for k in 0..=self.cap {
            assert!(self.c[0][k].is_zero() && self.c[k][0].is_zero(), "not divisible by xy");
        }
        let mut out = Series2::zero(self.cap - 2);
        for i in 0..=self.cap - 2 {
            for j in 0..=self.cap - 2 - i {
                out.c[i][j] = self.c[i + 1][j + 1].clone();
            }
        }
        out
    }

    /// Division by `x - y` for series that are exactly divisible (checked in
    /// debug builds by remultiplying). One order is consumed: entries at
    /// total degree `cap` of the quotient would need the dividend beyond its
    /// own cap.
    pub fn div_x_minus_y(&self) -> Series2 {
        assert!(self.cap >= 1);
        let mut out = Series2::zero(self.cap - 1);
        // unrolling q[i][j] = q[i-1][j+1] - p[i][j+1] down the anti-diagonal
        for i in 0..=self.cap - 1 {
            for j in 0..=self.cap - 1 - i {
                let mut s = Scalar::zero();
                for t in 0..=i {
                    s -= &self.c[i - t][j + 1 + t];
                }
                out.c[i][j] = s;
            }
        }
        debug_assert!({
            let mut ok = true;
            for i in 0..=self.cap {
                for j in 0..=self.cap - i {
                    let a = if i >= 1 { out.coeff(i - 1, j) } else { Scalar::zero() };
                    let b = if j >= 1 { out.coeff(i, j - 1) } else { Scalar::zero() };
                    ok &= a - b == self.c[i][j];
                }
            }
            ok
        });
        out
    }

    /// Substitute `x -> fx(x)`, `y -> gy(y)` for inner series without
    /// constant term. Exact at this cap when the inner orders reach it.
    pub fn compose_subst(&self, fx: &Series1, gy: &Series1) -> Series2 {
        assert!(fx.coeff(0).is_zero() && gy.coeff(0).is_zero());
        assert!(fx.trunc() >= self.cap && gy.trunc() >= self.cap);
        let cap = self.cap;
        let fpow = powers(&fx.truncate_to(cap), cap);
        let gpow = powers(&gy.truncate_to(cap), cap);
        let mut out = Series2::zero(cap);
        for i in 0..=cap {
            for j in 0..=cap - i {
                if self.c[i][j].is_zero() {
                    continue;
                }
                for a in i..=cap {
                    let fa = fpow[i].coeff(a);
                    if fa.is_zero() {
                        continue;
                    }
                    let w = &self.c[i][j] * &fa;
                    for b in j..=cap - a {
                        out.c[a][b] += &w * &gpow[j].coeff(b);
                    }
                }
            }
        }
        out
    }

    /// `1 / self` at the same cap; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Series2 {
        let c00 = self.c[0][0].clone();
        assert!(!c00.is_zero(), "no reciprocal: zero constant term");
        let cap = self.cap;
        let mut inv = Series2::zero(cap);
        for d in 0..=cap {
            for i in 0..=d {
                let j = d - i;
                let mut s = Scalar::zero();
                for a in 0..=i {
                    for b in 0..=j {
                        if a == i && b == j {
                            continue;
                        }
                        if !self.c[i - a][j - b].is_zero() {
                            s += &self.c[i - a][j - b] * &inv.c[a][b];
                        }
                    }
                }
                let delta = if d == 0 { Scalar::from_integer(1.into()) } else { Scalar::zero() };
                inv.c[i][j] = (delta - s) / &c00;
            }
        }
        inv
    }

    /// Value of the truncating polynomial at a point.
    pub fn eval(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for i in (0..=self.cap).rev() {
            let mut row = Scalar::zero();
            for j in (0..=self.cap - i).rev() {
                row = row * y + &self.c[i][j];
            }
            acc = acc * x + row;
        }
        acc
    }
}

fn powers(f: &Series1, cap: usize) -> Vec<Series1> {
    let mut out = Vec::with_capacity(cap + 1);
    out.push(Series1::constant(Scalar::from_integer(1.into()), cap));
    for k in 1..=cap {
        let next = &out[k - 1] * f;
        out.push(next);
    }
    out
}

impl Add for &Series2 {
    type Output = Series2;
    fn add(self, rhs: &Series2) -> Series2 {
        assert_eq!(self.cap, rhs.cap, "cap mismatch");
        let mut out = self.clone();
        for (ro, rr) in out.c.iter_mut().zip(&rhs.c) {
            for (a, b) in ro.iter_mut().zip(rr) {
                *a += b;
            }
        }
        out
    }
}

impl Sub for &Series2 {
    type Output = Series2;
    fn sub(self, rhs: &Series2) -> Series2 {
        assert_eq!(self.cap, rhs.cap, "cap mismatch");
        let mut out = self.clone();
        for (ro, rr) in out.c.iter_mut().zip(&rhs.c) {
            for (a, b) in ro.iter_mut().zip(rr) {
                *a -= b;
            }
        }
        out
    }
}

impl Mul for &Series2 {
    type Output = Series2;
    fn mul(self, rhs: &Series2) -> Series2 {
        assert_eq!(self.cap, rhs.cap, "cap mismatch");
        let cap = self.cap;
        let mut out = Series2::zero(cap);
        for i in 0..=cap {
            for j in 0..=cap - i {
                if self.c[i][j].is_zero() {
                    continue;
                }
                for a in 0..=cap - i - j {
                    for b in 0..=cap - i - j - a {
                        if !rhs.c[a][b].is_zero() {
                            out.c[i + a][j + b] += &self.c[i][j] * &rhs.c[a][b];
                        }
                    }
                }
            }
        }
        out
    }
}

impl Neg for &Series2 {
    type Output = Series2;
    fn neg(self) -> Series2 {
        let mut out = self.clone();
        for row in &mut out.c {
            for a in row {
                *a = -&*a;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use combinat::int;

    fn x_minus_y(cap: usize) -> Series2 {
        let mut s = Series2::zero(cap);
        s.set(1, 0, int(1));
        s.set(0, 1, int(-1));
        s
    }

    #[test]
    fn division_by_x_minus_y_undoes_multiplication() {
        let mut p = Series2::zero(3);
        p.set(0, 0, int(2));
        p.set(1, 0, int(3));
        p.set(0, 1, int(5));
        p.set(1, 1, int(-1));
        p.set(2, 0, int(4));
        let prod = &p * &x_minus_y(3);
        // the product lost the cap-3 part of p, so compare through cap 2
        assert_eq!(prod.div_x_minus_y(), p.truncate_to(2));
    }

    #[test]
    fn reciprocal_multiplies_back_to_one() {
        let mut s = Series2::zero(4);
        s.set(0, 0, int(2));
        s.set(1, 0, int(1));
        s.set(0, 2, int(-3));
        s.set(2, 1, int(7));
        let one = Series2::constant(int(1), 4);
        assert_eq!(&s * &s.reciprocal(), one);
    }

    #[test]
    fn substitution_matches_pointwise_evaluation() {
        let mut s = Series2::zero(3);
        s.set(1, 1, int(2));
        s.set(2, 0, int(1));
        s.set(0, 1, int(-1));
        let f = Series1::from_coeffs(vec![int(0), int(1), int(1), int(0)]);
        let g = Series1::from_coeffs(vec![int(0), int(2), int(0), int(-1)]);
        let sub = s.compose_subst(&f, &g);
        // degree-3 truncation of s(f(x), g(y)) by hand:
        // 2 f g = 2(x + x^2)(2y - y^3) -> 4xy + 4x^2 y (within total degree 3)
        // f^2 = x^2 + 2x^3, -g = -2y + y^3
        let mut want = Series2::zero(3);
        want.set(1, 1, int(4));
        want.set(2, 1, int(4));
        want.set(2, 0, int(1));
        want.set(3, 0, int(2));
        want.set(0, 1, int(-2));
        want.set(0, 3, int(1));
        assert_eq!(sub, want);
    }

    #[test]
    fn eval_walks_the_triangle() {
        let mut s = Series2::zero(2);
        s.set(0, 0, int(1));
        s.set(1, 1, int(6));
        s.set(2, 0, int(4));
        let v = s.eval(&combinat::ratio(1, 2), &combinat::ratio(1, 3));
        assert_eq!(v, combinat::ratio(3, 1));
    }
}
