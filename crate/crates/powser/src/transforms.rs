//! Moment/cumulant transforms, first and second order, plus the Cauchy-form
//! identity they satisfy.
//!
//! Conventions: the first-order cumulant series is `C(x) = 1 + sum k_n x^n`
//! and the moment series is `M(x) = 1 + sum a_n x^n`, linked by
//! `M(x) = C(x M(x))`. Second-order data lives in pure double series
//! `sum_{m,n >= 1} a_{m,n} x^m y^n`, linked through the universal bridge
//! term built from the first-order cumulants alone.

use crate::{Series1, Series2};
use combinat::Scalar;
use num_traits::{One, Zero};

/// `M` from `C` by running the fixed point `M <- C(xM)` to stability; each
/// pass settles one more coefficient.
pub fn moments_from_cumulants(c: &Series1) -> Series1 {
    assert!(c.coeff(0).is_one(), "cumulant series must start at 1");
    let t = c.trunc();
    let mut m = Series1::constant(Scalar::one(), t);
    for _ in 0..=t {
        m = c.compose(&m.shift_up());
    }
    m
}

/// `C` from `M` by composing with the inverse of `x M(x)`.
pub fn cumulants_from_moments(m: &Series1) -> Series1 {
    assert!(m.coeff(0).is_one(), "moment series must start at 1");
    m.compose(&m.shift_up().reversion())
}

/// The universal second-order bridge
/// `-xy [ P(x)P(y) / (xC(y) - yC(x))^2 - 1/(x-y)^2 ]` with
/// `P = C - x C'`, assembled without ever dividing by `x - y` blindly:
/// `u = (xC(y) - yC(x)) / (x - y)` has the explicit expansion
/// `c_0 - xy sum_{k>=2} c_k h_{k-2}(x, y)` in complete homogeneous pieces,
/// and `P(x)P(y) - u^2` is symmetric and vanishes on the diagonal, hence
/// divisible by `(x - y)^2`.
pub fn tilde_c(c: &Series1, cap: usize) -> Series2 {
    assert!(cap >= 2, "bridge term needs total degree at least 2");
    assert!(c.trunc() >= cap, "cumulant series too short for cap {cap}");
    let p = &c.truncate_to(cap) - &c.truncate_to(cap).x_derivative();
    let mut u = Series2::constant(c.coeff(0), cap);
    for k in 2..=cap {
        let ck = c.coeff(k);
        if ck.is_zero() {
            continue;
        }
        for a in 0..=k - 2 {
            let b = k - 2 - a;
            u.set(a + 1, b + 1, u.coeff(a + 1, b + 1) - &ck);
        }
    }
    let u2 = &u * &u;
    let w = &Series2::outer(&p, &p, cap) - &u2;
    let w2 = w.div_x_minus_y().div_x_minus_y();
    let quotient = &w2 * &u2.truncate_to(cap - 2).reciprocal();
    -&quotient.mul_xy()
}

/// Second-order moments from first- and second-order cumulants:
/// substitute `x M(x)`, `y M(y)` into the bridge-completed cumulant series
/// and fix the measure with the separable factor `(xM)'(x) (yM)'(y) / (M M)`.
pub fn second_order_moments(c1: &Series1, c2: &Series2) -> Series2 {
    let cap = c2.cap();
    assert!(c1.trunc() >= cap, "first-order series too short");
    let m1 = moments_from_cumulants(c1);
    let q = m1.shift_up();
    let f = &xm_derivative(&m1) * &m1.reciprocal();
    let h = c2 + &tilde_c(c1, cap);
    &h.compose_subst(&q, &q) * &Series2::outer(&f, &f, cap)
}

/// Second-order cumulants from first- and second-order moments: the inverse
/// of `second_order_moments`, peeling the separable factor, undoing the
/// substitution, and subtracting the bridge.
pub fn second_order_cumulants(m1: &Series1, m2: &Series2) -> Series2 {
    let cap = m2.cap();
    assert!(m1.trunc() >= cap, "first-order series too short");
    let q = m1.shift_up();
    let qinv = q.reversion();
    let f = &xm_derivative(m1) * &m1.reciprocal();
    let h = (m2 * &Series2::outer(&f, &f, cap).reciprocal()).compose_subst(&qinv, &qinv);
    let c1 = cumulants_from_moments(m1);
    &h - &tilde_c(&c1, cap)
}

/// `(x M(x))'` at the order of `m`: coefficient `k` is `(k+1) m_k`.
fn xm_derivative(m: &Series1) -> Series1 {
    let t = m.trunc();
    let mut out = Series1::zero(t);
    for k in 0..=t {
        out.set(k, m.coeff(k) * Scalar::from_integer((k + 1).into()));
    }
    out
}

/// The difference between the two sides of the second-order Cauchy-form
/// identity, written in the variables `s = 1/x`, `t = 1/y` where every
/// ingredient is a genuine power series:
///
/// `st M2(s,t) - s^2 t^2 G'(s) G'(t) R(G(s), G(t))
///  - s^2 t^2 [G'(s)G'(t) - h(s,t)^2] / ((s-t)^2 h(s,t)^2)`
///
/// with `G = s M(s)` the Cauchy transform in disguise,
/// `h = (G(s) - G(t))/(s - t)`, and `R(z, w) = C2(z, w)/(zw)`. The bracket
/// is symmetric and vanishes on the diagonal, so the division is exact.
/// Identically zero whenever `(M, M2)` and `(C, C2)` are a transform pair;
/// entries are reliable through total degree `cap + 2`.
pub fn cauchy_residual(c1: &Series1, c2: &Series2, cap: usize) -> Series2 {
    assert!(c1.trunc() >= cap + 1, "need one extra first-order coefficient");
    let c2w = c2.truncate_to(cap);
    let m1 = moments_from_cumulants(c1);
    let m2 = second_order_moments(&c1.truncate_to(cap), &c2w);
    let g = m1.shift_up();
    let gp = xm_derivative(&m1);

    let term1 = m2.mul_xy();

    // R(G(s), G(t)) scaled back up by G'(s) G'(t) and s^2 t^2
    let r = c2w.div_xy();
    let r_sub = r.compose_subst(&g.truncate_to(cap), &g.truncate_to(cap));
    let gp_outer = Series2::outer(&gp, &gp, cap - 2);
    let term2 = (&r_sub.truncate_to(cap - 2) * &gp_outer).mul_xy().mul_xy();

    // h = (G(s) - G(t))/(s - t) expanded in complete homogeneous pieces
    let mut h = Series2::zero(cap);
    for k in 1..=cap + 1 {
        let gk = g.coeff(k);
        if gk.is_zero() {
            continue;
        }
        for a in 0..=k - 1 {
            let b = k - 1 - a;
            if a + b <= cap {
                h.set(a, b, h.coeff(a, b) + &gk);
            }
        }
    }
    let h2 = &h * &h;
    let w = &Series2::outer(&gp, &gp, cap) - &h2;
    let w2 = w.div_x_minus_y().div_x_minus_y();
    let term3 = (&w2 * &h2.truncate_to(cap - 2).reciprocal()).mul_xy().mul_xy();

    &(&term1 - &term2) - &term3
}
