//! Exact counting helpers: factorials, binomials, Catalan numbers, and the
//! annular analogue counting connected noncrossing permutations on two
//! cycles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    f
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        // exact at every step: acc * (n-j) = binom(n, j+1) * (j+1)
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Catalan number `binom(2n, n) / (n + 1)`, the size of `NC(n)`.
pub fn catalan(n: usize) -> BigInt {
    let (q, r) = binomial(2 * n, n).div_rem(&BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    q
}

/// Connected annular count
/// `2mn/(m+n) * binom(2m-1, m) * binom(2n-1, n)`,
/// the number of noncrossing permutations joining an m-cycle and an n-cycle.
pub fn annular_catalan(m: usize, n: usize) -> BigInt {
    assert!(m >= 1 && n >= 1);
    let num = BigInt::from(2 * m * n) * binomial(2 * m - 1, m) * binomial(2 * n - 1, n);
    let (q, r) = num.div_rem(&BigInt::from(m + n));
    assert!(r.is_zero(), "annular count must be an integer");
    q
}
