//! Counting geodesic factorizations: convolution powers of the disc
//! indicator `zeta` evaluated at connected targets. The closed product
//! formula, two recursions, and the brute-force factorization scan all
//! compute the same numbers and are tested against one another.

use crate::MultFn;
use combinat::shape::Shape;
use combinat::{binomial, catalan, factorial, Permutation, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// `zeta^{*p}` at the connected diagram with cycle profile `lens`, by the
/// closed product formula
/// `p [(p-1)n - 1]! / [(p-1)n - r + 2]! prod_i n_i binom(p n_i - 1, n_i)`.
/// The factorial quotient is a genuine fraction for small `r`, so the value
/// is assembled in exact rationals even though the result is an integer.
pub fn zeta_power_closed(p: usize, lens: &[usize]) -> Scalar {
    assert!(p >= 1 && !lens.is_empty() && lens.iter().all(|&l| l >= 1));
    let r = lens.len();
    if p == 1 {
        // zeta itself: 1 exactly when the diagram is a disc, i.e. one cycle
        return if r == 1 { Scalar::one() } else { Scalar::zero() };
    }
    let n: usize = lens.iter().sum();
    let head = Scalar::new(
        BigInt::from(p) * factorial((p - 1) * n - 1),
        factorial((p - 1) * n - r + 2),
    );
    lens.iter().fold(head, |acc, &l| {
        acc * Scalar::from_integer(BigInt::from(l) * binomial(p * l - 1, l))
    })
}

/// Number of geodesic disc pairs at a connected target, by the recursion
/// that transfers cycles onto the first one: each other cycle may merge
/// into the first, or the first splits at a point with the remaining
/// cycles distributed over the two sides. Symmetric in the profile, so the
/// memo key is the sorted profile.
pub fn connected_count_recursive(lens: &[usize]) -> BigInt {
    assert!(lens.iter().all(|&l| l >= 1));
    let mut memo = HashMap::new();
    match lens.split_first() {
        None => BigInt::one(),
        Some((&first, rest)) => go(first, rest.to_vec(), &mut memo),
    }
}

fn go(first: usize, rest: Vec<usize>, memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
    if first == 0 {
        // an empty first cycle only closes off a branch with nothing left
        return if rest.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    let mut key: Vec<usize> = rest.iter().copied().chain([first]).collect();
    key.sort_unstable();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for l in 0..rest.len() {
        let mut others = rest.clone();
        let len_l = others.remove(l);
        total += BigInt::from(len_l) * go(first + len_l - 1, others, memo);
    }
    for k in 1..=first {
        for mask in 0..(1u32 << rest.len()) {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for (j, &l) in rest.iter().enumerate() {
                if mask >> j & 1 == 0 { a.push(l) } else { b.push(l) }
            }
            total += go(k - 1, a, memo) * go(first - k, b, memo);
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Two-cycle connected count by the recursion that peels the second circle:
/// a point of it either starts a sub-arc closed off on one circle, or jumps
/// to the first circle (collapsing the pair to one long cycle).
pub fn annular_count_recursive(m: usize, n: usize) -> BigInt {
    assert!(m >= 1 && n >= 1);
    fn c2(m: usize, n: usize, memo: &mut HashMap<(usize, usize), BigInt>) -> BigInt {
        if n == 0 {
            return BigInt::zero();
        }
        if let Some(v) = memo.get(&(m, n)) {
            return v.clone();
        }
        let mut total = BigInt::from(m) * catalan(m + n - 1);
        for k in 1..=n {
            total += catalan(k - 1) * c2(m, n - k, memo)
                + c2(m, k - 1, memo) * catalan(n - k);
        }
        memo.insert((m, n), total.clone());
        total
    }
    c2(m, n, &mut HashMap::new())
}

/// `zeta * zeta` at a connected diagram, by the recursion that strips the
/// first point: conjugating the base permutation to fix that point either
/// shortens its cycle, merges its cycle with another, or splits its cycle
/// in two with the other cycles distributed over the two sides. Values
/// depend only on the cycle type, and the all-fixed-points case (where no
/// stripping is possible) degenerates to counting full cycles: `(n - 1)!`.
pub fn zeta_square_connected(shape: &Shape, memo: &mut HashMap<Shape, BigInt>) -> BigInt {
    if let Some(v) = memo.get(shape) {
        return v.clone();
    }
    let n = shape.size();
    let value = if n == 1 {
        BigInt::one()
    } else if shape.parts().iter().all(|&l| l == 1) {
        // base permutation is the identity: the only geodesic disc pairs
        // through the full join are (c, c^{-1}) for an n-cycle c
        factorial(n - 1)
    } else {
        let gamma = Permutation::from_profile(shape.parts());
        let gamma_cycles = gamma.cycles();
        let cycle_of = |x: usize| gamma_cycles.iter().position(|c| c.contains(&x)).unwrap();
        let g0 = gamma.apply(0);
        let keep: Vec<bool> = (0..n).map(|i| i != 0).collect();
        let mut total = BigInt::zero();
        for k in 0..n {
            let t1 = if k == 0 {
                Permutation::identity(n)
            } else {
                Permutation::transposition(n, 0, k)
            };
            let pre = gamma.inverse().apply(k);
            let t2 = if pre == 0 {
                Permutation::identity(n)
            } else {
                Permutation::transposition(n, 0, pre)
            };
            let hat = t1.compose(&gamma).compose(&t2);
            debug_assert_eq!(hat.apply(0), 0);
            let hat_r = hat.restrict(&keep);
            if k == 0 || k == g0 || cycle_of(k) != 0 {
                total += zeta_square_connected(&hat_r.cycle_type(), memo);
            } else {
                // split: the two fragments of the first cycle anchor the two
                // sides; every other cycle picks a side
                let cs = hat_r.cycles();
                let side_a = cs.iter().position(|c| c.contains(&(g0 - 1))).unwrap();
                let side_b = cs.iter().position(|c| c.contains(&(k - 1))).unwrap();
                debug_assert_ne!(side_a, side_b);
                let free: Vec<usize> =
                    (0..cs.len()).filter(|&c| c != side_a && c != side_b).collect();
                for mask in 0..(1u32 << free.len()) {
                    let mut lens_a = vec![cs[side_a].len()];
                    let mut lens_b = vec![cs[side_b].len()];
                    for (j, &c) in free.iter().enumerate() {
                        if mask >> j & 1 == 0 {
                            lens_a.push(cs[c].len());
                        } else {
                            lens_b.push(cs[c].len());
                        }
                    }
                    total += zeta_square_connected(&Shape::new(lens_a), memo)
                        * zeta_square_connected(&Shape::new(lens_b), memo);
                }
            }
        }
        total
    };
    memo.insert(shape.clone(), value.clone());
    value
}

/// Connected-value table of `zeta^{*p}` through `max_size` by repeated
/// brute-force convolution. Exponential; the reference everything else is
/// checked against.
pub fn zeta_power_brute(p: usize, max_size: usize) -> MultFn {
    assert!(p >= 1);
    let z = MultFn::zeta(max_size);
    let mut acc = z.clone();
    for _ in 1..p {
        acc = crate::convolve(&acc, &z, max_size);
    }
    acc
}
