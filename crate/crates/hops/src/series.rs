//! Exponential generating series built from cumulant data: the large-size
//! limit of a log-transformed matrix integral, its character-sum form for
//! a deterministic partner, and the rank-two expansion in two variables.

use combinat::{int, Permutation, Scalar, SetPartition, Shape};
use num_traits::Zero;
use powser::{Series1, Series2};
use psalg::{factorizations, PartitionedPermutation};

use crate::dist::{CumulantSet, Distribution};

/// Coefficientwise pairing of one side's cumulants with the other side's
/// moments over factored identity diagrams. The coefficient of `z^n` is
/// the full two-sided sum divided by `n!`.
pub fn iz_series(ka: &CumulantSet, phib: &Distribution, up_to: usize) -> Series1 {
    assert!(
        ka.order() >= up_to && phib.order() >= up_to,
        "tables stop short of the requested degree"
    );
    let mut out = Series1::zero(up_to);
    for n in 1..=up_to {
        let target = PartitionedPermutation::new(
            SetPartition::full(n),
            Permutation::identity(n),
        )
        .expect("the full partition is invariant");
        let mut acc = Scalar::zero();
        for (x, y) in factorizations(&target) {
            let k = ka.cumulants().eval(&x);
            if k.is_zero() {
                continue;
            }
            acc += k * phib.moments().eval(&y);
        }
        out.set(n, acc / factorial(n));
    }
    out
}

/// The same series when the partner is deterministic with power moments
/// `x[k-1]`: a sum over cycle types weighted by conjugacy class sizes,
/// using only the cumulant table.
pub fn iz_r(ka: &CumulantSet, x: &[Scalar], up_to: usize) -> Series1 {
    assert!(ka.order() >= up_to, "cumulant table stops short");
    assert!(x.len() >= up_to, "need a power moment for every part size");
    let mut out = Series1::zero(up_to);
    for n in 1..=up_to {
        let mut acc = Scalar::zero();
        for shape in Shape::all_of_size(n) {
            let mut term = Scalar::from(shape.class_size())
                * ka.cumulants()
                    .get(&shape)
                    .unwrap_or_else(|| panic!("cumulant table has no value at {shape}"))
                    .clone();
            for &part in shape.parts() {
                if term.is_zero() {
                    break;
                }
                term *= x[part - 1].clone();
            }
            acc += term;
        }
        out.set(n, acc / factorial(n));
    }
    out
}

/// First and second order of the two-variable expansion of a rank-two
/// integral: the first series collects `kappa_n / n` on the pure powers
/// of each variable, the second collects `kappa_{m,n} / (mn)` spread over
/// `(x^m + y^m)(x^n + y^n)` for every ordered pair with `m + n` within
/// the cap.
pub fn rank2(ka: &CumulantSet, cap: usize) -> (Series2, Series2) {
    assert!(ka.order() >= cap, "cumulant table stops short");
    let mut first = Series2::zero(cap);
    let mut second = Series2::zero(cap);
    let bump = |s: &mut Series2, i: usize, j: usize, v: &Scalar| {
        let have = s.coeff(i, j);
        s.set(i, j, have + v.clone());
    };
    for n in 1..=cap {
        let k = ka
            .cumulants()
            .get(&Shape::new(vec![n]))
            .expect("single rows are within the order")
            .clone()
            / int(n as i64);
        bump(&mut first, n, 0, &k);
        bump(&mut first, 0, n, &k);
    }
    for m in 1..=cap {
        for n in 1..=(cap - m) {
            let k = ka
                .cumulants()
                .get(&Shape::new(vec![m, n]))
                .unwrap_or_else(|| panic!("cumulant table has no two row value at ({m},{n})"))
                .clone()
                / int((m * n) as i64);
            bump(&mut second, m + n, 0, &k);
            bump(&mut second, 0, m + n, &k);
            bump(&mut second, m, n, &k);
            bump(&mut second, n, m, &k);
        }
    }
    (first, second)
}

fn factorial(n: usize) -> Scalar {
    Scalar::from(combinat::factorial(n))
}
