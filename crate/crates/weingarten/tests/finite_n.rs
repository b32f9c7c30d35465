use combinat::{ratio, Scalar};
use num_traits::Zero;
use psalg::enumerate_ps;
use weingarten::{
    cumulants_from_moments_direct, cumulants_from_moments_solve, moments_from_cumulants_table,
    PsTable, WgSuite,
};

/// A table with no structure at all: distinct rationals on every diagram.
fn scattered_table(n: usize) -> PsTable {
    enumerate_ps(n)
        .into_iter()
        .zip(1i64..)
        .map(|(x, i)| (x, ratio(i * i - 7, 2 * i + 1)))
        .collect()
}

#[test]
fn transform_pair_is_the_identity_on_arbitrary_tables() {
    for n in 1..=4 {
        let phi = scattered_table(n);
        let kappa = cumulants_from_moments_solve(&phi, n, 7);
        let back = moments_from_cumulants_table(&kappa, n, 7);
        assert_eq!(phi, back, "n = {n}");
    }
}

#[test]
fn weingarten_inversion_agrees_with_the_linear_solve() {
    let suite = WgSuite::new(3, 7);
    for n in 1..=3 {
        let phi = scattered_table(n);
        let direct = cumulants_from_moments_direct(&phi, n, &suite);
        let solved = cumulants_from_moments_solve(&phi, n, 7);
        assert_eq!(direct, solved, "n = {n}");
    }
}

#[test]
fn dimension_power_on_discs_is_the_moment_table_of_the_unit() {
    // pushing the unit table forward gives N^{#cycles(gamma)} exactly on
    // discs, so inverting that must recover the unit
    let n = 3;
    let big_n = 7i64;
    let mut phi = PsTable::new();
    for x in enumerate_ps(n) {
        let v = if x.is_disc() {
            let c = x.p().num_cycles();
            Scalar::from_integer(num_bigint::BigInt::from(big_n).pow(c as u32))
        } else {
            Scalar::zero()
        };
        phi.insert(x, v);
    }
    let kappa = cumulants_from_moments_solve(&phi, n, big_n);
    for (x, v) in &kappa {
        if x.is_disc() && x.p().num_cycles() == n {
            assert_eq!(v, &ratio(1, 1), "unit diagram");
        } else {
            assert!(v.is_zero(), "expected zero at {x}");
        }
    }
}
