//! Moment/cumulant transforms at finite matrix dimension: tables indexed by
//! partitioned permutations, linked in one direction by a dimension-counted
//! sum and in the other by relative Weingarten cumulants, or by inverting
//! the first relation as a linear system.

use crate::linalg::solve_exact;
use crate::wg::{relative_cumulant, WgSuite};
use combinat::{Permutation, Scalar};
use multfn::MultFn;
use num_bigint::BigInt;
use num_traits::Zero;
use psalg::{enumerate_ps, PartitionedPermutation};
use std::collections::BTreeMap;

pub type PsTable = BTreeMap<PartitionedPermutation, Scalar>;

/// Evaluate a multiplicative function on every partitioned permutation of
/// `n` points.
pub fn table_from_multiplicative(f: &MultFn, n: usize) -> PsTable {
    enumerate_ps(n).into_iter().map(|x| {
        let v = f.eval(&x);
        (x, v)
    }).collect()
}

/// The dimension-counted sum
/// `phi(U, gamma) = sum kappa(V, pi) N^{#cycles(gamma pi^{-1})}`
/// over all `(V, pi)` whose coarsening joined with the orbits of
/// `gamma pi^{-1}` gives exactly `U`.
pub fn moments_from_cumulants_table(kappa: &PsTable, n: usize, big_n: i64) -> PsTable {
    let all = enumerate_ps(n);
    let mut out = PsTable::new();
    for target in &all {
        let gamma = target.p();
        let mut acc = Scalar::zero();
        for (x, kv) in kappa {
            if kv.is_zero() {
                continue;
            }
            let rest = gamma.compose(&x.p().inverse());
            if x.v().join(&rest.orbits()) == *target.v() {
                acc += kv * power(big_n, rest.num_cycles());
            }
        }
        out.insert(target.clone(), acc);
    }
    out
}

/// Invert `moments_from_cumulants_table` directly:
/// `kappa(V, pi) = sum_{W <= V} phi(W, sigma) C_{orbits(pi) v W, V}(sigma pi^{-1})`.
pub fn cumulants_from_moments_direct(phi: &PsTable, n: usize, suite: &WgSuite) -> PsTable {
    assert!(suite.max_n() >= n);
    let all = enumerate_ps(n);
    let mut out = PsTable::new();
    for target in &all {
        let (v, pi) = (target.v(), target.p());
        let mut acc = Scalar::zero();
        for (x, pv) in phi {
            if pv.is_zero() || !x.v().leq(v) {
                continue;
            }
            let rel = x.p().compose(&pi.inverse());
            let lower = pi.orbits().join(x.v());
            acc += pv * relative_cumulant(suite, &lower, v, &rel);
        }
        out.insert(target.clone(), acc);
    }
    out
}

/// Invert `moments_from_cumulants_table` as an exact linear system over all
/// partitioned permutations of `n` points.
pub fn cumulants_from_moments_solve(phi: &PsTable, n: usize, big_n: i64) -> PsTable {
    let all = enumerate_ps(n);
    let k = all.len();
    let index: BTreeMap<&PartitionedPermutation, usize> =
        all.iter().zip(0..).collect();
    let mut a = vec![vec![Scalar::zero(); k]; k];
    let mut b = vec![Scalar::zero(); k];
    for (row, target) in all.iter().enumerate() {
        let gamma = target.p();
        for x in &all {
            let rest = gamma.compose(&x.p().inverse());
            if x.v().join(&rest.orbits()) == *target.v() {
                a[row][index[x]] += power(big_n, rest.num_cycles());
            }
        }
        b[row] = phi.get(target).cloned().unwrap_or_else(Scalar::zero);
    }
    let sol = solve_exact(a, b).expect("dimension-counted system is invertible");
    all.into_iter().zip(sol).collect()
}

fn power(base: i64, exp: usize) -> Scalar {
    Scalar::from_integer(BigInt::from(base).pow(exp as u32))
}

/// Convenience: the cumulant value at the fully joined diagram over a
/// permutation, the entries most often quoted.
pub fn connected_entry(table: &PsTable, pi: &Permutation) -> Scalar {
    let key = PartitionedPermutation::connected(pi.clone());
    table.get(&key).cloned().unwrap_or_else(Scalar::zero)
}
