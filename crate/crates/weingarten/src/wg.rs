//! The unitary Weingarten function as an exact class function, its
//! multiplicative extension to invariant partitions, relative cumulants,
//! and the moment formula for Haar monomials.

use crate::linalg::solve_exact;
use combinat::shape::Shape;
use combinat::{Permutation, Scalar, SetPartition};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Weingarten values for a single symmetric group order, as a table over
/// cycle types. Exact for dimension `big_n >= n`, where the Gram matrix of
/// permutation operators is invertible.
pub struct WgTable {
    n: usize,
    big_n: i64,
    vals: BTreeMap<Shape, Scalar>,
}

impl WgTable {
    /// Solve the class-reduced Gram system
    /// `sum_beta N^{#cycles(alpha beta^{-1})} wg(beta) = [alpha = e]`.
    pub fn new(n: usize, big_n: i64) -> Self {
        assert!(n >= 1);
        assert!(
            big_n >= n as i64,
            "Gram matrix is singular below dimension {n}"
        );
        let classes = Shape::all_of_size(n);
        let k = classes.len();
        let perms = Permutation::all(n);
        let mut a = vec![vec![Scalar::zero(); k]; k];
        let mut b = vec![Scalar::zero(); k];
        let class_index: BTreeMap<Shape, usize> =
            classes.iter().cloned().zip(0..).collect();
        for (s, rep_shape) in classes.iter().enumerate() {
            let rep = Permutation::from_profile(rep_shape.parts());
            for beta in &perms {
                let t = class_index[&beta.cycle_type()];
                let cycles = rep.compose(&beta.inverse()).num_cycles();
                a[s][t] += power(big_n, cycles);
            }
            if rep_shape.parts().iter().all(|&p| p == 1) {
                b[s] = Scalar::one();
            }
        }
        let wg = solve_exact(a, b).expect("Gram system invertible for big_n >= n");
        WgTable { n, big_n, vals: classes.into_iter().zip(wg).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn big_n(&self) -> i64 {
        self.big_n
    }

    pub fn at_shape(&self, shape: &Shape) -> Scalar {
        assert_eq!(shape.size(), self.n);
        self.vals[shape].clone()
    }

    pub fn at_perm(&self, p: &Permutation) -> Scalar {
        self.at_shape(&p.cycle_type())
    }

    /// The Gram pairing `sum_beta N^{#cycles(alpha beta^{-1})} wg(beta)` for
    /// an arbitrary `alpha`; equals `[alpha = e]` by construction.
    pub fn gram_row_sum(&self, alpha: &Permutation) -> Scalar {
        assert_eq!(alpha.n(), self.n);
        let mut acc = Scalar::zero();
        for beta in Permutation::all(self.n) {
            let cycles = alpha.compose(&beta.inverse()).num_cycles();
            acc += power(self.big_n, cycles) * self.at_perm(&beta);
        }
        acc
    }
}

fn power(base: i64, exp: usize) -> Scalar {
    Scalar::from_integer(BigInt::from(base).pow(exp as u32))
}

/// Weingarten tables for every order up to a bound, so that values can be
/// taken blockwise on invariant partitions.
pub struct WgSuite {
    big_n: i64,
    tables: Vec<WgTable>,
}

impl WgSuite {
    pub fn new(max_n: usize, big_n: i64) -> Self {
        assert!(max_n >= 1);
        let tables = (1..=max_n).map(|n| WgTable::new(n, big_n)).collect();
        WgSuite { big_n, tables }
    }

    pub fn big_n(&self) -> i64 {
        self.big_n
    }

    pub fn max_n(&self) -> usize {
        self.tables.len()
    }

    pub fn table(&self, n: usize) -> &WgTable {
        &self.tables[n - 1]
    }

    pub fn at_perm(&self, p: &Permutation) -> Scalar {
        self.table(p.n()).at_perm(p)
    }

    /// Product of Weingarten values over the blocks of an invariant
    /// partition: the multiplicative extension `Wg(V, sigma)`.
    pub fn at_partitioned(&self, v: &SetPartition, sigma: &Permutation) -> Scalar {
        assert!(v.is_invariant_under(sigma), "partition must be invariant");
        let mut acc = Scalar::one();
        for block in v.blocks() {
            let mut keep = vec![false; sigma.n()];
            for &x in &block {
                keep[x] = true;
            }
            acc *= self.table(block.len()).at_perm(&sigma.restrict(&keep));
        }
        acc
    }
}

/// Relative Weingarten cumulant
/// `C_{V,W}(sigma) = sum_{V <= U <= W} mob(U, W) Wg(U, sigma)`.
/// Every partition above an invariant `V` is itself invariant, so the
/// blockwise values are all defined.
pub fn relative_cumulant(
    suite: &WgSuite,
    v: &SetPartition,
    w: &SetPartition,
    sigma: &Permutation,
) -> Scalar {
    assert!(v.leq(w), "need V <= W");
    let mut acc = Scalar::zero();
    for u in SetPartition::all_between(v, w) {
        let mob = Scalar::from_integer(u.moebius_to(w));
        acc += mob * suite.at_partitioned(&u, sigma);
    }
    acc
}

/// Mixed moment of Haar unitary entries:
/// `E[u_{i1 j1} .. u_{in jn} conj(u_{i'1 j'1}) .. conj(u_{i'n j'n})]`
/// as a double sum of Weingarten values over index-matching permutation
/// pairs.
pub fn haar_monomial_expectation(
    big_n: i64,
    rows: &[usize],
    cols: &[usize],
    rows_c: &[usize],
    cols_c: &[usize],
) -> Scalar {
    let n = rows.len();
    assert!(n >= 1 && cols.len() == n && rows_c.len() == n && cols_c.len() == n);
    let table = WgTable::new(n, big_n);
    let perms = Permutation::all(n);
    let mut acc = Scalar::zero();
    for alpha in perms.iter().filter(|a| (0..n).all(|k| rows[k] == rows_c[a.apply(k)])) {
        for beta in perms.iter().filter(|b| (0..n).all(|k| cols[k] == cols_c[b.apply(k)])) {
            acc += table.at_perm(&beta.compose(&alpha.inverse()));
        }
    }
    acc
}
