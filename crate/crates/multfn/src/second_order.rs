//! Convolution at a two-cycle connected target, organized by the geometry
//! of the factors instead of a blind factorization scan. The first factor
//! of a geodesic factorization of `(1_{m+n}, gamma_{m,n})` is either a disc
//! over an annular noncrossing permutation or a bridge over a pair of
//! circle-local noncrossing permutations with exactly one cross-circle
//! merge; dually for the second factor. Grouping the bridge sums by base
//! permutation gives a form built from two shadows of `f`:
//! `f~1(pi) = f(0, pi)` and `f~2(pi1, pi2) = sum over single cross merges`.

use crate::MultFn;
use combinat::noncrossing::nc_permutations;
use combinat::{Permutation, Scalar, SetPartition};
use num_traits::Zero;
use psalg::{geodesic_prefixes, PartitionedPermutation};

/// The geodesic prefixes of `(1_{m+n}, gamma_{m,n})`, split by kind: discs
/// carry the annular noncrossing permutations, bridges carry circle-local
/// pairs with one merged block spanning both circles.
pub struct AnnularFamilies {
    pub m: usize,
    pub n: usize,
    pub discs: Vec<Permutation>,
    pub bridges: Vec<PartitionedPermutation>,
}

pub fn annular_families(m: usize, n: usize) -> AnnularFamilies {
    assert!(m >= 1 && n >= 1);
    let target = PartitionedPermutation::connected(Permutation::from_profile(&[m, n]));
    let mut discs = Vec::new();
    let mut bridges = Vec::new();
    for x in geodesic_prefixes(&target) {
        if x.is_disc() {
            discs.push(x.p().clone());
        } else {
            debug_assert!(x.is_bridge());
            bridges.push(x);
        }
    }
    AnnularFamilies { m, n, discs, bridges }
}

/// `(f * g)(1_{m+n}, gamma_{m,n})` assembled family by family:
/// disc/disc pairs over annular permutations, then each bridge once as a
/// first factor and once as a second factor.
pub fn convolve_two_cycles(f: &MultFn, g: &MultFn, m: usize, n: usize) -> Scalar {
    let gamma = Permutation::from_profile(&[m, n]);
    let fam = annular_families(m, n);
    let mut acc = Scalar::zero();
    for pi in &fam.discs {
        acc += f.eval(&PartitionedPermutation::disc(pi.clone()))
            * g.eval(&PartitionedPermutation::disc(pi.inverse().compose(&gamma)));
    }
    for x in &fam.bridges {
        let pi = x.p();
        let left = PartitionedPermutation::disc(gamma.compose(&pi.inverse()));
        let right = PartitionedPermutation::disc(pi.inverse().compose(&gamma));
        acc += f.eval(&left) * g.eval(x) + f.eval(x) * g.eval(&right);
    }
    acc
}

/// All bridges over a circle-preserving permutation: one cycle from each
/// side of the cut at `m` merged into a single block, every other cycle its
/// own block.
pub fn cross_merges(pi: &Permutation, m: usize) -> Vec<PartitionedPermutation> {
    let n = pi.n();
    assert!(m <= n);
    let cycles = pi.cycles();
    debug_assert!(
        cycles.iter().all(|c| c.iter().all(|&x| x < m) || c.iter().all(|&x| x >= m)),
        "permutation must preserve the two circles"
    );
    let mut out = Vec::new();
    for (i, a) in cycles.iter().enumerate() {
        if a[0] >= m {
            continue;
        }
        for (j, b) in cycles.iter().enumerate() {
            if b[0] < m {
                continue;
            }
            let mut labels = vec![0usize; n];
            for (c, cyc) in cycles.iter().enumerate() {
                let lab = if c == j { i } else { c };
                for &x in cyc {
                    labels[x] = lab;
                }
            }
            let v = SetPartition::from_labels(&labels);
            out.push(PartitionedPermutation::new(v, pi.clone()).unwrap());
        }
    }
    out
}

/// The bridge shadow `f~2`: `f` summed over the single-merge coarsenings of
/// a circle-preserving permutation.
pub fn tilde_two(f: &MultFn, pi: &Permutation, m: usize) -> Scalar {
    cross_merges(pi, m).iter().map(|x| f.eval(x)).sum()
}

/// The two-cycle convolution rebuilt from the shadows alone: annular
/// disc/disc pairs plus, for every pair of circle-local noncrossing
/// permutations, the two ways of placing the merge.
pub fn convolve_two_cycles_shadow(f: &MultFn, g: &MultFn, m: usize, n: usize) -> Scalar {
    let gamma = Permutation::from_profile(&[m, n]);
    let fam = annular_families(m, n);
    let mut acc = Scalar::zero();
    for pi in &fam.discs {
        acc += f.eval(&PartitionedPermutation::disc(pi.clone()))
            * g.eval(&PartitionedPermutation::disc(pi.inverse().compose(&gamma)));
    }
    for p1 in nc_permutations(m) {
        for p2 in nc_permutations(n) {
            let pi = p1.direct_sum(&p2);
            let rest = pi.inverse().compose(&gamma);
            acc += tilde_two(f, &pi, m) * g.eval(&PartitionedPermutation::disc(rest.clone()))
                + f.eval(&PartitionedPermutation::disc(pi)) * tilde_two(g, &rest, m);
        }
    }
    acc
}
