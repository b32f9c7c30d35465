//! Partitioned permutations and their geodesic product.
//!
//! A partitioned permutation is a pair `(V, p)` of a set partition and a
//! permutation whose orbits refine `V`. Its length is
//! `|(V, p)| = 2|V| - |p|`; pairs with `V = orbits(p)` are called discs and
//! have length `|p|`. The product
//! `(V, p) * (W, s) = (V join W, ps)` is kept only when lengths add up, and
//! is `Zero` otherwise. This partial product is associative, which is what
//! makes the convolution algebra over these objects work.

mod pp;

pub use pp::{Diagram, PartitionedPermutation, Product};

use combinat::{Permutation, SetPartition};

/// All partitioned permutations on `0..n`. Grows like n! times the typical
/// number of orbit coarsenings; fine through n = 7.
pub fn enumerate_ps(n: usize) -> Vec<PartitionedPermutation> {
    let mut out = Vec::new();
    for p in Permutation::all(n) {
        for v in SetPartition::all_invariant_under(&p) {
            out.push(PartitionedPermutation::new(v, p.clone()).expect("v is invariant"));
        }
    }
    out
}

/// All ordered factorizations `(V, p) * (W, s) = target`. The permutation
/// parts are forced (`s = p^{-1} gamma`), so the scan is over `p` and the
/// invariant coarsenings on both sides. Lengths must add up, which bounds
/// `|p| + |s|` by the target length and fixes the total coarsening excess
/// `(|V| - |p|) + (|W| - |s|)`; both cuts are applied before multiplying.
pub fn factorizations(
    target: &PartitionedPermutation,
) -> Vec<(PartitionedPermutation, PartitionedPermutation)> {
    let n = target.n();
    let gamma = target.p();
    let tlen = target.length();
    let mut out = Vec::new();
    for p in Permutation::all(n) {
        let s = p.inverse().compose(gamma);
        let base = p.length() + s.length();
        if base > tlen {
            continue;
        }
        let budget = (tlen - base) / 2;
        let halves: Vec<Vec<(usize, PartitionedPermutation)>> = [&p, &s]
            .into_iter()
            .map(|q| {
                SetPartition::all_invariant_under(q)
                    .into_iter()
                    .filter_map(|v| {
                        let x = PartitionedPermutation::new(v, q.clone()).expect("invariant");
                        let excess = (x.length() - q.length()) / 2;
                        (excess <= budget).then_some((excess, x))
                    })
                    .collect()
            })
            .collect();
        for (ea, a) in &halves[0] {
            for (eb, b) in &halves[1] {
                if ea + eb != budget {
                    continue;
                }
                if let Product::Pp(c) = a.multiply(b) {
                    if &c == target {
                        out.push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    out
}

/// The solutions `(V, p)` of `(V, p) * (0_{p^{-1}gamma}, p^{-1}gamma) =
/// target`: the partitioned permutations lying on a geodesic to the target
/// when completed by a disc. For a connected target on one base cycle these
/// are exactly the discs of noncrossing permutations; on two base cycles the
/// annular noncrossing discs together with the one-bridge coarsenings of
/// disconnected noncrossing pairs.
pub fn geodesic_prefixes(target: &PartitionedPermutation) -> Vec<PartitionedPermutation> {
    let n = target.n();
    let gamma = target.p();
    let mut out = Vec::new();
    for p in Permutation::all(n) {
        let s = p.inverse().compose(gamma);
        let disc = PartitionedPermutation::disc(s);
        for v in SetPartition::all_invariant_under(&p) {
            let a = PartitionedPermutation::new(v, p.clone()).expect("invariant");
            if let Product::Pp(c) = a.multiply(&disc) {
                if &c == target {
                    out.push(a);
                }
            }
        }
    }
    out
}
