//! The Mobius function of the convolution algebra: the inverse of the disc
//! indicator `zeta`. Four routes to the same values, used to check one
//! another:
//!
//! * closed forms on one- and two-cycle connected diagrams (signed Catalan
//!   and signed annular counts),
//! * a peeling recursion that strips one transposition off the base
//!   permutation,
//! * an alternating sum over chains of non-unit discs (finite because chain
//!   lengths are bounded by the target length),
//! * a triangular solve of `mu * zeta = delta` along increasing size and
//!   row count.

use crate::MultFn;
use combinat::shape::Shape;
use combinat::{annular_catalan, catalan, int, Permutation, Scalar, SetPartition};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use psalg::{enumerate_ps, geodesic_prefixes, PartitionedPermutation, Product};
use std::collections::HashMap;

/// Signed Catalan / annular closed forms; `None` on three or more rows.
pub fn closed_form(shape: &Shape) -> Option<Scalar> {
    match *shape.parts() {
        [n] => {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            Some(int(sign) * Scalar::from_integer(catalan(n - 1)))
        }
        [m, n] => {
            let sign = if (m + n) % 2 == 0 { 1 } else { -1 };
            Some(int(sign) * Scalar::from_integer(annular_catalan(m, n)))
        }
        _ => None,
    }
}

/// Connected Mobius values by the peeling recursion, memoized across calls
/// through the supplied cache.
///
/// For a base permutation moving its first point, each factor `(1, k)`
/// either merges two base cycles (the coarsening must then be everything)
/// or splits the first cycle (the coarsening must then be a two-block
/// partition separating the pieces). Both moves shrink the pair (size,
/// rows) lexicographically. Diagrams fixing every point escape the
/// recursion; they are resolved by the vanishing of the full alternating
/// class sum: summing the connected Mobius values over all permutations of
/// `S_m` gives zero, which pins the all-singletons value from the others.
pub fn connected_recursive(shape: &Shape, memo: &mut HashMap<Shape, Scalar>) -> Scalar {
    if let Some(v) = memo.get(shape) {
        return v.clone();
    }
    let n = shape.size();
    let value = if n == 1 {
        Scalar::one()
    } else if shape.parts().iter().all(|&p| p == 1) {
        // mu((1^m)) = - sum over other cycle types t of |class(t)| mu(t)
        let mut acc = Scalar::zero();
        for t in Shape::all_of_size(n) {
            if t.parts().iter().all(|&p| p == 1) {
                continue;
            }
            acc += Scalar::from_integer(t.class_size()) * connected_recursive(&t, memo);
        }
        -acc
    } else {
        // parts are sorted decreasingly, so the first cycle has length >= 2
        // and gamma moves the point 0
        let gamma = Permutation::from_profile(shape.parts());
        let gamma_cycles = gamma.cycles();
        let cycle_of = |x: usize| gamma_cycles.iter().position(|c| c.contains(&x)).unwrap();
        let mut acc = Scalar::zero();
        for k in 1..n {
            let pi = Permutation::transposition(n, 0, k).compose(&gamma);
            if cycle_of(k) != 0 {
                // merge: the only admissible coarsening is everything
                acc += connected_recursive(&pi.cycle_type(), memo);
            } else {
                // split: two-block coarsenings separating 0 from k, each
                // remaining cycle of pi choosing a side
                let pi_cycles = pi.cycles();
                let b0 = pi_cycles.iter().position(|c| c.contains(&0)).unwrap();
                let bk = pi_cycles.iter().position(|c| c.contains(&k)).unwrap();
                debug_assert_ne!(b0, bk);
                let free: Vec<usize> =
                    (0..pi_cycles.len()).filter(|&c| c != b0 && c != bk).collect();
                for mask in 0..(1u32 << free.len()) {
                    let mut side0: Vec<usize> = pi_cycles[b0].clone();
                    let mut sidek: Vec<usize> = pi_cycles[bk].clone();
                    let mut lens0 = vec![pi_cycles[b0].len()];
                    let mut lensk = vec![pi_cycles[bk].len()];
                    for (j, &c) in free.iter().enumerate() {
                        if mask >> j & 1 == 0 {
                            side0.extend(&pi_cycles[c]);
                            lens0.push(pi_cycles[c].len());
                        } else {
                            sidek.extend(&pi_cycles[c]);
                            lensk.push(pi_cycles[c].len());
                        }
                    }
                    acc += connected_recursive(&Shape::new(lens0), memo)
                        * connected_recursive(&Shape::new(lensk), memo);
                }
            }
        }
        -acc
    };
    memo.insert(shape.clone(), value.clone());
    value
}

/// A complete Mobius table through `max_size` via the peeling recursion.
pub fn table_recursive(max_size: usize) -> MultFn {
    let mut memo = HashMap::new();
    let mut f = MultFn::new();
    for s in Shape::all_up_to(max_size) {
        let v = connected_recursive(&s, &mut memo);
        f.insert(s, v);
    }
    f
}

/// Mobius by the alternating disc-chain sum:
/// `mu(U, gamma) = delta + sum_j (-1)^j #{j-tuples of non-unit discs
/// multiplying to (U, gamma)}`.
/// Exponential in spirit; fine through size 5, usable at 6.
pub fn connected_geometric(shape: &Shape) -> Scalar {
    let n = shape.size();
    let target = PartitionedPermutation::connected(Permutation::from_profile(shape.parts()));
    let unit = PartitionedPermutation::unit(n);
    if target == unit {
        return Scalar::one();
    }
    let discs: Vec<PartitionedPermutation> = Permutation::all(n)
        .into_iter()
        .filter(|p| !p.is_identity())
        .map(PartitionedPermutation::disc)
        .collect();
    // counts[x] = number of chains of the current length with product x
    let mut counts: HashMap<PartitionedPermutation, BigInt> = HashMap::new();
    counts.insert(unit, BigInt::one());
    let mut acc = Scalar::zero();
    let mut sign = -1i64; // (-1)^j starting at j = 1
    for _ in 1..=target.length() {
        let mut next: HashMap<PartitionedPermutation, BigInt> = HashMap::new();
        for (x, c) in &counts {
            for d in &discs {
                if let Product::Pp(y) = x.multiply(d) {
                    if y.length() <= target.length() {
                        *next.entry(y).or_default() += c;
                    }
                }
            }
        }
        if let Some(c) = next.get(&target) {
            acc += int(sign) * Scalar::from_integer(c.clone());
        }
        sign = -sign;
        counts = next;
    }
    acc
}

/// Mobius table through `max_size` by triangular inversion of
/// `mu * zeta = delta`. Walking shapes by (size, rows), the only unknown
/// term in the geodesic-prefix sum at a connected target is the target
/// itself: coarser factors split into strictly smaller blocks and finer
/// permutation parts have strictly fewer cycles.
pub fn table_triangular(max_size: usize) -> MultFn {
    let mut shapes = Shape::all_up_to(max_size);
    shapes.sort_by_key(|s| (s.size(), s.rows()));
    let mut f = MultFn::new();
    for shape in shapes {
        let gamma = Permutation::from_profile(shape.parts());
        let target = PartitionedPermutation::connected(gamma);
        let delta = if shape.parts() == [1] { Scalar::one() } else { Scalar::zero() };
        let mut rest = Scalar::zero();
        for a in geodesic_prefixes(&target) {
            if a == target {
                continue;
            }
            rest += f.eval(&a);
        }
        f.insert(shape, delta - rest);
    }
    f
}

/// Exhaustive check that `f * zeta = delta = zeta * f` at a given diagram,
/// by the full factorization scan. Used by the acceptance gate with `f` the
/// Mobius table.
pub fn verifies_inverse_at(f: &MultFn, target: &PartitionedPermutation) -> bool {
    let z = MultFn::zeta(target.n());
    let want = if target.length() == 0 { Scalar::one() } else { Scalar::zero() };
    crate::convolve_at(f, &z, target) == want && crate::convolve_at(&z, f, target) == want
}

/// Every diagram on `n` points, one representative per relabeling class.
pub fn diagram_representatives(n: usize) -> Vec<PartitionedPermutation> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for x in enumerate_ps(n) {
        if seen.insert(x.diagram()) {
            out.push(x);
        }
    }
    out
}

/// A representative partitioned permutation with the given multiset of
/// block shapes: consecutive points, one block per shape.
pub fn representative(blocks: &[Shape]) -> PartitionedPermutation {
    let mut profile = Vec::new();
    let mut block_sets = Vec::new();
    let mut start = 0usize;
    for s in blocks {
        profile.extend_from_slice(s.parts());
        block_sets.push((start..start + s.size()).collect::<Vec<usize>>());
        start += s.size();
    }
    let p = Permutation::from_profile(&profile);
    let v = SetPartition::from_blocks(start, &block_sets).unwrap();
    PartitionedPermutation::new(v, p).unwrap()
}
