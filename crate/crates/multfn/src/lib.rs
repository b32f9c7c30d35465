//! Multiplicative functions on partitioned permutations and their
//! convolution algebra.
//!
//! A multiplicative function is determined by its values on connected
//! diagrams, i.e. by a table indexed by shapes: the value at `(V, p)` is the
//! product over blocks of `V` of the table entry for the cycle lengths
//! collected in that block. Convolution is
//! `(f * g)(U, gamma) = sum f(V, p) g(W, s)` over the ordered factorizations
//! `(V, p) * (W, s) = (U, gamma)` under the geodesic product, and
//! multiplicative functions are closed under it.

pub mod counting;
pub mod moebius;
pub mod second_order;

use combinat::shape::Shape;
use combinat::{Permutation, Scalar, SetPartition};
use num_traits::{One, Zero};
use psalg::{Diagram, PartitionedPermutation, Product};
use std::collections::BTreeMap;

/// A multiplicative function, stored by its connected values.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultFn {
    vals: BTreeMap<Shape, Scalar>,
}

impl MultFn {
    pub fn new() -> Self {
        MultFn { vals: BTreeMap::new() }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Shape, Scalar)>) -> Self {
        MultFn { vals: entries.into_iter().collect() }
    }

    pub fn insert(&mut self, shape: Shape, value: Scalar) {
        self.vals.insert(shape, value);
    }

    pub fn get(&self, shape: &Shape) -> Option<&Scalar> {
        self.vals.get(shape)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Shape, &Scalar)> {
        self.vals.iter()
    }

    /// Shapes of total size `<= n` missing from the table.
    pub fn missing_shapes(&self, n: usize) -> Vec<Shape> {
        Shape::all_up_to(n).into_iter().filter(|s| !self.vals.contains_key(s)).collect()
    }

    /// Value on a diagram: the product of connected values.
    /// Panics when a needed shape is absent; use `missing_shapes` to
    /// validate beforehand.
    pub fn eval_diagram(&self, d: &Diagram) -> Scalar {
        d.blocks().iter().fold(Scalar::one(), |acc, s| {
            acc * self
                .vals
                .get(s)
                .unwrap_or_else(|| panic!("multiplicative table has no entry for shape {s}"))
        })
    }

    pub fn eval(&self, x: &PartitionedPermutation) -> Scalar {
        self.eval_diagram(&x.diagram())
    }

    /// The identity of convolution: 1 on `(0_e, e)`, i.e. table value 1 on
    /// the one-box shape and 0 elsewhere.
    pub fn delta(max_size: usize) -> Self {
        let mut f = MultFn::new();
        for s in Shape::all_up_to(max_size) {
            let v = if s.parts() == [1] { Scalar::one() } else { Scalar::zero() };
            f.insert(s, v);
        }
        f
    }

    /// Indicator of discs: 1 when each block holds a single cycle.
    pub fn zeta(max_size: usize) -> Self {
        let mut f = MultFn::new();
        for s in Shape::all_up_to(max_size) {
            let v = if s.rows() == 1 { Scalar::one() } else { Scalar::zero() };
            f.insert(s, v);
        }
        f
    }
}

/// `(f * g)(target)`: the full factorization scan. The permutation part of a
/// right factor is forced, so the loop runs over `p` and the invariant
/// coarsenings on both sides. Exact and exhaustive; meant for `n <= 8`.
pub fn convolve_at(f: &MultFn, g: &MultFn, target: &PartitionedPermutation) -> Scalar {
    let n = target.n();
    let gamma = target.p();
    let mut acc = Scalar::zero();
    for p in Permutation::all(n) {
        let s = p.inverse().compose(gamma);
        let vs = SetPartition::all_invariant_under(&p);
        let ws = SetPartition::all_invariant_under(&s);
        for v in &vs {
            let a = PartitionedPermutation::new(v.clone(), p.clone()).expect("invariant");
            let fa = f.eval(&a);
            if fa.is_zero() {
                continue;
            }
            for w in &ws {
                let b = PartitionedPermutation::new(w.clone(), s.clone()).expect("invariant");
                if let Product::Pp(c) = a.multiply(&b) {
                    if &c == target {
                        acc += fa.clone() * g.eval(&b);
                    }
                }
            }
        }
    }
    acc
}

/// Convolution as a table of connected values, through diagrams of total
/// size `max_size`. Convolution preserves multiplicativity, so connected
/// values determine everything.
pub fn convolve(f: &MultFn, g: &MultFn, max_size: usize) -> MultFn {
    let mut out = MultFn::new();
    for shape in Shape::all_up_to(max_size) {
        let gamma = Permutation::from_profile(shape.parts());
        let target = PartitionedPermutation::connected(gamma);
        out.insert(shape, convolve_at(f, g, &target));
    }
    out
}

/// First-order moments from a cumulant table: `(f * zeta)` at the connected
/// one-cycle diagram, i.e. the sum of `f` over noncrossing discs.
pub fn moments_first_order(f: &MultFn, n: usize) -> Scalar {
    let target = PartitionedPermutation::connected(Permutation::from_profile(&[n]));
    convolve_at(f, &MultFn::zeta(n), &target)
}

/// Second-order moments from a cumulant table: `(f * zeta)` at the connected
/// two-cycle diagram over `gamma_{m,n}`.
pub fn moments_second_order(f: &MultFn, m: usize, n: usize) -> Scalar {
    let target =
        PartitionedPermutation::connected(Permutation::from_profile(&[m, n]));
    convolve_at(f, &MultFn::zeta(m + n), &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use combinat::ratio;

    pub(crate) fn f_table() -> MultFn {
        MultFn::from_entries([
            ("(1)".parse().unwrap(), ratio(1, 2)),
            ("(2)".parse().unwrap(), ratio(2, 1)),
            ("(1,1)".parse().unwrap(), ratio(3, 1)),
            ("(3)".parse().unwrap(), ratio(5, 1)),
            ("(2,1)".parse().unwrap(), ratio(7, 1)),
            ("(1,1,1)".parse().unwrap(), ratio(11, 1)),
            ("(4)".parse().unwrap(), ratio(13, 1)),
            ("(2,2)".parse().unwrap(), ratio(-3, 1)),
            ("(3,1)".parse().unwrap(), ratio(17, 1)),
            ("(2,1,1)".parse().unwrap(), ratio(19, 1)),
            ("(1,1,1,1)".parse().unwrap(), ratio(23, 1)),
        ])
    }

    pub(crate) fn g_table() -> MultFn {
        MultFn::from_entries([
            ("(1)".parse().unwrap(), ratio(3, 1)),
            ("(2)".parse().unwrap(), ratio(-1, 3)),
            ("(1,1)".parse().unwrap(), ratio(4, 1)),
            ("(3)".parse().unwrap(), ratio(2, 7)),
            ("(2,1)".parse().unwrap(), ratio(-5, 1)),
            ("(1,1,1)".parse().unwrap(), ratio(6, 1)),
            ("(4)".parse().unwrap(), ratio(9, 1)),
            ("(2,2)".parse().unwrap(), ratio(10, 1)),
            ("(3,1)".parse().unwrap(), ratio(1, 5)),
            ("(2,1,1)".parse().unwrap(), ratio(12, 1)),
            ("(1,1,1,1)".parse().unwrap(), ratio(-2, 1)),
        ])
    }

    fn connected(profile: &[usize]) -> PartitionedPermutation {
        PartitionedPermutation::connected(Permutation::from_profile(profile))
    }

    #[test]
    fn convolution_spot_values() {
        let (f, g) = (f_table(), g_table());
        for (profile, want) in [
            (vec![1], ratio(3, 2)),
            (vec![2], ratio(215, 12)),
            (vec![3], ratio(3697, 28)),
            (vec![1, 1], ratio(82, 3)),
            (vec![2, 1], ratio(11197, 56)),
            (vec![1, 1, 1], ratio(10433, 28)),
        ] {
            let got = convolve_at(&f, &g, &connected(&profile));
            assert_eq!(got, want, "profile {profile:?}");
        }
    }

    #[test]
    fn convolution_is_multiplicative_on_disconnected_targets() {
        let (f, g) = (f_table(), g_table());
        let v = SetPartition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        let p = Permutation::from_profile(&[2, 1]);
        let target = PartitionedPermutation::new(v, p).unwrap();
        let got = convolve_at(&f, &g, &target);
        assert_eq!(got, ratio(215, 8));
        // equal to the product of the connected values (215/12) * (3/2)
        let table = convolve(&f, &g, 3);
        assert_eq!(table.eval(&target), got);
    }

    #[test]
    fn delta_is_the_unit() {
        let f = f_table();
        let d = MultFn::delta(4);
        for shape in Shape::all_up_to(4) {
            let target = connected(shape.parts());
            assert_eq!(convolve_at(&f, &d, &target), f.eval(&target), "{shape} right");
            assert_eq!(convolve_at(&d, &f, &target), f.eval(&target), "{shape} left");
        }
    }

    #[test]
    fn zeta_counts_noncrossing_objects() {
        let z = MultFn::zeta(6);
        // first order: Catalan; second order: the annular counts (only the
        // disc pairs survive, the coarsened factors evaluate to zero)
        assert_eq!(moments_first_order(&z, 4), combinat::int(14));
        assert_eq!(moments_second_order(&z, 2, 2), combinat::int(18));
    }
}
