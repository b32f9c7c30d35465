//! Shapes (integer partitions, parts sorted decreasingly) and profiles
//! (ordered compositions). A shape records the cycle lengths collected in one
//! block of a partitioned permutation; a profile fixes a concrete base cycle
//! arrangement such as `(0 1 2)(3 4)`.

use crate::perm::Permutation;
use crate::InputError;
use std::fmt;
use std::str::FromStr;

/// Integer partition: nonincreasing positive parts. `Shape(vec![])` is the
/// empty shape of size 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "shape parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Shape(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// All shapes of the given size (partitions of n), largest part first.
    pub fn all_of_size(n: usize) -> Vec<Shape> {
        fn rec(remaining: usize, maxpart: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if remaining == 0 {
                out.push(Shape(cur.clone()));
                return;
            }
            for p in (1..=maxpart.min(remaining)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All shapes of every size `1..=n`.
    pub fn all_up_to(n: usize) -> Vec<Shape> {
        (1..=n).flat_map(Shape::all_of_size).collect()
    }

    /// Number of permutations in `S_size` with this cycle type:
    /// `n! / (prod parts * prod multiplicity!)`.
    pub fn class_size(&self) -> num_bigint::BigInt {
        let n = self.size();
        let mut denom = num_bigint::BigInt::from(1);
        let mut run = 1usize;
        for (i, &p) in self.0.iter().enumerate() {
            denom *= num_bigint::BigInt::from(p);
            if i > 0 && self.0[i - 1] == p {
                run += 1;
            } else {
                run = 1;
            }
            denom *= num_bigint::BigInt::from(run);
        }
        crate::count::factorial(n) / denom
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Shape {
    type Err = InputError;

    /// Accepts `3,1,1` or `(3,1,1)`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let p: usize = tok.parse().map_err(|_| InputError::Invalid {
                what: "shape",
                reason: format!("bad part {tok:?}"),
            })?;
            if p == 0 {
                return Err(InputError::Invalid {
                    what: "shape",
                    reason: "zero part".into(),
                });
            }
            parts.push(p);
        }
        Ok(Shape::new(parts))
    }
}

/// Ordered cycle-length profile of a base permutation. Unlike a `Shape` the
/// order of entries is preserved, so `(1,2)` and `(2,1)` name different base
/// points (which carry the same shape).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile(Vec<usize>);

impl Profile {
    pub fn new(lens: Vec<usize>) -> Self {
        assert!(lens.iter().all(|&p| p > 0), "profile entries must be positive");
        Profile(lens)
    }

    pub fn lens(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_cycles(&self) -> usize {
        self.0.len()
    }

    /// The base permutation with consecutive cycles of these lengths.
    pub fn gamma(&self) -> Permutation {
        Permutation::from_profile(&self.0)
    }

    pub fn shape(&self) -> Shape {
        Shape::new(self.0.clone())
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Profile[{self}]")
    }
}

impl FromStr for Profile {
    type Err = InputError;

    /// Accepts `2x3x1`, `2,3,1` or `(2,3,1)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut lens = Vec::new();
        for tok in inner.split(|c| c == ',' || c == 'x') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let p: usize = tok.parse().map_err(|_| InputError::Invalid {
                what: "profile",
                reason: format!("bad cycle length {tok:?}"),
            })?;
            if p == 0 {
                return Err(InputError::Invalid {
                    what: "profile",
                    reason: "zero cycle length".into(),
                });
            }
            lens.push(p);
        }
        if lens.is_empty() {
            return Err(InputError::Invalid { what: "profile", reason: "empty".into() });
        }
        Ok(Profile(lens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        // p(n) for n = 1..8
        let want = [1, 2, 3, 5, 7, 11, 15, 22];
        for (n, w) in (1..=8).zip(want) {
            assert_eq!(Shape::all_of_size(n).len(), w);
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=6 {
            let total: num_bigint::BigInt =
                Shape::all_of_size(n).iter().map(|s| s.class_size()).sum();
            assert_eq!(total, crate::count::factorial(n));
        }
    }

    #[test]
    fn shape_parse_and_display() {
        let s: Shape = "(3,1,2)".parse().unwrap();
        assert_eq!(s, Shape::new(vec![1, 3, 2]));
        assert_eq!(format!("{s}"), "(3,2,1)");
        assert!("(0,1)".parse::<Shape>().is_err());
    }

    #[test]
    fn profile_keeps_order() {
        let p: Profile = "1x2".parse().unwrap();
        assert_eq!(p.lens(), &[1, 2]);
        assert_eq!(p.gamma().images(), &[0, 2, 1]);
        assert_eq!(p.shape(), Shape::new(vec![2, 1]));
    }
}
