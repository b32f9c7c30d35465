//! Permutations of `{0, .., n-1}` with the cycle bookkeeping needed for
//! geodesic arguments: cycle decomposition, the length `|p| = n - #cycles`,
//! and the orbit partition.

use crate::shape::Shape;
use crate::InputError;
use crate::SetPartition;
use std::fmt;

/// A permutation stored as its image table.
///
/// Composition convention: `a.compose(&b)` is the map `i -> a(b(i))`, i.e.
/// `b` acts first. All products written multiplicatively elsewhere in the
/// workspace (`pi * sigma`, `pi^{-1} gamma`, ...) follow the same rule.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// Builds from an image table, validating bijectivity.
    pub fn from_images(map: Vec<usize>) -> Result<Self, InputError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n {
                return Err(InputError::NotABijection {
                    n,
                    reason: format!("image {v} out of range"),
                });
            }
            if seen[v] {
                return Err(InputError::NotABijection {
                    n,
                    reason: format!("image {v} repeated"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    /// Builds from disjoint cycles over `0..n`; elements absent from every
    /// cycle are fixed points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, InputError> {
        let mut map: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                if x >= n {
                    return Err(InputError::Invalid {
                        what: "cycle",
                        reason: format!("element {x} out of range for n={n}"),
                    });
                }
                if used[x] {
                    return Err(InputError::Invalid {
                        what: "cycle",
                        reason: format!("element {x} appears twice"),
                    });
                }
                used[x] = true;
                map[x] = cyc[(k + 1) % cyc.len()];
            }
        }
        Ok(Permutation { map })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a, b);
        Permutation { map }
    }

    /// The canonical cycle `gamma` with consecutive cycles of the given
    /// lengths: profile `[3, 2]` gives `(0 1 2)(3 4)`.
    pub fn from_profile(profile: &[usize]) -> Self {
        let n: usize = profile.iter().sum();
        let mut map: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in profile {
            for k in 0..len {
                map[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation { map }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    /// Block sum: `self` on `0..m`, `other` shifted onto `m..m+k`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let m = self.n();
        let map = self
            .map
            .iter()
            .copied()
            .chain(other.map.iter().map(|&v| v + m))
            .collect();
        Permutation { map }
    }

    /// `self` after `other`: the map `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "size mismatch");
        Permutation { map: other.map.iter().map(|&i| self.map[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Cycles listed with their minimum first, ordered by minimum element.
    /// Fixed points are included as singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.map[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.map[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle type as a shape (lengths sorted decreasingly).
    pub fn cycle_type(&self) -> Shape {
        Shape::new(self.cycles().iter().map(|c| c.len()).collect())
    }

    /// `|p| = n - #cycles`, the minimal number of transpositions producing `p`.
    pub fn length(&self) -> usize {
        self.n() - self.num_cycles()
    }

    /// The partition of `{0,..,n-1}` into orbits.
    pub fn orbits(&self) -> SetPartition {
        SetPartition::from_blocks(self.n(), &self.cycles())
            .expect("orbits always partition the ground set")
    }

    /// Restriction to the elements with `keep[i]` true, which must be an
    /// invariant subset; kept elements are relabeled in increasing order.
    pub fn restrict(&self, keep: &[bool]) -> Permutation {
        assert_eq!(keep.len(), self.n());
        let mut newidx = vec![usize::MAX; self.n()];
        let mut m = 0;
        for i in 0..self.n() {
            if keep[i] {
                newidx[i] = m;
                m += 1;
            }
        }
        let mut map = vec![0; m];
        for i in 0..self.n() {
            if keep[i] {
                let img = self.map[i];
                assert!(keep[img], "restriction set is not invariant");
                map[newidx[i]] = newidx[img];
            }
        }
        Permutation { map }
    }

    /// All `n!` permutations of `0..n`, in lexicographic image-table order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut map: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { map: map.clone() });
            // next_permutation on the image table
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| map[i] < map[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| map[j] > map[i]).unwrap();
            map.swap(i, j);
            map[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation, fixed points omitted; identity prints `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cyc in self.cycles() {
            if cyc.len() == 1 {
                continue;
            }
            write!(f, "(")?;
            for (k, x) in cyc.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let t01 = Permutation::transposition(3, 0, 1);
        let t02 = Permutation::transposition(3, 0, 2);
        let p = t01.compose(&t02);
        // (0 1)(0 2) sends 0 -> 2, 2 -> 1, 1 -> 0
        assert_eq!(p.images(), &[2, 0, 1]);
        assert_eq!(p.cycle_type(), Shape::new(vec![3]));
    }

    #[test]
    fn profile_builds_consecutive_cycles() {
        let g = Permutation::from_profile(&[3, 2]);
        assert_eq!(g.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(g.num_cycles(), 2);
        assert_eq!(g.length(), 3);
        assert_eq!(format!("{g}"), "(1 2 3)(4 5)");
    }

    #[test]
    fn inverse_and_identity() {
        let g = Permutation::from_profile(&[4]);
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
        assert_eq!(format!("{}", Permutation::identity(3)), "e");
    }

    #[test]
    fn all_permutations_has_factorial_size() {
        assert_eq!(Permutation::all(4).len(), 24);
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        // no duplicates
        let mut seen = std::collections::HashSet::new();
        for p in &all {
            assert!(seen.insert(p.clone()));
        }
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }
}
