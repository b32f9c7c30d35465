use combinat::shape::Shape;
use combinat::{InputError, Permutation, SetPartition};
use std::fmt;

/// A set partition paired with a permutation whose orbits it coarsens.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionedPermutation {
    v: SetPartition,
    p: Permutation,
}

/// Result of the partial product: a genuine element or the absorbing `Zero`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Product {
    Zero,
    Pp(PartitionedPermutation),
}

impl Product {
    pub fn into_option(self) -> Option<PartitionedPermutation> {
        match self {
            Product::Zero => None,
            Product::Pp(x) => Some(x),
        }
    }
}

impl PartitionedPermutation {
    pub fn new(v: SetPartition, p: Permutation) -> Result<Self, InputError> {
        if v.n() != p.n() {
            return Err(InputError::Invalid {
                what: "partitioned permutation",
                reason: format!("partition on {} points, permutation on {}", v.n(), p.n()),
            });
        }
        if !v.is_invariant_under(&p) {
            return Err(InputError::Invalid {
                what: "partitioned permutation",
                reason: format!("{v} does not coarsen the orbits of {p}"),
            });
        }
        Ok(PartitionedPermutation { v, p })
    }

    /// The disc `(orbits(p), p)`, the minimal pair over `p`.
    pub fn disc(p: Permutation) -> Self {
        PartitionedPermutation { v: p.orbits(), p }
    }

    /// The unit `(0_e, e)` on `n` points.
    pub fn unit(n: usize) -> Self {
        PartitionedPermutation::disc(Permutation::identity(n))
    }

    /// `(1_n, p)`: everything in one block.
    pub fn connected(p: Permutation) -> Self {
        let v = SetPartition::full(p.n());
        PartitionedPermutation { v, p }
    }

    pub fn v(&self) -> &SetPartition {
        &self.v
    }

    pub fn p(&self) -> &Permutation {
        &self.p
    }

    pub fn n(&self) -> usize {
        self.p.n()
    }

    /// `|(V, p)| = 2|V| - |p|`. Nonnegative because V coarsens the orbits.
    pub fn length(&self) -> usize {
        2 * self.v.length() - self.p.length()
    }

    pub fn is_disc(&self) -> bool {
        self.v.length() == self.p.length()
    }

    /// One coarsening step above a disc: `|V| = |p| + 1`.
    pub fn is_bridge(&self) -> bool {
        self.v.length() == self.p.length() + 1
    }

    /// The multiset of per-block shapes: each block of `V` contributes the
    /// cycle lengths of `p` inside it. Two partitioned permutations are
    /// related by a relabeling of points exactly when their diagrams agree.
    pub fn diagram(&self) -> Diagram {
        let mut per_block: Vec<Vec<usize>> = vec![Vec::new(); self.v.num_blocks()];
        for cyc in self.p.cycles() {
            per_block[self.v.block_of(cyc[0])].push(cyc.len());
        }
        Diagram::new(per_block.into_iter().map(Shape::new).collect())
    }

    /// Geodesic product: `(V join W, ps)` when the lengths add, else `Zero`.
    pub fn multiply(&self, other: &PartitionedPermutation) -> Product {
        assert_eq!(self.n(), other.n(), "size mismatch");
        let joined = self.v.join(&other.v);
        let prod = self.p.compose(&other.p);
        let result = PartitionedPermutation { v: joined, p: prod };
        debug_assert!(result.v.is_invariant_under(&result.p));
        if result.length() == self.length() + other.length() {
            Product::Pp(result)
        } else {
            Product::Zero
        }
    }

    /// The four equivalent conditions characterizing a non-Zero product of
    /// discs completed by coarsenings, in terms of partition lengths. All
    /// four hold iff `multiply` does not return `Zero`.
    pub fn geodesic_conditions(&self, other: &PartitionedPermutation) -> [bool; 4] {
        let (p, s) = (&self.p, &other.p);
        let (v, w) = (&self.v, &other.v);
        let po = p.orbits();
        let so = s.orbits();
        let p_join_s = po.join(&so).length();
        let v_join_s = v.join(&so).length();
        let p_join_w = po.join(w).length();
        let v_join_w = v.join(w).length();
        let ps = p.compose(s).length();
        [
            p.length() + s.length() + ps == 2 * p_join_s,
            v.length() + p_join_s == p.length() + v_join_s,
            w.length() + p_join_s == s.length() + p_join_w,
            v_join_s + p_join_w == v_join_w + p_join_s,
        ]
    }
}

impl fmt::Display for PartitionedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.v, self.p)
    }
}

impl fmt::Debug for PartitionedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pp[{self}]")
    }
}

/// Multiset of block shapes, the relabeling invariant of a partitioned
/// permutation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram(Vec<Shape>);

impl Diagram {
    pub fn new(mut shapes: Vec<Shape>) -> Self {
        shapes.sort();
        Diagram(shapes)
    }

    pub fn blocks(&self) -> &[Shape] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Shape::size).sum()
    }

    pub fn is_connected(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_and_classes() {
        let p = Permutation::from_profile(&[2, 1]);
        let disc = PartitionedPermutation::disc(p.clone());
        assert_eq!(disc.length(), 1);
        assert!(disc.is_disc());
        let conn = PartitionedPermutation::connected(p);
        assert_eq!(conn.length(), 2 * 2 - 1);
        assert!(conn.is_bridge());
        assert_eq!(format!("{}", conn.diagram()), "[(2,1)]");
    }

    #[test]
    fn new_rejects_non_invariant_partition() {
        let p = Permutation::from_profile(&[2, 2]);
        let v = SetPartition::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        assert!(PartitionedPermutation::new(v, p).is_err());
    }

    #[test]
    fn unit_is_neutral() {
        let p = Permutation::from_profile(&[3, 1]);
        let x = PartitionedPermutation::connected(p);
        let e = PartitionedPermutation::unit(4);
        assert_eq!(e.multiply(&x), Product::Pp(x.clone()));
        assert_eq!(x.multiply(&e), Product::Pp(x));
    }

    #[test]
    fn transpositions_multiply_geodesically_into_a_cycle() {
        let a = PartitionedPermutation::disc(Permutation::transposition(3, 0, 1));
        let b = PartitionedPermutation::disc(Permutation::transposition(3, 1, 2));
        match a.multiply(&b) {
            Product::Pp(c) => {
                assert_eq!(c.length(), 2);
                assert!(c.is_disc());
            }
            Product::Zero => panic!("expected geodesic product"),
        }
        // multiplying by b again shortens the permutation but the partition
        // part absorbs the two steps: the result is the bridge (1_3, (0 1))
        // of length 3 = 2 + 1, still geodesic
        let c = a.multiply(&b).into_option().unwrap();
        let cb = c.multiply(&b).into_option().expect("bridge, not Zero");
        assert!(cb.is_bridge());
        // a genuine Zero: from the top element there is nowhere to go
        let top = PartitionedPermutation::connected(Permutation::identity(2));
        let t = PartitionedPermutation::disc(Permutation::transposition(2, 0, 1));
        assert_eq!(top.multiply(&t), Product::Zero);
    }
}
