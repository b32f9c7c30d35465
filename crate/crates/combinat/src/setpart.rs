//! Set partitions of `{0,..,n-1}` with the join lattice and the Mobius
//! function of the full partition lattice.

use crate::perm::Permutation;
use crate::InputError;
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// A set partition in restricted-growth encoding: `id[i]` is the block index
/// of element `i`, blocks numbered by first appearance. The encoding is
/// canonical, so derived equality and ordering are structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    id: Vec<usize>,
    num_blocks: usize,
}

fn normalize(raw: &[usize]) -> (Vec<usize>, usize) {
    let mut relabel: Vec<Option<usize>> = vec![None; raw.len() + 1];
    let mut next = 0;
    let mut id = Vec::with_capacity(raw.len());
    for &r in raw {
        let lbl = *relabel[r].get_or_insert_with(|| {
            let v = next;
            next += 1;
            v
        });
        id.push(lbl);
    }
    (id, next)
}

impl SetPartition {
    /// The discrete partition `0 = {{0}, {1}, ...}`.
    pub fn singletons(n: usize) -> Self {
        SetPartition { id: (0..n).collect(), num_blocks: n }
    }

    /// The one-block partition `1 = {{0,..,n-1}}` (for n = 0, no blocks).
    pub fn full(n: usize) -> Self {
        SetPartition { id: vec![0; n], num_blocks: if n == 0 { 0 } else { 1 } }
    }

    /// From explicit blocks, which must partition `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, InputError> {
        let mut raw = vec![usize::MAX; n];
        for (b, blk) in blocks.iter().enumerate() {
            for &x in blk {
                if x >= n {
                    return Err(InputError::NotAPartition {
                        n,
                        reason: format!("element {x} out of range"),
                    });
                }
                if raw[x] != usize::MAX {
                    return Err(InputError::NotAPartition {
                        n,
                        reason: format!("element {x} covered twice"),
                    });
                }
                raw[x] = b;
            }
        }
        if let Some(x) = raw.iter().position(|&v| v == usize::MAX) {
            return Err(InputError::NotAPartition { n, reason: format!("element {x} not covered") });
        }
        let (id, num_blocks) = normalize(&raw);
        Ok(SetPartition { id, num_blocks })
    }

    /// From any labeling of elements by block (labels need not be dense).
    pub fn from_labels(raw: &[usize]) -> Self {
        let mut dense: Vec<usize> = raw.to_vec();
        // map arbitrary labels to 0..k first so `normalize` can index by label
        let mut sorted: Vec<usize> = dense.clone();
        sorted.sort_unstable();
        sorted.dedup();
        for v in dense.iter_mut() {
            *v = sorted.binary_search(v).unwrap();
        }
        let (id, num_blocks) = normalize(&dense);
        SetPartition { id, num_blocks }
    }

    pub fn n(&self) -> usize {
        self.id.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    /// `|V| = n - #blocks`, the partition analogue of permutation length.
    pub fn length(&self) -> usize {
        self.n() - self.num_blocks
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.id[i]
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.id[i] == self.id[j]
    }

    /// Blocks ordered by first element; elements increasing inside a block.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks];
        for (i, &b) in self.id.iter().enumerate() {
            out[b].push(i);
        }
        out
    }

    /// Least upper bound in the partition lattice.
    pub fn join(&self, other: &SetPartition) -> SetPartition {
        assert_eq!(self.n(), other.n(), "size mismatch");
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut first_with_id = vec![usize::MAX; n];
        for part in [self, other] {
            for (i, &b) in part.id.iter().enumerate() {
                if first_with_id[b] == usize::MAX {
                    first_with_id[b] = i;
                } else {
                    let (ra, rb) = (find(&mut parent, first_with_id[b]), find(&mut parent, i));
                    parent[ra] = rb;
                }
            }
            first_with_id.iter_mut().for_each(|v| *v = usize::MAX);
        }
        let raw: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        SetPartition::from_labels(&raw)
    }

    /// True when `self` refines `other` (every block of self inside a block
    /// of other).
    pub fn leq(&self, other: &SetPartition) -> bool {
        assert_eq!(self.n(), other.n(), "size mismatch");
        let mut img = vec![usize::MAX; self.num_blocks];
        for i in 0..self.n() {
            let (b, c) = (self.id[i], other.id[i]);
            if img[b] == usize::MAX {
                img[b] = c;
            } else if img[b] != c {
                return false;
            }
        }
        true
    }

    /// True when every block is a union of cycles of `p`.
    pub fn is_invariant_under(&self, p: &Permutation) -> bool {
        assert_eq!(self.n(), p.n(), "size mismatch");
        (0..self.n()).all(|i| self.id[i] == self.id[p.apply(i)])
    }

    /// All partitions of `0..n` via restricted growth strings.
    pub fn all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut id = vec![0usize; n];
        fn rec(id: &mut Vec<usize>, pos: usize, maxused: usize, out: &mut Vec<SetPartition>) {
            if pos == id.len() {
                out.push(SetPartition { id: id.clone(), num_blocks: maxused });
                return;
            }
            for b in 0..=maxused {
                id[pos] = b;
                rec(id, pos + 1, maxused.max(b + 1), out);
            }
        }
        if n == 0 {
            return vec![SetPartition::singletons(0)];
        }
        rec(&mut id, 0, 0, &mut out);
        out
    }

    /// All partitions `U` with `lo <= U <= hi`: independently group the
    /// lo-blocks lying inside each hi-block.
    pub fn all_between(lo: &SetPartition, hi: &SetPartition) -> Vec<SetPartition> {
        assert!(lo.leq(hi), "bounds not comparable");
        let n = lo.n();
        // lo-blocks inside each hi-block
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); hi.num_blocks];
        let mut seen = vec![false; lo.num_blocks];
        for i in 0..n {
            if !seen[lo.id[i]] {
                seen[lo.id[i]] = true;
                members[hi.id[i]].push(lo.id[i]);
            }
        }
        let mut acc: Vec<Vec<usize>> = vec![vec![usize::MAX; lo.num_blocks]];
        for group in &members {
            let ways = SetPartition::all(group.len());
            let mut next = Vec::with_capacity(acc.len() * ways.len());
            for base in &acc {
                for w in &ways {
                    let mut lab = base.clone();
                    // offset labels so groupings of distinct hi-blocks stay distinct
                    let offset = lab.iter().filter(|&&v| v != usize::MAX).count();
                    for (k, &lo_blk) in group.iter().enumerate() {
                        lab[lo_blk] = offset + w.block_of(k);
                    }
                    next.push(lab);
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(|lab| {
                let raw: Vec<usize> = (0..n).map(|i| lab[lo.id[i]]).collect();
                SetPartition::from_labels(&raw)
            })
            .collect()
    }

    /// All partitions invariant under `p`, i.e. all `V >= orbits(p)`.
    pub fn all_invariant_under(p: &Permutation) -> Vec<SetPartition> {
        SetPartition::all_between(&p.orbits(), &SetPartition::full(p.n()))
    }

    /// Restriction to the elements with `keep[i]` true; empty blocks vanish.
    pub fn restrict(&self, keep: &[bool]) -> SetPartition {
        assert_eq!(keep.len(), self.n());
        let raw: Vec<usize> =
            (0..self.n()).filter(|&i| keep[i]).map(|i| self.id[i]).collect();
        SetPartition::from_labels(&raw)
    }

    /// Mobius function of the partition lattice between `self <= w`:
    /// a product of `(-1)^(m-1) (m-1)!` over blocks of `w`, where `m` counts
    /// the blocks of `self` inside.
    pub fn moebius_to(&self, w: &SetPartition) -> BigInt {
        assert!(self.leq(w), "moebius_to needs self <= w");
        let mut per_block = vec![0usize; w.num_blocks];
        let mut seen = vec![false; self.num_blocks];
        for i in 0..self.n() {
            if !seen[self.id[i]] {
                seen[self.id[i]] = true;
                per_block[w.id[i]] += 1;
            }
        }
        let mut out = BigInt::one();
        for m in per_block {
            let mut f = BigInt::one();
            for k in 1..m {
                f *= BigInt::from(k);
            }
            if m % 2 == 0 {
                f = -f;
            }
            out *= f;
        }
        out
    }
}

impl fmt::Display for SetPartition {
    /// 1-based block notation: `{1 3 | 2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (bi, blk) in self.blocks().iter().enumerate() {
            if bi > 0 {
                write!(f, " | ")?;
            }
            for (k, x) in blk.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition[{self}]")
    }
}
