//! Classical (tensor) moment/cumulant calculus on the partition lattice.
//!
//! Joint moments enter as a closure giving `E[prod_{i in B} X_i]` for an
//! index block `B`; everything else (partitioned moments, joint cumulants,
//! the products-of-blocks formula) is derived by Mobius inversion.

use crate::scalar::Scalar;
use crate::setpart::SetPartition;
use num_traits::{One, Zero};

/// `E_V = prod over blocks B of E[prod_{i in B} X_i]`.
pub fn partitioned_moment(v: &SetPartition, moment: &impl Fn(&[usize]) -> Scalar) -> Scalar {
    v.blocks().iter().fold(Scalar::one(), |acc, b| acc * moment(b))
}

/// Joint cumulant of the variables indexed by `idx`, by Mobius inversion
/// over partitions of that index set.
pub fn joint_cumulant(idx: &[usize], moment: &impl Fn(&[usize]) -> Scalar) -> Scalar {
    let k = idx.len();
    let mut total = Scalar::zero();
    let full = SetPartition::full(k);
    for w in SetPartition::all(k) {
        let coeff = Scalar::from_integer(w.moebius_to(&full));
        let mut term = coeff;
        for b in w.blocks() {
            let real: Vec<usize> = b.iter().map(|&i| idx[i]).collect();
            term *= moment(&real);
        }
        total += term;
    }
    total
}

/// `k_V = prod over blocks of joint_cumulant(block)`.
pub fn partitioned_cumulant(v: &SetPartition, moment: &impl Fn(&[usize]) -> Scalar) -> Scalar {
    v.blocks().iter().fold(Scalar::one(), |acc, b| acc * joint_cumulant(b, moment))
}

/// Reassembles the joint moment from cumulants:
/// `E[prod_{i in idx} X_i] = sum over partitions V of k_V`.
pub fn moment_from_cumulants(idx: &[usize], cumulant: &impl Fn(&[usize]) -> Scalar) -> Scalar {
    let k = idx.len();
    let mut total = Scalar::zero();
    for v in SetPartition::all(k) {
        let mut term = Scalar::one();
        for b in v.blocks() {
            let real: Vec<usize> = b.iter().map(|&i| idx[i]).collect();
            term *= cumulant(&real);
        }
        total += term;
    }
    total
}

/// Cumulant of products: with `groups = [B_1, .., B_m]` grouping the indices
/// into consecutive products `Z_j = prod_{i in B_j} X_i`,
/// `k_m(Z_1, .., Z_m) = sum of k_V over partitions V of all indices whose
/// join with the grouping is everything`.
pub fn cumulant_of_products(
    groups: &[Vec<usize>],
    cumulant: &impl Fn(&[usize]) -> Scalar,
) -> Scalar {
    let flat: Vec<usize> = groups.iter().flatten().copied().collect();
    let n = flat.len();
    let grouping = SetPartition::from_blocks(
        n,
        &groups
            .iter()
            .scan(0usize, |pos, g| {
                let blk: Vec<usize> = (*pos..*pos + g.len()).collect();
                *pos += g.len();
                Some(blk)
            })
            .collect::<Vec<_>>(),
    )
    .expect("consecutive blocks partition the index range");
    let full = SetPartition::full(n);
    let mut total = Scalar::zero();
    for v in SetPartition::all(n) {
        if v.join(&grouping) != full {
            continue;
        }
        let mut term = Scalar::one();
        for b in v.blocks() {
            let real: Vec<usize> = b.iter().map(|&i| flat[i]).collect();
            term *= cumulant(&real);
        }
        total += term;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    // a small generic moment table keyed by sorted index multiset
    fn table_moment(idx: &[usize]) -> Scalar {
        let mut s: Vec<usize> = idx.to_vec();
        s.sort_unstable();
        // arbitrary but deterministic rationals
        let code: i64 = s.iter().map(|&i| i as i64 + 2).product::<i64>()
            + s.len() as i64 * 7;
        ratio(code, 1 + (s.iter().sum::<usize>() as i64 % 5))
    }

    #[test]
    fn second_cumulant_is_covariance() {
        let m = table_moment;
        let k2 = joint_cumulant(&[0, 1], &m);
        assert_eq!(k2, m(&[0, 1]) - m(&[0]) * m(&[1]));
    }

    #[test]
    fn cumulants_invert_moments() {
        let m = table_moment;
        for idx in [vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 1, 2, 3], vec![1, 1, 2]] {
            let k = |b: &[usize]| joint_cumulant(b, &m);
            assert_eq!(moment_from_cumulants(&idx, &k), m(&idx), "indices {idx:?}");
        }
    }

    #[test]
    fn third_cumulant_closed_form() {
        let m = table_moment;
        let k3 = joint_cumulant(&[0, 1, 2], &m);
        let want = m(&[0, 1, 2]) - m(&[0]) * m(&[1, 2]) - m(&[1]) * m(&[0, 2])
            - m(&[2]) * m(&[0, 1])
            + int(2) * m(&[0]) * m(&[1]) * m(&[2]);
        assert_eq!(k3, want);
    }

    #[test]
    fn products_formula_matches_direct_cumulant() {
        // Z1 = X0 X1, Z2 = X2: k_2(Z1, Z2) computed directly from moments of
        // products must match the partition sum.
        let m = table_moment;
        let k = |b: &[usize]| joint_cumulant(b, &m);
        let lhs = {
            // moments of (Z1, Z2): E[Z1] = m(0,1), E[Z2] = m(2), E[Z1 Z2] = m(0,1,2)
            let zm = |b: &[usize]| -> Scalar {
                let mut idx = Vec::new();
                for &z in b {
                    match z {
                        0 => idx.extend([0, 1]),
                        1 => idx.push(2),
                        _ => unreachable!(),
                    }
                }
                m(&idx)
            };
            joint_cumulant(&[0, 1], &zm)
        };
        let rhs = cumulant_of_products(&[vec![0, 1], vec![2]], &k);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn products_formula_two_by_two() {
        let m = table_moment;
        let k = |b: &[usize]| joint_cumulant(b, &m);
        let lhs = {
            let zm = |b: &[usize]| -> Scalar {
                let mut idx = Vec::new();
                for &z in b {
                    match z {
                        0 => idx.extend([0, 1]),
                        1 => idx.extend([2, 3]),
                        _ => unreachable!(),
                    }
                }
                m(&idx)
            };
            joint_cumulant(&[0, 1], &zm)
        };
        let rhs = cumulant_of_products(&[vec![0, 1], vec![2, 3]], &k);
        assert_eq!(lhs, rhs);
    }
}
