//! Noncrossing partitions and their permutation form, plus the connected
//! geodesic permutations on several base cycles (annular noncrossing and
//! beyond).
//!
//! A permutation `p` counts as noncrossing relative to the base cycle
//! `gamma_n` when its length is geodesic: `|p| + |p^{-1} gamma| = |gamma|`.
//! On `r >= 2` base cycles the connected analogues satisfy
//! `|p| + |p^{-1} gamma| = |gamma| + 2(r - 1)` and join everything.

use crate::perm::Permutation;
use crate::setpart::SetPartition;
use crate::shape::Profile;

/// Crossing test: two blocks interleave as a < b < c < d with a,c together
/// and b,d together.
pub fn is_noncrossing(v: &SetPartition) -> bool {
    let n = v.n();
    for a in 0..n {
        for b in a + 1..n {
            if v.same_block(a, b) {
                continue;
            }
            for c in b + 1..n {
                if !v.same_block(a, c) {
                    continue;
                }
                for d in c + 1..n {
                    if v.same_block(b, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All noncrossing partitions of `0..n` (there are Catalan(n) of them).
pub fn noncrossing_partitions(n: usize) -> Vec<SetPartition> {
    SetPartition::all(n).into_iter().filter(is_noncrossing).collect()
}

/// True when `p` lies on a geodesic from the identity to the full cycle:
/// `|p| + |p^{-1} gamma_n| = n - 1`.
pub fn is_nc_permutation(p: &Permutation) -> bool {
    let gamma = Permutation::from_profile(&[p.n()]);
    let rest = p.inverse().compose(&gamma);
    p.length() + rest.length() == gamma.length()
}

/// All noncrossing permutations of `0..n`.
pub fn nc_permutations(n: usize) -> Vec<Permutation> {
    Permutation::all(n).into_iter().filter(is_nc_permutation).collect()
}

/// Kreweras complement `p^{-1} gamma_n`, an anti-isomorphism of the
/// noncrossing lattice.
pub fn kreweras(p: &Permutation) -> Permutation {
    let gamma = Permutation::from_profile(&[p.n()]);
    p.inverse().compose(&gamma)
}

/// Connected geodesic permutations for the base cycles of `profile`: those
/// `p` whose orbits joined with the base cycles give one block, with
/// `|p| + |p^{-1} gamma| = |gamma| + 2(r - 1)`.
///
/// For one cycle this reduces to the noncrossing permutations whose join
/// with gamma is everything, i.e. all of them; for two cycles it enumerates
/// the annular noncrossing permutations.
pub fn connected_geodesic_permutations(profile: &Profile) -> Vec<Permutation> {
    let gamma = profile.gamma();
    let n = profile.size();
    let r = profile.num_cycles();
    let full = SetPartition::full(n);
    let gamma_orbits = gamma.orbits();
    let target = gamma.length() + 2 * (r - 1);
    Permutation::all(n)
        .into_iter()
        .filter(|p| {
            if p.length() + p.inverse().compose(&gamma).length() != target {
                return false;
            }
            p.orbits().join(&gamma_orbits) == full
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{annular_catalan, catalan};
    use crate::shape::Profile;
    use num_bigint::BigInt;

    #[test]
    fn noncrossing_partition_counts_are_catalan() {
        for n in 0..=7 {
            assert_eq!(BigInt::from(noncrossing_partitions(n).len()), catalan(n));
        }
    }

    #[test]
    fn nc_permutations_biject_with_nc_partitions() {
        for n in 1..=6 {
            let perms = nc_permutations(n);
            assert_eq!(BigInt::from(perms.len()), catalan(n));
            let mut orbit_parts: Vec<SetPartition> =
                perms.iter().map(Permutation::orbits).collect();
            orbit_parts.sort();
            orbit_parts.dedup();
            assert_eq!(orbit_parts.len(), perms.len(), "orbits determine the permutation");
            assert!(orbit_parts.iter().all(is_noncrossing));
        }
    }

    #[test]
    fn kreweras_is_an_involution_up_to_conjugation() {
        // applying the complement twice conjugates by gamma
        let gamma = Permutation::from_profile(&[5]);
        for p in nc_permutations(5) {
            let kk = kreweras(&kreweras(&p));
            assert_eq!(kk, gamma.inverse().compose(&p).compose(&gamma));
        }
    }

    #[test]
    fn annular_counts_match_closed_form() {
        for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
            let got = connected_geodesic_permutations(&Profile::new(vec![m, n])).len();
            assert_eq!(BigInt::from(got), annular_catalan(m, n), "profile {m}x{n}");
        }
    }

    #[test]
    fn multi_cycle_connected_counts() {
        for (profile, want) in [
            (vec![1, 1, 1], 2usize),
            (vec![2, 1, 1], 12),
            (vec![2, 2, 1], 72),
            (vec![1, 1, 1, 1], 6),
            (vec![2, 1, 1, 1], 48),
        ] {
            let got = connected_geodesic_permutations(&Profile::new(profile.clone())).len();
            assert_eq!(got, want, "profile {profile:?}");
        }
    }
}
