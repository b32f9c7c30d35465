use combinat::noncrossing::{is_noncrossing, nc_permutations};
use combinat::shape::Profile;
use combinat::{annular_catalan, catalan, Permutation, SetPartition};
use num_bigint::BigInt;
use psalg::{enumerate_ps, factorizations, geodesic_prefixes, PartitionedPermutation, Product};

#[test]
fn ps_enumeration_counts() {
    // sets-of-cycle-lists growth: 1, 3, 13, 73, 501
    for (n, want) in [(1usize, 1usize), (2, 3), (3, 13), (4, 73), (5, 501)] {
        assert_eq!(enumerate_ps(n).len(), want, "|PS({n})|");
    }
}

#[test]
fn geodesic_prefixes_of_one_cycle_are_noncrossing_discs() {
    for n in 1..=5 {
        let target = PartitionedPermutation::connected(Permutation::from_profile(&[n]));
        let pre = geodesic_prefixes(&target);
        assert_eq!(BigInt::from(pre.len()), catalan(n));
        let mut perms: Vec<Permutation> = Vec::new();
        for x in &pre {
            assert!(x.is_disc(), "{x} should be a disc");
            perms.push(x.p().clone());
        }
        perms.sort();
        let mut nc = nc_permutations(n);
        nc.sort();
        assert_eq!(perms, nc);
    }
}

#[test]
fn geodesic_prefixes_of_two_cycles_split_into_discs_and_bridges() {
    for (m, n, bridges) in [(1usize, 1usize, 1usize), (2, 1, 3), (2, 2, 9), (3, 1, 10)] {
        let profile = Profile::new(vec![m, n]);
        let target = PartitionedPermutation::connected(profile.gamma());
        let pre = geodesic_prefixes(&target);
        let total = pre.len();

        let mut disc_count = 0usize;
        let mut bridge_count = 0usize;
        for x in &pre {
            if x.is_disc() {
                disc_count += 1;
                // discs here are exactly the connected annular permutations
                let join = x.p().orbits().join(&profile.gamma().orbits());
                assert_eq!(join, SetPartition::full(m + n));
            } else {
                assert!(x.is_bridge(), "{x} must be a disc or a bridge");
                bridge_count += 1;
                // the permutation part stays inside the two circles and is
                // noncrossing there; one partition block joins the circles
                let orbits = x.p().orbits();
                let circles = SetPartition::from_blocks(
                    m + n,
                    &[(0..m).collect::<Vec<_>>(), (m..m + n).collect::<Vec<_>>()],
                )
                .unwrap();
                assert!(orbits.leq(&circles), "{x}: permutation crosses the circles");
                let crossing_blocks = x
                    .v()
                    .blocks()
                    .iter()
                    .filter(|b| b.iter().any(|&i| i < m) && b.iter().any(|&i| i >= m))
                    .count();
                assert_eq!(crossing_blocks, 1, "{x}: exactly one block joins the circles");
                for (lo, hi) in [(0, m), (m, m + n)] {
                    let local = SetPartition::from_labels(
                        &(lo..hi).map(|i| orbits.block_of(i)).collect::<Vec<_>>(),
                    );
                    assert!(is_noncrossing(&local), "{x}: crossing inside a circle");
                }
            }
        }
        assert_eq!(BigInt::from(disc_count), annular_catalan(m, n), "disc family at {m}x{n}");
        assert_eq!(bridge_count, bridges, "bridge family at {m}x{n}");
        assert_eq!(total, disc_count + bridge_count);
    }
}

#[test]
fn factorizations_of_a_small_connected_target() {
    // (1_2, e) factors exactly three ways: unit * bridge, bridge * unit,
    // and the disc over (1 2) against itself
    let target = PartitionedPermutation::connected(Permutation::identity(2));
    let facts = factorizations(&target);
    for (a, b) in &facts {
        assert_eq!(a.multiply(b), Product::Pp(target.clone()));
    }
    assert_eq!(facts.len(), 3);
}
