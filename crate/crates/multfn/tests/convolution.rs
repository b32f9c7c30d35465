//! Algebraic invariants of the convolution on multiplicative functions,
//! exercised on random rational tables.

use combinat::shape::Shape;
use combinat::{ratio, Permutation};
use multfn::moebius::{diagram_representatives, representative, table_recursive};
use multfn::second_order::{convolve_two_cycles, convolve_two_cycles_shadow};
use multfn::{convolve, convolve_at, MultFn};
use proptest::prelude::*;
use psalg::PartitionedPermutation;

fn arb_table(max_size: usize) -> impl Strategy<Value = MultFn> {
    let shapes = Shape::all_up_to(max_size);
    let k = shapes.len();
    proptest::collection::vec((-20i64..=20, 1i64..=5), k).prop_map(move |vals| {
        let mut f = MultFn::new();
        for (s, (p, q)) in shapes.iter().zip(vals) {
            f.insert(s.clone(), ratio(p, q));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn delta_is_a_two_sided_unit(f in arb_table(4)) {
        let d = MultFn::delta(4);
        for shape in Shape::all_up_to(4) {
            let target = PartitionedPermutation::connected(
                Permutation::from_profile(shape.parts()),
            );
            prop_assert_eq!(convolve_at(&d, &f, &target), f.eval(&target));
            prop_assert_eq!(convolve_at(&f, &d, &target), f.eval(&target));
        }
    }

    #[test]
    fn convolution_is_associative(
        f in arb_table(4),
        g in arb_table(4),
        h in arb_table(4),
    ) {
        let left = convolve(&convolve(&f, &g, 4), &h, 4);
        let right = convolve(&f, &convolve(&g, &h, 4), 4);
        for shape in Shape::all_up_to(4) {
            prop_assert_eq!(left.get(&shape), right.get(&shape), "shape {}", shape);
        }
    }

    #[test]
    fn convolution_of_multiplicative_functions_is_multiplicative(
        f in arb_table(5),
        g in arb_table(5),
    ) {
        // value at a disconnected diagram = product of connected values
        let fg = convolve(&f, &g, 3);
        for (a, b) in [("(2)", "(2,1)"), ("(1,1)", "(3)"), ("(1)", "(2)")] {
            let sa: Shape = a.parse().unwrap();
            let sb: Shape = b.parse().unwrap();
            let x = representative(&[sa.clone(), sb.clone()]);
            let split = fg.get(&sa).unwrap().clone() * fg.get(&sb).unwrap().clone();
            prop_assert_eq!(convolve_at(&f, &g, &x), split, "{} | {}", sa, sb);
        }
    }

    #[test]
    fn two_cycle_assemblies_match_the_factorization_scan(
        f in arb_table(4),
        g in arb_table(4),
    ) {
        for (m, n) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
            let target = PartitionedPermutation::connected(
                Permutation::from_profile(&[m, n]),
            );
            let scan = convolve_at(&f, &g, &target);
            prop_assert_eq!(convolve_two_cycles(&f, &g, m, n), scan.clone(), "({},{})", m, n);
            prop_assert_eq!(convolve_two_cycles_shadow(&f, &g, m, n), scan, "({},{})", m, n);
        }
    }
}

#[test]
fn mobius_inverts_zeta_across_every_diagram_of_size_four() {
    let mu = table_recursive(4);
    let zeta = MultFn::zeta(4);
    for target in diagram_representatives(4) {
        let want = if target.length() == 0 { combinat::int(1) } else { combinat::int(0) };
        assert_eq!(convolve_at(&mu, &zeta, &target), want, "mu*zeta at {}", target.diagram());
        assert_eq!(convolve_at(&zeta, &mu, &target), want, "zeta*mu at {}", target.diagram());
    }
}

#[test]
fn moment_wrappers_agree_with_direct_evaluation() {
    let mut f = MultFn::new();
    for (s, v) in [
        ("(1)", (1, 2)),
        ("(2)", (2, 1)),
        ("(1,1)", (3, 1)),
        ("(3)", (5, 1)),
        ("(2,1)", (7, 1)),
        ("(1,1,1)", (11, 1)),
    ] {
        f.insert(s.parse().unwrap(), ratio(v.0, v.1));
    }
    let gamma3 = Permutation::from_profile(&[3]);
    let t3 = PartitionedPermutation::connected(gamma3);
    let z = MultFn::zeta(3);
    assert_eq!(multfn::moments_first_order(&f, 3), convolve_at(&f, &z, &t3));
    let gamma21 = Permutation::from_profile(&[2, 1]);
    let t21 = PartitionedPermutation::connected(gamma21);
    assert_eq!(multfn::moments_second_order(&f, 2, 1), convolve_at(&f, &z, &t21));
}
