//! End-to-end checks of the free pair construction: vanishing mixed
//! cumulants, the closed covariance formula for reversed trace words,
//! additivity of cumulants, and the moment-cumulant inversion.

use combinat::{int, ratio, Permutation, Scalar, Shape};
use hops::{
    add_free, centered_pair_correlation, check_axioms, cumulants_from_moments,
    mixed_cumulant_report, moments_from_cumulants, paired_covariance, words, CumulantSet,
    Distribution, FreeJoin, LetterCumulants, MomentOracle, TableOracle,
};
use multfn::MultFn;

/// Generic rational entries with no accidental symmetry, one table per salt.
fn generic_table(order: usize, salt: i64) -> MultFn {
    MultFn::from_entries(Shape::all_up_to(order).into_iter().zip(1i64..).map(|(s, i)| {
        let mix = (17 * i * i * i + 5 * i + salt * salt * salt) % 41 - 20;
        (s, ratio(mix, (i * i + salt).rem_euclid(7) + 1))
    }))
}

fn generic_join(order: usize) -> FreeJoin<TableOracle> {
    FreeJoin::new(
        LetterCumulants::new('a', &CumulantSet::new(generic_table(order, 2), order).unwrap()),
        TableOracle::new('b', generic_table(order, 5)),
    )
}

/// Single cycle moments of each marginal, for the centering constants of
/// the closed covariance formula.
fn marginal_alpha(order: usize, salt: i64, from_cumulants: bool) -> impl Fn(usize) -> Scalar {
    let table = if from_cumulants {
        let k = CumulantSet::new(generic_table(order, salt), order).unwrap();
        moments_from_cumulants(&k).moments().clone()
    } else {
        generic_table(order, salt)
    };
    move |e: usize| table.get(&Shape::new(vec![e])).unwrap().clone()
}

fn interleave(letters: (char, char), left: &[usize], right: &[usize]) -> Vec<(char, usize)> {
    left.iter()
        .zip(right)
        .flat_map(|(&x, &y)| [(letters.0, x), (letters.1, y)])
        .collect()
}

/// The covariance of two centered alternating trace words, the second
/// word written in reverse, against the product formula that only sees
/// the marginal power moments.
#[test]
fn covariance_of_reversed_trace_words_matches_the_closed_form() {
    let cases: &[(&[usize], &[usize], &[usize], &[usize])] = &[
        (&[1], &[1], &[1], &[1]),
        (&[2], &[1], &[1], &[2]),
        (&[1, 1], &[1, 1], &[1, 1], &[1, 1]),
        (&[2, 1], &[1, 1], &[1, 1], &[1, 1]),
    ];
    for &(na, mb, nt, mt) in cases {
        let need: usize =
            na.iter().chain(mb).sum::<usize>() + nt.iter().chain(mt).sum::<usize>();
        let join = generic_join(need);
        let first = interleave(('a', 'b'), na, mb);
        let second: Vec<(char, usize)> = interleave(('a', 'b'), nt, mt)
            .chunks(2)
            .rev()
            .flatten()
            .copied()
            .collect();
        let got = centered_pair_correlation(&join, &first, &second);
        let a_ord = na.iter().max().unwrap() + nt.iter().max().unwrap();
        let b_ord = mb.iter().max().unwrap() + mt.iter().max().unwrap();
        let aa = marginal_alpha(a_ord, 2, true);
        let bb = marginal_alpha(b_ord, 5, false);
        let want = paired_covariance(na, mb, nt, mt, &aa, &bb);
        assert_eq!(got, want, "mismatch at na={na:?} mb={mb:?} nt={nt:?} mt={mt:?}");
        assert_ne!(got, int(0), "the case should be nondegenerate");
    }
}

#[test]
fn mismatched_circle_lengths_have_no_covariance() {
    let join = generic_join(6);
    let first = interleave(('a', 'b'), &[1], &[1]);
    let second = interleave(('a', 'b'), &[1, 1], &[1, 1]);
    assert_eq!(centered_pair_correlation(&join, &first, &second), int(0));
}

#[test]
fn mixed_cumulants_vanish_through_order_four() {
    let join = generic_join(4);
    let report = mixed_cumulant_report(&join, &[vec!['a'], vec!['b']], 4);
    // words of length 2..=4 over two letters with both present, times
    // every permutation of the positions
    assert_eq!(report.evaluated, 2 * 2 + 6 * 6 + 14 * 24);
    assert_eq!(report.max_abs, int(0));
}

#[test]
fn the_join_satisfies_the_moment_axioms() {
    let join = generic_join(4);
    assert_eq!(check_axioms(&join, 4), Ok(()));
}

#[test]
fn free_addition_matches_the_sum_inside_the_join() {
    let order = 4;
    let join = generic_join(order);
    let ka = CumulantSet::new(generic_table(order, 2), order).unwrap();
    let kb = cumulants_from_moments(
        &Distribution::new(generic_table(order, 5), order).unwrap(),
    );
    let summed = moments_from_cumulants(&add_free(&ka, &kb));
    for shape in Shape::all_up_to(order) {
        let pi = Permutation::from_profile(shape.parts());
        let mut acc = int(0);
        for word in words(&['a', 'b'], shape.size()) {
            acc += join.connected_moment(&pi, &word);
        }
        assert_eq!(
            acc,
            summed.moments().get(&shape).unwrap().clone(),
            "disagreement at {shape}"
        );
    }
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(16))]

    /// Convolving with the Moebius table and back with the zeta table is
    /// the identity on arbitrary rational moment tables.
    #[test]
    fn moment_cumulant_transforms_invert_on_random_tables(
        entries in proptest::collection::vec((-40i64..=40, 1i64..=9), 12),
    ) {
        let order = 4;
        let shapes = Shape::all_up_to(order);
        proptest::prop_assume!(entries.len() >= shapes.len());
        let table = MultFn::from_entries(
            shapes
                .into_iter()
                .zip(&entries)
                .map(|(s, &(num, den))| (s, ratio(num, den))),
        );
        let d = Distribution::new(table.clone(), order).unwrap();
        let back = moments_from_cumulants(&cumulants_from_moments(&d));
        proptest::prop_assert_eq!(back.moments(), &table);
        let k2 = CumulantSet::new(table.clone(), order).unwrap();
        let forth = cumulants_from_moments(&moments_from_cumulants(&k2));
        proptest::prop_assert_eq!(forth.cumulants(), &table);
    }
}

#[test]
fn moment_cumulant_transforms_invert_on_six_point_tables() {
    let order = 6;
    let d = Distribution::new(generic_table(order, 3), order).unwrap();
    let k = cumulants_from_moments(&d);
    assert_eq!(moments_from_cumulants(&k).moments(), d.moments());
    let k2 = CumulantSet::new(generic_table(order, 4), order).unwrap();
    let d2 = moments_from_cumulants(&k2);
    assert_eq!(cumulants_from_moments(&d2).cumulants(), k2.cumulants());
}
