//! Joining two moment oracles into a free pair, and the cumulant tests
//! that certify freeness.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use combinat::{Permutation, Scalar, SetPartition};
use multfn::{moebius, MultFn};
use num_traits::{One, Signed, Zero};
use psalg::{factorizations, PartitionedPermutation};

use crate::dist::CumulantSet;
use crate::oracle::{canonical_word, moment_on, words, MomentOracle, UNIT};

/// The cumulant side of a single element named by a letter. Connected
/// cumulants carrying the unit vanish except for the first one.
pub struct LetterCumulants {
    letter: char,
    table: MultFn,
}

impl LetterCumulants {
    pub fn new(letter: char, cumulants: &CumulantSet) -> Self {
        Self::from_table(letter, cumulants.cumulants().clone())
    }

    pub fn from_table(letter: char, table: MultFn) -> Self {
        assert_ne!(letter, UNIT, "the unit letter is reserved");
        LetterCumulants { letter, table }
    }

    pub fn letter(&self) -> char {
        self.letter
    }

    /// `kappa(1_n, pi)[word]` for a word over the letter and the unit.
    fn connected(&self, pi: &Permutation, word: &[char]) -> Scalar {
        assert_eq!(word.len(), pi.n());
        for &c in word {
            assert!(
                c == self.letter || c == UNIT,
                "letter {c:?} is not in this alphabet"
            );
        }
        if word.iter().any(|&c| c == UNIT) {
            // the unit is free of everything: its only nonvanishing
            // cumulant is the first one
            return if word.len() == 1 {
                Scalar::one()
            } else {
                Scalar::zero()
            };
        }
        let shape = pi.cycle_type();
        self.table
            .get(&shape)
            .unwrap_or_else(|| panic!("cumulant table has no value at {shape}"))
            .clone()
    }

    /// `kappa(V, pi)[word]`: product of connected cumulants over blocks.
    pub fn kappa_on(&self, v: &SetPartition, pi: &Permutation, word: &[char]) -> Scalar {
        let n = pi.n();
        assert_eq!(word.len(), n);
        let mut acc = Scalar::one();
        for block in v.blocks() {
            let mut keep = vec![false; n];
            for &i in &block {
                keep[i] = true;
            }
            let sub = pi.restrict(&keep);
            let letters: Vec<char> = block.iter().map(|&i| word[i]).collect();
            acc *= self.connected(&sub, &letters);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }
}

type WordKey = (Vec<usize>, Vec<char>);
type FactorList = Vec<(PartitionedPermutation, PartitionedPermutation)>;

/// The joint distribution of a pair made free by construction: one side
/// given by its cumulants, the other by an arbitrary moment oracle.
///
/// Mixed words are split by unit-padding and joint moments are assembled
/// from the moment-cumulant sum over factored diagrams. Values and
/// per-profile factorization lists are cached under canonical keys, so
/// repeated and conjugated queries are cheap.
pub struct FreeJoin<O> {
    a: LetterCumulants,
    b: O,
    values: Mutex<HashMap<WordKey, Scalar>>,
    factored: Mutex<HashMap<Vec<usize>, Arc<FactorList>>>,
}

pub fn free_join<O: MomentOracle>(a: LetterCumulants, b: O) -> FreeJoin<O> {
    FreeJoin::new(a, b)
}

impl<O: MomentOracle> FreeJoin<O> {
    pub fn new(a: LetterCumulants, b: O) -> Self {
        assert!(
            !b.alphabet().contains(&a.letter),
            "both sides use the letter {:?}",
            a.letter
        );
        FreeJoin {
            a,
            b,
            values: Mutex::new(HashMap::new()),
            factored: Mutex::new(HashMap::new()),
        }
    }

    pub fn b(&self) -> &O {
        &self.b
    }

    fn factored_for(&self, profile: &[usize]) -> Arc<FactorList> {
        if let Some(hit) = self.factored.lock().unwrap().get(profile) {
            return hit.clone();
        }
        let gamma = Permutation::from_profile(profile);
        let list = Arc::new(factorizations(&PartitionedPermutation::connected(gamma)));
        self.factored
            .lock()
            .unwrap()
            .entry(profile.to_vec())
            .or_insert(list)
            .clone()
    }
}

impl<O: MomentOracle> MomentOracle for FreeJoin<O> {
    fn alphabet(&self) -> Vec<char> {
        let mut out = vec![self.a.letter];
        for c in self.b.alphabet() {
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    fn connected_moment(&self, pi: &Permutation, word: &[char]) -> Scalar {
        let key = canonical_word(pi, word);
        if let Some(hit) = self.values.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let (profile, cword) = key;
        let aword: Vec<char> = cword
            .iter()
            .map(|&c| if c == self.a.letter { c } else { UNIT })
            .collect();
        let bword: Vec<char> = cword
            .iter()
            .map(|&c| if c == self.a.letter { UNIT } else { c })
            .collect();
        let mut acc = Scalar::zero();
        for (x, y) in self.factored_for(&profile).iter() {
            let k = self.a.kappa_on(x.v(), x.p(), &aword);
            if k.is_zero() {
                continue;
            }
            acc += k * moment_on(&self.b, y.v(), y.p(), &bword);
        }
        self.values
            .lock()
            .unwrap()
            .insert((profile, cword), acc.clone());
        acc
    }
}

/// `kappa(1_n, pi)[word]` of an oracle, evaluated by pairing its moments
/// against the given Moebius table over factored diagrams.
pub fn decorated_cumulant<O: MomentOracle + ?Sized>(
    o: &O,
    pi: &Permutation,
    word: &[char],
    mu: &MultFn,
) -> Scalar {
    assert_eq!(word.len(), pi.n());
    let target = PartitionedPermutation::connected(pi.clone());
    let mut acc = Scalar::zero();
    for (x, y) in factorizations(&target) {
        let m = moment_on(o, x.v(), x.p(), word);
        if m.is_zero() {
            continue;
        }
        acc += m * mu.eval(&y);
    }
    acc
}

pub struct MixedCumulantReport {
    /// How many (diagram, word) pairs were evaluated.
    pub evaluated: usize,
    /// Largest absolute cumulant value seen; zero certifies freeness
    /// through the requested order.
    pub max_abs: Scalar,
    /// A pair attaining `max_abs`, if anything was evaluated.
    pub witness: Option<(Permutation, Vec<char>)>,
}

/// Evaluates every connected cumulant of the oracle on words of length
/// two through `up_to` that draw letters from at least two of the given
/// groups. Words staying inside one group are skipped, so a single group
/// yields an empty report.
pub fn mixed_cumulant_report<O: MomentOracle>(
    o: &O,
    groups: &[Vec<char>],
    up_to: usize,
) -> MixedCumulantReport {
    let letters: Vec<char> = groups.concat();
    let group_of = |c: char| {
        groups
            .iter()
            .position(|g| g.contains(&c))
            .expect("every letter belongs to a group")
    };
    let mu = moebius::table_recursive(up_to);
    let mut evaluated = 0usize;
    let mut max_abs = Scalar::zero();
    let mut witness = None;
    for n in 2..=up_to {
        for word in words(&letters, n) {
            let present: BTreeSet<usize> = word.iter().map(|&c| group_of(c)).collect();
            if present.len() < 2 {
                continue;
            }
            for pi in Permutation::all(n) {
                let value = decorated_cumulant(o, &pi, &word, &mu);
                evaluated += 1;
                let a = value.abs();
                if a > max_abs || witness.is_none() {
                    max_abs = a;
                    witness = Some((pi.clone(), word.clone()));
                }
            }
        }
    }
    MixedCumulantReport {
        evaluated,
        max_abs,
        witness,
    }
}

/// The fluctuation moment of two centered products: each factor is a
/// letter power minus its scalar moment, the factors of `first` fill one
/// cycle and those of `second` the other. Centering scalars are read off
/// the oracle itself.
pub fn centered_pair_correlation<O: MomentOracle + ?Sized>(
    o: &O,
    first: &[(char, usize)],
    second: &[(char, usize)],
) -> Scalar {
    assert!(first.len() < 16 && second.len() < 16, "too many factors");
    let mut alpha: HashMap<(char, usize), Scalar> = HashMap::new();
    let mut alpha_of = |c: char, e: usize| {
        alpha
            .entry((c, e))
            .or_insert_with(|| {
                o.connected_moment(&Permutation::from_profile(&[e]), &vec![c; e])
            })
            .clone()
    };
    let expand = |side: &[(char, usize)], mask: usize, alpha_of: &mut dyn FnMut(char, usize) -> Scalar| {
        let mut word = Vec::new();
        let mut coeff = Scalar::one();
        for (i, &(c, e)) in side.iter().enumerate() {
            if mask & (1 << i) != 0 {
                word.extend(std::iter::repeat(c).take(e));
            } else {
                coeff *= -alpha_of(c, e);
            }
        }
        (word, coeff)
    };
    let mut acc = Scalar::zero();
    for m1 in 0..(1usize << first.len()) {
        let (w1, c1) = expand(first, m1, &mut alpha_of);
        if w1.is_empty() || c1.is_zero() {
            // a fully centered empty side leaves the unit, whose paired
            // fluctuation vanishes
            continue;
        }
        for m2 in 0..(1usize << second.len()) {
            let (w2, c2) = expand(second, m2, &mut alpha_of);
            if w2.is_empty() || c2.is_zero() {
                continue;
            }
            let pi = Permutation::from_profile(&[w1.len(), w2.len()]);
            let word: Vec<char> = w1.iter().chain(w2.iter()).copied().collect();
            acc += c1.clone() * c2 * o.connected_moment(&pi, &word);
        }
    }
    acc
}

/// Closed form for the fluctuation covariance of two centered alternating
/// trace words in a free pair. The first word takes powers
/// `a^{na[0]} b^{mb[0]} ... a^{na[p-1]} b^{mb[p-1]}` around one cycle; the
/// second is queried with its factors written in reverse,
/// `a^{nt[p-1]} b^{mt[p-1]} ... a^{nt[0]} b^{mt[0]}`. Only first-order
/// moments of the two sides enter.
pub fn paired_covariance(
    na: &[usize],
    mb: &[usize],
    nt: &[usize],
    mt: &[usize],
    alpha_a: &dyn Fn(usize) -> Scalar,
    alpha_b: &dyn Fn(usize) -> Scalar,
) -> Scalar {
    let p = na.len();
    assert!(p >= 1, "need at least one factor pair");
    assert!(
        mb.len() == p && nt.len() == p && mt.len() == p,
        "all four exponent lists must share a length"
    );
    let spoke = |f: &dyn Fn(usize) -> Scalar, u: usize, v: usize| f(u + v) - f(u) * f(v);
    let mut total = Scalar::zero();
    for k in 1..=p {
        let mut term = Scalar::one();
        for i in 0..p {
            term *= spoke(alpha_a, na[(i + k) % p], nt[i]);
            term *= spoke(alpha_b, mb[(i + k) % p], mt[(i + 1) % p]);
        }
        total += term;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::{moments_from_cumulants, CumulantSet};
    use crate::oracle::TableOracle;
    use combinat::{int, ratio, Shape};

    fn b_moments() -> MultFn {
        MultFn::from_entries(
            Shape::all_up_to(4)
                .into_iter()
                .zip(1i64..)
                .map(|(s, i)| (s, ratio(i + 4, 2 * i + 1))),
        )
    }

    fn a_cumulants() -> CumulantSet {
        let table = MultFn::from_entries(
            Shape::all_up_to(4)
                .into_iter()
                .zip(1i64..)
                .map(|(s, i)| (s, ratio(3 - 2 * i, i * i + 1))),
        );
        CumulantSet::new(table, 4).unwrap()
    }

    #[test]
    fn decorated_cumulants_match_hand_expansions() {
        let o = TableOracle::new('b', b_moments());
        let mu = moebius::table_recursive(2);
        let t = b_moments();
        let b1 = t.get(&"(1)".parse().unwrap()).unwrap();
        let b2 = t.get(&"(2)".parse().unwrap()).unwrap();
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(
            decorated_cumulant(&o, &swap, &['b', 'b'], &mu),
            b2 - b1 * b1
        );
        assert_eq!(
            decorated_cumulant(&o, &Permutation::identity(1), &[UNIT], &mu),
            int(1)
        );
        assert_eq!(
            decorated_cumulant(&o, &Permutation::identity(2), &[UNIT, 'b'], &mu),
            int(0)
        );
        assert_eq!(
            decorated_cumulant(&o, &swap, &[UNIT, 'b'], &mu),
            int(0)
        );
    }

    #[test]
    fn pure_letter_words_reproduce_the_summed_moments() {
        let ka = a_cumulants();
        let want = moments_from_cumulants(&ka);
        let join = FreeJoin::new(
            LetterCumulants::new('a', &ka),
            TableOracle::new('b', b_moments()),
        );
        for shape in Shape::all_up_to(4) {
            let pi = Permutation::from_profile(shape.parts());
            let word = vec!['a'; shape.size()];
            assert_eq!(
                join.connected_moment(&pi, &word),
                want.moments().get(&shape).unwrap().clone(),
                "disagreement at {shape}"
            );
        }
    }

    #[test]
    fn pure_partner_words_reproduce_the_partner_table() {
        let join = FreeJoin::new(
            LetterCumulants::new('a', &a_cumulants()),
            TableOracle::new('b', b_moments()),
        );
        let t = b_moments();
        for shape in Shape::all_up_to(4) {
            let pi = Permutation::from_profile(shape.parts());
            let word = vec!['b'; shape.size()];
            assert_eq!(
                join.connected_moment(&pi, &word),
                t.get(&shape).unwrap().clone(),
                "disagreement at {shape}"
            );
        }
    }

    #[test]
    fn a_centered_element_decouples_from_a_constant() {
        // semicircle cumulants against the moments of a scalar t: the
        // first mixed moment phi(ab) factors and the centered side kills it
        let mut kt = MultFn::new();
        for shape in Shape::all_up_to(3) {
            kt.insert(
                shape.clone(),
                if shape == "(2)".parse().unwrap() {
                    int(1)
                } else {
                    int(0)
                },
            );
        }
        let t = ratio(7, 2);
        let mut bt = MultFn::new();
        for shape in Shape::all_up_to(3) {
            let v = if shape.rows() == 1 {
                let mut pow = int(1);
                for _ in 0..shape.size() {
                    pow *= t.clone();
                }
                pow
            } else {
                int(0)
            };
            bt.insert(shape.clone(), v);
        }
        let join = FreeJoin::new(
            LetterCumulants::new('a', &CumulantSet::new(kt, 3).unwrap()),
            TableOracle::new('b', bt),
        );
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(join.connected_moment(&swap, &['a', 'b']), int(0));
        // and the squared letter keeps its variance next to the scalar
        let three = Permutation::from_profile(&[3]);
        assert_eq!(join.connected_moment(&three, &['a', 'a', 'b']), t);
    }

    #[test]
    fn mixed_cumulants_of_a_join_vanish_in_low_order() {
        let join = FreeJoin::new(
            LetterCumulants::new('a', &a_cumulants()),
            TableOracle::new('b', b_moments()),
        );
        let report = mixed_cumulant_report(&join, &[vec!['a'], vec!['b']], 3);
        assert!(report.evaluated > 0);
        assert_eq!(report.max_abs, int(0));
    }

    #[test]
    fn a_single_group_reports_nothing() {
        let o = TableOracle::new('b', b_moments());
        let report = mixed_cumulant_report(&o, &[vec!['b']], 3);
        assert_eq!(report.evaluated, 0);
        assert!(report.witness.is_none());
    }

    #[test]
    fn reversed_covariance_formula_has_a_plain_one_term_case() {
        // p = 1: a single spoke product on each side
        let aa = |e: usize| ratio(e as i64 + 1, 2);
        let bb = |e: usize| ratio(1, e as i64 + 3);
        let got = paired_covariance(&[2], &[1], &[1], &[2], &aa, &bb);
        let want = (aa(3) - aa(2) * aa(1)) * (bb(3) - bb(1) * bb(2));
        assert_eq!(got, want);
    }
}
