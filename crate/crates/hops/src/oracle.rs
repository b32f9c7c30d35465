//! Word-decorated moment oracles.
//!
//! An oracle knows the fully joined moments `phi(1_n, pi)[w]` for words `w`
//! over its alphabet; values on coarser diagrams follow by taking products
//! over blocks. The unit letter behaves like the algebra unit: it multiplies
//! away along cycles, an all-unit argument contributes one on a single
//! cycle and kills everything else.

use combinat::{Permutation, Scalar, SetPartition, Shape};
use multfn::MultFn;
use num_traits::{One, Zero};

/// The unit letter, part of every alphabet.
pub const UNIT: char = '1';

pub trait MomentOracle {
    /// Letters this oracle accepts, always including the unit.
    fn alphabet(&self) -> Vec<char>;

    /// `phi(1_n, pi)[word]`: the moment of `word` arranged along the cycles
    /// of `pi`, all cycles joined into a single correlation.
    fn connected_moment(&self, pi: &Permutation, word: &[char]) -> Scalar;
}

/// `phi(V, pi)[word]`: product of connected values over the blocks of `V`.
pub fn moment_on<O: MomentOracle + ?Sized>(
    o: &O,
    v: &SetPartition,
    pi: &Permutation,
    word: &[char],
) -> Scalar {
    let n = pi.n();
    assert_eq!(word.len(), n, "word length must match the diagram");
    let mut acc = Scalar::one();
    for block in v.blocks() {
        let mut keep = vec![false; n];
        for &i in &block {
            keep[i] = true;
        }
        let sub = pi.restrict(&keep);
        let letters: Vec<char> = block.iter().map(|&i| word[i]).collect();
        acc *= o.connected_moment(&sub, &letters);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Moments of a single element: a letter backed by a diagram table, with
/// unit letters reduced away by traciality.
pub struct TableOracle {
    letter: char,
    table: MultFn,
}

impl TableOracle {
    pub fn new(letter: char, table: MultFn) -> Self {
        assert_ne!(letter, UNIT, "the unit letter is reserved");
        TableOracle { letter, table }
    }

    pub fn letter(&self) -> char {
        self.letter
    }
}

impl MomentOracle for TableOracle {
    fn alphabet(&self) -> Vec<char> {
        vec![self.letter, UNIT]
    }

    fn connected_moment(&self, pi: &Permutation, word: &[char]) -> Scalar {
        assert_eq!(word.len(), pi.n());
        for &c in word {
            assert!(
                c == self.letter || c == UNIT,
                "letter {c:?} is not in this alphabet"
            );
        }
        // multiply along each cycle: unit letters vanish from the product
        let mut lens = Vec::new();
        let mut empty_cycles = 0usize;
        for cycle in pi.cycles() {
            let l = cycle.iter().filter(|&&i| word[i] != UNIT).count();
            if l == 0 {
                empty_cycles += 1;
            } else {
                lens.push(l);
            }
        }
        if empty_cycles > 0 {
            // an argument equal to the unit: worth one alone, zero in any
            // joint correlation
            return if lens.is_empty() && empty_cycles == 1 {
                Scalar::one()
            } else {
                Scalar::zero()
            };
        }
        let shape = Shape::new(lens);
        self.table
            .get(&shape)
            .unwrap_or_else(|| panic!("moment table has no value at {shape}"))
            .clone()
    }
}

/// The canonical form of `(pi, word)` under simultaneous conjugation:
/// cycle lengths in the layout order and the letters laid consecutively
/// along each cycle, cycles sorted by length (descending) then letters,
/// each cycle starting at its lexicographically least rotation.
pub fn canonical_word(pi: &Permutation, word: &[char]) -> (Vec<usize>, Vec<char>) {
    assert_eq!(word.len(), pi.n());
    let mut cycles: Vec<Vec<char>> = pi
        .cycles()
        .into_iter()
        .map(|cyc| {
            let letters: Vec<char> = cyc.iter().map(|&i| word[i]).collect();
            least_rotation(&letters)
        })
        .collect();
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let lens = cycles.iter().map(|c| c.len()).collect();
    (lens, cycles.concat())
}

fn least_rotation(xs: &[char]) -> Vec<char> {
    let l = xs.len();
    (0..l)
        .map(|s| {
            let mut rot = Vec::with_capacity(l);
            rot.extend_from_slice(&xs[s..]);
            rot.extend_from_slice(&xs[..s]);
            rot
        })
        .min()
        .expect("cycles are nonempty")
}

/// Spot-checks the axioms on all diagrams up to `max_n` points with words
/// over the full alphabet: conjugation invariance (which subsumes cyclic
/// rotation along cycles) and the unit-argument rules. Returns the first
/// violation as text.
pub fn check_axioms<O: MomentOracle>(o: &O, max_n: usize) -> Result<(), String> {
    let letters = o.alphabet();
    for n in 1..=max_n {
        for pi in Permutation::all(n) {
            for word in words(&letters, n) {
                let value = o.connected_moment(&pi, &word);
                let (lens, cword) = canonical_word(&pi, &word);
                let canon = o.connected_moment(&Permutation::from_profile(&lens), &cword);
                if value != canon {
                    return Err(format!(
                        "conjugation breaks at pi = {pi}, word = {}",
                        word.iter().collect::<String>()
                    ));
                }
                if word.iter().all(|&c| c == UNIT) {
                    let expected = if pi.num_cycles() == 1 {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    };
                    if value != expected {
                        return Err(format!("unit rule breaks at pi = {pi}, n = {n}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// All words of length `n` over the given letters.
pub fn words(letters: &[char], n: usize) -> Vec<Vec<char>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&c| {
                    let mut next = w.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    out
}
