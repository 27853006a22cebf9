//! Fold constructors and brute-force search over braid words.
//!
//! A fold is a core braid that closes into one loop with zero writhe, so the
//! ribbon around it needs no twist. [`make_fold`] builds the alternating fold
//! on any odd number of loops, [`nest`] shrinks one fold into a loop of
//! another, and [`search_folds`] scans every word up to a length bound.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::band::is_valid_fold;
use crate::braid::{BraidWord, Generator, Sign};
use crate::error::{Error, Result};

/// Summary of one core word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoldReport {
    pub m: usize,
    pub n: usize,
    pub writhe: i64,
    pub components: usize,
    pub valid: bool,
    pub word: BraidWord,
}

impl FoldReport {
    pub fn of(word: &BraidWord) -> Self {
        FoldReport {
            m: word.strands(),
            n: word.len(),
            writhe: word.exponent_sum(),
            components: word.component_count(),
            valid: is_valid_fold(word),
            word: word.clone(),
        }
    }
}

/// `σ1 σ2⁻¹ σ3 σ4⁻¹ ...` on `loops` strands.
pub fn make_fold(loops: usize) -> Result<BraidWord> {
    if loops.is_multiple_of(2) {
        return Err(Error::EvenLoopCount(loops));
    }
    let letters = (1..loops)
        .map(|i| {
            let sign = if i % 2 == 1 { Sign::Pos } else { Sign::Neg };
            Generator::new(i, sign).expect("i >= 1")
        })
        .collect();
    BraidWord::new(loops, letters)
}

/// Threads `inner` through the last strand of `outer`: `inner`'s letters are
/// shifted right by `m_outer - 1` and appended. The result has
/// `m_outer + m_inner - 1` loops.
pub fn nest(outer: &BraidWord, inner: &BraidWord) -> Result<BraidWord> {
    for fold in [outer, inner] {
        if !is_valid_fold(fold) {
            return Err(Error::InvalidFold(fold.to_string()));
        }
    }
    let offset = outer.strands() - 1;
    let letters = outer
        .letters()
        .iter()
        .copied()
        .chain(inner.letters().iter().map(|g| g.shifted(offset)))
        .collect();
    BraidWord::new(outer.strands() + inner.strands() - 1, letters)
}

/// Letters available on `strands` strands, in enumeration order.
pub fn alphabet(strands: usize) -> Vec<Generator> {
    (1..strands)
        .flat_map(|i| [Sign::Pos, Sign::Neg].map(|s| Generator::new(i, s).expect("i >= 1")))
        .collect()
}

/// Every word of a fixed length on a fixed number of strands, in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct Words {
    strands: usize,
    alphabet: Vec<Generator>,
    digits: Vec<usize>,
    exhausted: bool,
}

impl Iterator for Words {
    type Item = BraidWord;

    fn next(&mut self) -> Option<BraidWord> {
        if self.exhausted {
            return None;
        }
        let letters = self.digits.iter().map(|&d| self.alphabet[d]).collect();
        let word = BraidWord::new(self.strands, letters).expect("alphabet respects strand count");

        // odometer, last letter fastest
        self.exhausted = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.alphabet.len() {
                self.exhausted = false;
                break;
            }
            *d = 0;
        }
        Some(word)
    }
}

/// All `(2(m-1))^n` words of length `n` on `m` strands, each exactly once.
pub fn enumerate_words(strands: usize, length: usize) -> Words {
    assert!(strands >= 1, "a braid needs at least one strand");
    let alphabet = alphabet(strands);
    let exhausted = length > 0 && alphabet.is_empty();
    Words {
        strands,
        alphabet,
        digits: vec![0; length],
        exhausted,
    }
}

/// Number of words [`enumerate_words`] yields.
pub fn word_count(strands: usize, length: usize) -> u128 {
    (2 * (strands as u128).saturating_sub(1)).pow(length as u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoopSearch {
    pub fold_found: bool,
    pub minimal_n: Option<usize>,
    /// Lexicographically least fold of length `minimal_n`.
    pub witness: Option<BraidWord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub m_max: usize,
    pub n_max: usize,
    pub per_m: BTreeMap<usize, LoopSearch>,
}

/// Lexicographically least valid fold with exactly `length` crossings on
/// `strands` strands.
///
/// Words are split on their first letter and the branches scanned in
/// parallel; `find_map_first` keeps the result independent of scheduling.
pub fn first_fold(strands: usize, length: usize) -> Option<BraidWord> {
    if length == 0 {
        return enumerate_words(strands, 0).find(is_valid_fold);
    }
    alphabet(strands).into_par_iter().find_map_first(|lead| {
        let head = BraidWord::new(strands, vec![lead]).expect("lead from alphabet");
        enumerate_words(strands, length - 1)
            .map(|tail| head.concat(&tail))
            .find(is_valid_fold)
    })
}

/// For each loop count `1..=m_max`, the shortest untwisted fold with at
/// most `n_max` crossings.
///
/// The scan is exhaustive: level `(m, n)` costs `(2(m-1))^n` words and even
/// `m` never stops early, so the search touches roughly
/// `(2(m_max-1))^n_max` words. Throughput is around ten million words per
/// second per core: `(6, 6)` is a million words, `(7, 7)` about 1.5 s on one
/// core, and `(8, 8)` at 1.5e9 words is past what this brute force is for.
pub fn search_folds(m_max: usize, n_max: usize) -> SearchSummary {
    let per_m = (1..=m_max)
        .map(|m| {
            let hit = (0..=n_max).find_map(|n| first_fold(m, n).map(|w| (n, w)));
            let entry = match hit {
                Some((n, witness)) => LoopSearch {
                    fold_found: true,
                    minimal_n: Some(n),
                    witness: Some(witness),
                },
                None => LoopSearch {
                    fold_found: false,
                    minimal_n: None,
                    witness: None,
                },
            };
            (m, entry)
        })
        .collect();
    SearchSummary {
        m_max,
        n_max,
        per_m,
    }
}
