//! Braid words on `m` strands, the permutation a word induces on strand
//! positions, and the parity law for single-component closures.
//!
//! Conventions used throughout the crate:
//!
//! * Strand positions are numbered `1..=m` from left to right.
//! * Letters are read left to right and stand for crossings from the top of
//!   the braid to the bottom, one crossing per horizontal level.
//! * `σ_i` with sign `+1` is the right-handed crossing of positions `i` and
//!   `i + 1` when every strand is oriented downward; sign `-1` is its mirror.
//! * Permutations map a start position (top) to an end position (bottom), and
//!   earlier letters act first.

use std::fmt;
use std::ops::Mul;

use serde::{Serialize, Serializer};

use crate::error::{Error, Relation, Result};

/// Handedness of a crossing, or a direction along a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    /// Sign of a nonzero integer; `None` for zero.
    pub fn of(value: i64) -> Option<Sign> {
        match value.signum() {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(value: i64) -> Parity {
        if value.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn of_count(value: usize) -> Parity {
        if value.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// One crossing of adjacent positions `index` and `index + 1`.
///
/// The derived ordering is the enumeration order used by the search: index
/// ascending, then `+` before `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    index: usize,
    sign: Sign,
}

impl Generator {
    pub fn new(index: usize, sign: Sign) -> Result<Self> {
        if index == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(Generator { index, sign })
    }

    /// `σ_index`. Panics on index 0.
    pub fn pos(index: usize) -> Self {
        Generator::new(index, Sign::Pos).expect("generator index must be at least 1")
    }

    /// `σ_index^{-1}`. Panics on index 0.
    pub fn neg(index: usize) -> Self {
        Generator::new(index, Sign::Neg).expect("generator index must be at least 1")
    }

    /// `k > 0` is `σ_k`, `k < 0` is `σ_{|k|}^{-1}`.
    pub fn from_signed(k: i64) -> Result<Self> {
        let sign = Sign::of(k).ok_or(Error::ZeroIndex)?;
        Generator::new(k.unsigned_abs() as usize, sign)
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn to_signed(self) -> i64 {
        self.index as i64 * self.sign.value()
    }

    /// Same crossing moved `offset` positions to the right.
    pub fn shifted(self, offset: usize) -> Self {
        Generator {
            index: self.index + offset,
            sign: self.sign,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// A bijection of `{1..m}` sending each start position to its end position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[p - 1] is the image of p
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    /// The transposition `(i i+1)` on `degree` symbols.
    pub fn adjacent_transposition(degree: usize, i: usize) -> Self {
        let mut p = Permutation::identity(degree);
        p.images.swap(i - 1, i);
        p
    }

    /// Builds a permutation from 1-based images, checking it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &image in &images {
            if image == 0 || image > m || seen[image - 1] {
                return Err(Error::NotABijection(m));
            }
            seen[image - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, position: usize) -> usize {
        self.images[position - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.degree(), next.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&p| next.image(p)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Cycles in order of their smallest element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 1..=self.degree() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p - 1] {
                seen[p - 1] = true;
                cycle.push(p);
                p = self.image(p);
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Parity of `m - (number of cycles)`, i.e. of any transposition product
    /// equal to this permutation.
    pub fn parity(&self) -> Parity {
        Parity::of_count(self.degree() - self.cycle_count())
    }
}

/// Result of checking that a single-component closure has `m + n` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityVerdict {
    pub single_component: bool,
    pub m_parity: Parity,
    pub n_parity: Parity,
    /// Vacuously true when the closure has more than one component.
    pub consistent: bool,
}

impl Serialize for Parity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A word in signed Artin generators on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Generator>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some((position, g)) = letters
            .iter()
            .enumerate()
            .find(|(_, g)| g.index() >= strands)
        {
            return Err(Error::Bounds {
                position: position + 1,
                index: g.index(),
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// The trivial braid on `strands` strands.
    pub fn trivial(strands: usize) -> Result<Self> {
        BraidWord::new(strands, Vec::new())
    }

    /// Builds a word from signed integers (`2` is `σ_2`, `-2` its inverse).
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&k| Generator::from_signed(k))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|g| g.to_signed()).collect()
    }

    /// `self` on top of `other`, on the larger of the two strand counts.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands.max(other.strands),
            letters,
        }
    }

    pub fn permutation(&self) -> Permutation {
        let mut occupant: Vec<usize> = (1..=self.strands).collect();
        for g in &self.letters {
            occupant.swap(g.index() - 1, g.index());
        }
        let mut images = vec![0; self.strands];
        for (position, &strand) in occupant.iter().enumerate() {
            images[strand - 1] = position + 1;
        }
        Permutation { images }
    }

    /// Number of components of the closure.
    pub fn component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Sum of letter signs; the writhe of the closed braid diagram.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.sign().value()).sum()
    }

    pub fn check_statement2(&self) -> ParityVerdict {
        let single_component = self.component_count() == 1;
        let m_parity = Parity::of_count(self.strands);
        let n_parity = Parity::of_count(self.len());
        ParityVerdict {
            single_component,
            m_parity,
            n_parity,
            consistent: !single_component || m_parity != n_parity,
        }
    }

    /// Moves the first `k` letters to the bottom. Negative `k` rotates the
    /// other way. The closure is unchanged up to conjugation.
    pub fn cyclic_shift(&self, k: i64) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k.rem_euclid(letters.len() as i64) as usize;
            letters.rotate_left(k);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Whether `relation` matches at the 1-based letter `position`.
    pub fn relation_applies(&self, position: usize, relation: Relation) -> bool {
        if position == 0 {
            return false;
        }
        let at = position - 1;
        match relation {
            Relation::Commute => match self.letters.get(at..at + 2) {
                Some([a, b]) => a.index().abs_diff(b.index()) >= 2,
                _ => false,
            },
            Relation::YangBaxter => match self.letters.get(at..at + 3) {
                Some([a, b, c]) => {
                    a.sign() == b.sign()
                        && b.sign() == c.sign()
                        && a.index() == c.index()
                        && a.index().abs_diff(b.index()) == 1
                }
                _ => false,
            },
        }
    }

    /// Rewrites the letters starting at 1-based `position` by an Artin
    /// relation. Yang-Baxter works in both directions:
    /// `σ_i σ_{i+1} σ_i` becomes `σ_{i+1} σ_i σ_{i+1}` and vice versa.
    pub fn apply_relation(&self, position: usize, relation: Relation) -> Result<BraidWord> {
        if !self.relation_applies(position, relation) {
            return Err(Error::PatternMismatch { relation, position });
        }
        let at = position - 1;
        let mut letters = self.letters.clone();
        match relation {
            Relation::Commute => letters.swap(at, at + 1),
            Relation::YangBaxter => {
                let (outer, middle) = (letters[at], letters[at + 1]);
                letters[at] = middle;
                letters[at + 1] = outer;
                letters[at + 2] = middle;
            }
        }
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Every position at which `relation` applies.
    pub fn relation_sites(&self, relation: Relation) -> Vec<usize> {
        (1..=self.len())
            .filter(|&p| self.relation_applies(p, relation))
            .collect()
    }
}

/// Canonical text: `m=<strands>` followed by the signed letters.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}", self.strands)?;
        for g in &self.letters {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
