//! The flat band: a ribbon whose core is a single-component closed braid.
//!
//! Doubling each core strand into its two edges turns the core into the pair
//! of boundary circles. Their linking number is the writhe of the core plus
//! the number of full twists put into the ribbon, and a wire that refuses to
//! twist needs that number to be zero.

use serde::Serialize;

use crate::braid::{BraidWord, Generator, Sign};
use crate::error::{Error, Result};
use crate::linkdiag::{self, ComponentId, OrientationAssignment};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatBand {
    core: BraidWord,
    full_twists: i64,
}

/// The two boundary circles as a closed braid on `2m` strands.
///
/// Core strand `i` becomes the pair `(2i - 1, 2i)`; the odd start positions
/// form the left boundary circle and the even ones the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledDiagram {
    pub word: BraidWord,
    pub left_component: ComponentId,
    pub right_component: ComponentId,
}

impl FlatBand {
    pub fn new(core: BraidWord, full_twists: i64) -> Result<Self> {
        let components = core.component_count();
        if components != 1 {
            return Err(Error::MultiComponentCore(components));
        }
        Ok(FlatBand { core, full_twists })
    }

    /// The band with no twists.
    pub fn untwisted(core: BraidWord) -> Result<Self> {
        FlatBand::new(core, 0)
    }

    pub fn core(&self) -> &BraidWord {
        &self.core
    }

    pub fn full_twists(&self) -> i64 {
        self.full_twists
    }

    /// 2-cables the core and appends the twists on the first pair of edges.
    pub fn double(&self) -> DoubledDiagram {
        let twist_letters = 2 * self.full_twists.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(4 * self.core.len() + twist_letters);
        for g in self.core.letters() {
            let i = g.index();
            let block = match g.sign() {
                Sign::Pos => [2 * i, 2 * i + 1, 2 * i - 1, 2 * i],
                Sign::Neg => [2 * i, 2 * i - 1, 2 * i + 1, 2 * i],
            };
            letters.extend(
                block
                    .iter()
                    .map(|&k| Generator::new(k, g.sign()).expect("block indices are >= 1")),
            );
        }
        if let Some(sign) = Sign::of(self.full_twists) {
            let twist = Generator::new(1, sign).expect("index 1");
            letters.extend(std::iter::repeat_n(twist, twist_letters));
        }
        let word = BraidWord::new(2 * self.core.strands(), letters)
            .expect("doubled letters stay below 2m");
        DoubledDiagram {
            word,
            left_component: ComponentId(1),
            right_component: ComponentId(2),
        }
    }

    /// Linking number of the boundary circles, computed from the crossings
    /// of the doubled diagram with both circles oriented alike.
    pub fn boundary_linking_number(&self) -> i64 {
        let doubled = self.double();
        linkdiag::linking_number(
            &doubled.word,
            doubled.left_component,
            doubled.right_component,
            &OrientationAssignment::downward(2),
        )
        .expect("a doubled single-component core has exactly two components")
    }

    /// Same value as [`FlatBand::boundary_linking_number`], from the writhe.
    pub fn boundary_linking_number_fast(&self) -> i64 {
        self.core.exponent_sum() + self.full_twists
    }
}

/// Full twists needed to bring the boundary linking number of `core` to 0.
pub fn required_twists(core: &BraidWord) -> Result<i64> {
    let band = FlatBand::untwisted(core.clone())?;
    Ok(-band.boundary_linking_number_fast())
}

/// A single loop that closes up with no twist in the ribbon.
pub fn is_valid_fold(core: &BraidWord) -> bool {
    core.exponent_sum() == 0 && core.component_count() == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub valid_fold: bool,
    pub m: usize,
    /// `!valid_fold || m` odd.
    pub theorem_holds: bool,
}

pub fn check_theorem(core: &BraidWord) -> TheoremVerdict {
    let valid_fold = is_valid_fold(core);
    let m = core.strands();
    TheoremVerdict {
        valid_fold,
        m,
        theorem_holds: !valid_fold || m % 2 == 1,
    }
}
