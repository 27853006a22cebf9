//! The machine-readable analysis of one core word.

use serde::Serialize;

use crate::band::{check_theorem, required_twists, FlatBand};
use crate::braid::BraidWord;
use crate::folds::FoldReport;

/// Serialized as a JSON object with fields in declaration order.
///
/// `required_twists` and `boundary_linking_number` are `null` when the core
/// closes into more than one loop, since it then bounds no single band.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub word: BraidWord,
    pub m: usize,
    pub n: usize,
    pub writhe: i64,
    pub components: usize,
    pub valid: bool,
    pub required_twists: Option<i64>,
    /// Boundary linking number of the untwisted band.
    pub boundary_linking_number: Option<i64>,
    pub theorem_holds: bool,
}

pub fn report(word: &BraidWord) -> Report {
    let fold = FoldReport::of(word);
    let band = FlatBand::untwisted(word.clone()).ok();
    Report {
        m: fold.m,
        n: fold.n,
        writhe: fold.writhe,
        components: fold.components,
        valid: fold.valid,
        required_twists: required_twists(word).ok(),
        boundary_linking_number: band.map(|b| b.boundary_linking_number()),
        theorem_holds: check_theorem(word).theorem_holds,
        word: fold.word,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::text::parse_word;

    #[test]
    fn report_examples() {
        let r = report(&parse_word("m=3 1 -2").unwrap());
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"word":"m=3 1 -2","m":3,"n":2,"writhe":0,"components":1,"valid":true,"required_twists":0,"boundary_linking_number":0,"theorem_holds":true}"#
        );
        let r = report(&parse_word("m=2 1").unwrap());
        assert_eq!(
            (r.m, r.n, r.writhe, r.components, r.valid),
            (2, 1, 1, 1, false)
        );
        assert_eq!(
            (r.required_twists, r.boundary_linking_number),
            (Some(-1), Some(1))
        );
        assert!(r.theorem_holds);

        let r = report(&parse_word("m=1").unwrap());
        assert_eq!(
            (r.m, r.n, r.writhe, r.components, r.valid),
            (1, 0, 0, 1, true)
        );
        assert_eq!(
            (r.required_twists, r.boundary_linking_number),
            (Some(0), Some(0))
        );
    }

    #[test]
    fn multi_component_report() {
        let r = report(&parse_word("m=2 1 1").unwrap());
        assert_eq!(r.components, 2);
        assert!(!r.valid && r.theorem_holds);
        assert_eq!((r.required_twists, r.boundary_linking_number), (None, None));
    }
}
