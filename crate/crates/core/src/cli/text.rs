//! Plain-text braid words: `m=3 1 -2` is `σ1 σ2⁻¹` on three strands.
//!
//! The `m=` prefix is optional when parsing; without it the word gets the
//! fewest strands its letters allow. Formatting always writes it.

use std::str::FromStr;

use crate::braid::{BraidWord, Generator};
use crate::error::{Error, Result};

pub fn parse_word(text: &str) -> Result<BraidWord> {
    let mut tokens = text.split_whitespace().peekable();
    let declared = match tokens.peek() {
        Some(first) if first.starts_with("m=") => {
            let value = &first[2..];
            let strands: usize = value.parse().map_err(|_| Error::Syntax {
                token: first.to_string(),
                reason: "strand count must be a positive integer",
            })?;
            if strands == 0 {
                return Err(Error::NoStrands);
            }
            tokens.next();
            Some(strands)
        }
        _ => None,
    };

    let letters = tokens
        .map(|token| {
            let k: i64 = token.parse().map_err(|_| Error::Syntax {
                token: token.to_string(),
                reason: "expected a nonzero integer",
            })?;
            Generator::from_signed(k).map_err(|_| Error::Syntax {
                token: token.to_string(),
                reason: "0 is not a generator",
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let strands =
        declared.unwrap_or_else(|| 1 + letters.iter().map(|g| g.index()).max().unwrap_or(0));
    BraidWord::new(strands, letters)
}

pub fn format_word(word: &BraidWord) -> String {
    word.to_string()
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let w = BraidWord::from_signed(3, &[1, -2]).unwrap();
        assert_eq!(parse_word("m=3 1 -2"), Ok(w.clone()));
        assert_eq!(parse_word("1 -2"), Ok(w.clone()));
        assert_eq!(parse_word("  1\t-2\n"), Ok(w));
        assert!(matches!(
            parse_word("m=2 2"),
            Err(Error::Bounds {
                index: 2,
                strands: 2,
                ..
            })
        ));
        assert_eq!(parse_word(""), BraidWord::trivial(1));
        assert_eq!(parse_word("m=4"), BraidWord::trivial(4));
    }

    #[test]
    fn parse_errors() {
        for bad in ["1 0", "1 x", "1 2.5", "m=x 1", "m=-1", "1 m=3", "+-1"] {
            let err = parse_word(bad).unwrap_err();
            assert!(matches!(err, Error::Syntax { .. }), "{bad}: {err:?}");
            assert!(err.is_input_error());
        }
        assert_eq!(parse_word("m=0"), Err(Error::NoStrands));
    }

    #[test]
    fn format_examples() {
        let f = |m, l: &[i64]| format_word(&BraidWord::from_signed(m, l).unwrap());
        assert_eq!(f(3, &[1, -2]), "m=3 1 -2");
        assert_eq!(f(1, &[]), "m=1");
        assert_eq!(f(5, &[1, -2, 3, -4]), "m=5 1 -2 3 -4");
    }

    #[test]
    fn from_str() {
        let w: BraidWord = "m=2 1 1".parse().unwrap();
        assert_eq!(w.to_signed(), vec![1, 1]);
    }
}
