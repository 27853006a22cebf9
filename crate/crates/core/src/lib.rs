//! Closed braids, flat bands and linking numbers.
//!
//! A wire loop that bends but never twists is modelled as a flat band whose
//! core is a single-component closed braid on `m` strands with `n`
//! crossings. Its two boundary circles link `writhe + twists` times, so an
//! untwisted fold needs writhe zero, hence `n` even, hence `m` odd. This
//! crate computes each of those quantities directly and checks the chain
//! by exhaustive search over short braid words.
//!
//! ```
//! use foldloop::{band, folds};
//!
//! let three = folds::make_fold(3).unwrap();
//! assert!(band::is_valid_fold(&three));
//! let five = folds::nest(&three, &three).unwrap();
//! assert_eq!(five, folds::make_fold(5).unwrap());
//! assert!(folds::make_fold(4).is_err());
//! ```

pub mod band;
pub mod braid;
pub mod cli;
pub mod error;
pub mod folds;
pub mod linkdiag;

pub use band::{check_theorem, is_valid_fold, required_twists, DoubledDiagram, FlatBand};
pub use braid::{BraidWord, Generator, Parity, ParityVerdict, Permutation, Sign};
pub use error::{Error, Relation, Result};
pub use linkdiag::{ComponentId, OrientationAssignment};
