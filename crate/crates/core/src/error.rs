use std::fmt;

/// Which Artin relation a rewrite was asked to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `σ_i σ_j = σ_j σ_i` for `|i - j| >= 2`.
    Commute,
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`, all letters of one sign.
    YangBaxter,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Commute => f.write_str("commute"),
            Relation::YangBaxter => f.write_str("yang_baxter"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator index must be at least 1")]
    ZeroIndex,
    #[error("letter {position} has index {index}, but a {strands}-strand braid only has indices 1..={max}", max = .strands.saturating_sub(1))]
    Bounds {
        position: usize,
        index: usize,
        strands: usize,
    },
    #[error("images do not form a permutation of 1..={0}")]
    NotABijection(usize),
    #[error("syntax error at token {token:?}: {reason}")]
    Syntax { token: String, reason: &'static str },
    #[error("{relation} relation does not apply at position {position}")]
    PatternMismatch { relation: Relation, position: usize },
    #[error("component {0} does not exist")]
    UnknownComponent(usize),
    #[error("linking number needs two distinct components, got {0} twice")]
    SameComponent(usize),
    #[error("core closes up into {0} components; a band core must be a single loop")]
    MultiComponentCore(usize),
    #[error("no untwisted fold has {0} loops: the loop count must be odd")]
    EvenLoopCount(usize),
    #[error("{0} is not a valid fold")]
    InvalidFold(String),
}

impl Error {
    /// Parse and bounds problems, as opposed to violations of the topology.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NoStrands
                | Error::ZeroIndex
                | Error::Bounds { .. }
                | Error::NotABijection(_)
                | Error::Syntax { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
