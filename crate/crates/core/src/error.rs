use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("letter {0} outside the alphabet 1..={1}")]
    LetterOutOfRange(u32, u8),
    #[error("word length {0} exceeds the bound 63")]
    WordTooLong(usize),
    #[error("alphabet size {0} outside 1..=63")]
    AlphabetBound(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("word length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("not symmetric: composition {0} survives peeling")]
    NotSymmetric(String),
    #[error("invalid ideal spec: {0}")]
    InvalidSpec(String),
    #[error("the ring cannot express q; {0} needs Q(q)")]
    NeedsQ(String),
    #[error("restricted basis cannot answer content {0}")]
    ContentMismatch(String),
    #[error("restriction unsound: {0}")]
    UnsoundRestriction(String),
    #[error("vertex sum not in the perp space; witness {witness}")]
    PerpViolation { witness: String },
    #[error("ambiguous switch for {word} at position {position}")]
    Ambiguous { word: Word, position: usize },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid switchboard: {0}")]
    InvalidBoard(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("certificate failed verification: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
