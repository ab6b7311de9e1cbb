use crate::exact::ExactInt;

/// Errors produced by parsing, validation, and the search/enumeration budgets.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("invalid character {ch:?} at position {pos}")]
    InvalidCharacter { ch: char, pos: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid trace: {0}")]
    InvalidTrace(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("operation requires multiplicity r = 2, got r = {0}")]
    UnsupportedMultiplicity(usize),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("enumeration of {needed} matchings exceeds the budget of {budget}")]
    BudgetExceeded { needed: ExactInt, budget: u64 },

    #[error("matching with {size} edges exceeds the cap of {cap} for this search")]
    SizeCapExceeded { size: usize, cap: usize },

    #[error("search aborted after visiting {0} nodes")]
    SearchBudgetExceeded(u64),

    #[error("persecuted family must be nonempty")]
    EmptyFamily,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
