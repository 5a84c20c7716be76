use thiserror::Error;

/// Errors produced while building, converting or comparing codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Params(String),

    #[error("malformed code: {0}")]
    Malformed(String),

    /// A DoPR whose column gaps do not add up to the column count.
    #[error("gap sum {sum} does not equal the column count {columns}")]
    GapSum { sum: u64, columns: u32 },

    /// Two inputs that are the same code up to a column shift.
    #[error("degenerate pair: both inputs are the same code")]
    DegeneratePair,

    #[error("parse error at token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
