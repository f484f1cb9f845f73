use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("word length {0} exceeds the supported maximum of {max}", max = crate::gf2::MAX_LENGTH)]
    TooLong(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("rank {rank} exceeds the enumeration cap of {cap}")]
    Capacity { rank: usize, cap: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("no sector with tau-word {beta} lifts: the word is not orthogonal to the code")]
    NotLifting { beta: String },

    #[error("sector accounting inconsistent for beta = {beta}: {detail}")]
    ModelInconsistency { beta: String, detail: String },

    #[error("division by {0} is not supported (only signed powers of 2 and sqrt 2)")]
    Division(String),

    #[error("pointed modular data is degenerate")]
    Degenerate,

    #[error("invalid pointed modular data: {0}")]
    InvalidModularData(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("internal error: {0}")]
    Internal(String),
}
