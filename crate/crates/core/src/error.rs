use thiserror::Error;

/// Errors surfaced by input handling and by algorithm preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty string")]
    EmptyText,

    #[error("symbol {symbol} at position {position} is outside an alphabet of size {alphabet}")]
    SymbolOutOfRange {
        symbol: u64,
        position: usize,
        alphabet: u64,
    },

    #[error("alphabet size {0} is not in 1..=2^32")]
    BadAlphabet(u64),

    #[error("symbol {symbol} repeats at positions {first} and {second} of a non-repetitive string")]
    Repetition {
        symbol: u32,
        first: usize,
        second: usize,
    },

    #[error("input must be flagged non-repetitive")]
    NotNonRepetitive,

    #[error("strings must have equal length, got {0} and {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("indicator precondition breached: t' = {t_prime} < c * ud = {bound}")]
    IndicatorPrecondition { t_prime: u64, bound: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
