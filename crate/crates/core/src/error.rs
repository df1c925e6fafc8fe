use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown generator kind `{0}`")]
    UnknownKind(String),

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("alphabet size {requested} exceeds capacity {capacity}")]
    AlphabetCapacity { requested: usize, capacity: usize },

    #[error("{what} out of bounds for a {rows}x{cols} grid")]
    OutOfBounds {
        what: String,
        rows: usize,
        cols: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("empty sequence")]
    EmptySequence,

    #[error("fragment [{start}, {end}] is not periodic")]
    NotPeriodic { start: usize, end: usize },

    #[error("invalid staircase: row {row} has {whites} white cells")]
    InvalidStaircase { row: usize, whites: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
