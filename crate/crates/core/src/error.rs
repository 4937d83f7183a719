use thiserror::Error;

/// Errors raised by the library.
///
/// Mathematical failures (a check that does not hold) are never errors; they
/// are reported through [`crate::certificate::Certificate`] verdicts.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition `{input}`: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("row lengths {0:?} are not a weakly decreasing sequence of positive integers")]
    InvalidRows(Vec<u32>),

    #[error("node ({row},{col}) is not addable to {partition}: {reason}")]
    NotAddable {
        partition: String,
        row: u32,
        col: u32,
        reason: &'static str,
    },

    #[error("{from} -> {to} is not an arrow of the Young lattice")]
    NotAnArrow { from: String, to: String },

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("shape mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<u32>),

    #[error("stratum index {0} must be non-positive")]
    PositiveStratum(i64),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
