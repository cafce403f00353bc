//! Crate-wide error type.

/// Errors reported by parsing, matrix construction, counting, and the
/// brute-force oracle.
#[derive(Debug, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// Tile ids run `0..=15`.
    #[error("invalid tile id {0}; tile ids run 0..=15")]
    InvalidTileId(u8),

    /// Malformed mosaic text; `line` and `column` are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("mosaic dimensions must be at least 1x1")]
    EmptyMosaic,

    #[error("mosaic side {got} exceeds the supported maximum {max}")]
    SideTooLarge { got: usize, max: usize },

    #[error("expected {expected} cells for a {rows}x{cols} mosaic, got {got}")]
    CellCountMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },

    #[error("state word length {len} exceeds the supported maximum {max}")]
    WordTooLong { len: usize, max: usize },

    #[error("state index {index} out of range 1..={max} for words of length {len}")]
    StateIndexOutOfRange {
        index: usize,
        len: usize,
        max: usize,
    },

    /// A boundary requirement word does not match the grid side it
    /// constrains.
    #[error("boundary word for side {side} has length {got}, expected {expected}")]
    BoundaryWordLength {
        side: &'static str,
        got: usize,
        expected: usize,
    },

    /// A requested matrix would be `2^requested` square, over the cap.
    #[error("matrix dimension 2^{requested} exceeds the limit 2^{limit}")]
    DimensionLimit { requested: usize, limit: usize },

    /// Operands of a matrix product do not fit together.
    #[error(
        "dimension mismatch: left operand is {left}x{left}, right operand is \
         {right}x{right} in {copies} diagonal copies"
    )]
    DimensionMismatch {
        left: usize,
        right: usize,
        copies: usize,
    },

    /// A matrix does not have the dimension its shape parameters demand.
    #[error("matrix dimension {got} does not match the required {expected}")]
    ShapeMismatch { got: usize, expected: usize },

    /// 1-based matrix entry access outside the matrix.
    #[error("entry ({i}, {j}) out of range for a {dim}x{dim} matrix (indices are 1-based)")]
    EntryOutOfRange { i: usize, j: usize, dim: usize },

    /// The fixed-width arithmetic backend could not represent a value.
    /// Overflow is always reported, never wrapped.
    #[error("arithmetic overflow in the fixed-width counting backend")]
    Overflow,

    #[error("{text:?} is not a valid decimal count")]
    InvalidCount { text: String },

    /// A brute-force search was asked for more than its guard allows.
    #[error("oracle limit exceeded: {what} = {got} is over the guard {limit}")]
    OracleLimit {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("weight table covers indices 0..={max}, but index {needed} is required")]
    WeightTableTooShort { max: usize, needed: usize },

    /// Bridge configurations need at least one spot and no two cyclically
    /// adjacent unbridged spots.
    #[error("invalid bridge configuration: {reason}")]
    InvalidBridgeConfig { reason: &'static str },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
