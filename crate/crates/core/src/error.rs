use thiserror::Error;

use crate::board::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("malformed board: {0}")]
    Malformed(String),
    #[error("malformed ascii board: {0}")]
    Ascii(String),
    #[error("board dimensions must be positive, got {rows}x{cols}")]
    EmptyDimensions { rows: usize, cols: usize },
    #[error("cell {cell} is outside the {rows}x{cols} board")]
    OutOfRange {
        cell: Cell,
        rows: usize,
        cols: usize,
    },
    #[error("duplicate cell {0}")]
    DuplicateCell(Cell),
    #[error("expected {expected} row masks, found {found}")]
    MaskCount { expected: usize, found: usize },
    #[error("cannot stack a board of width {top} on one of width {bottom}")]
    WidthMismatch { top: usize, bottom: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StripError {
    #[error("strip width must be at least 1")]
    ZeroWidth,
    #[error("matrix index ({i},{j}) out of range 1..={max}")]
    IndexOutOfRange { i: usize, j: usize, max: usize },
    #[error("unknown square type {0:?}")]
    UnknownSquare(char),
    #[error("strip widths differ: {top} and {bottom}")]
    WidthMismatch { top: usize, bottom: usize },
    #[error("strip {0} is not an entry of the strip matrix")]
    NotInMatrix(String),
    #[error("width {width} does not match matrix width {matrix}")]
    MatrixWidth { width: usize, matrix: usize },
    /// A maximum placement that is not a concatenation of the four square
    /// types. Reaching this would mean the square geometry is wrong.
    #[error("maximum placement {0:?} does not split into square types")]
    Undecomposable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("sizes must be positive, got n={n}, m={m}")]
    ZeroSize { n: usize, m: usize },
    #[error("R has {r} elements and C has {c}; both need {n}")]
    LengthMismatch { n: usize, r: usize, c: usize },
    #[error("subset element {value} outside 1..={max}")]
    SubsetOutOfRange { value: usize, max: usize },
    #[error("duplicate subset element {0}")]
    DuplicateElement(usize),
    #[error("strip index ({a},{b}) outside 1..={max}")]
    IndexOutOfRange { a: usize, b: usize, max: usize },
    #[error("strip indices not monotone at position {position}")]
    NonMonotone { position: usize },
    #[error("odd dimensions {rows}x{cols}")]
    OddDimensions { rows: usize, cols: usize },
    #[error("not independent: pawns at {} and {} attack", .0.0, .0.1)]
    NotIndependent((Cell, Cell)),
    #[error("not a maximum independent arrangement: {0}")]
    NotMaximum(String),
    /// An independent maximum board whose strips do not form a monotone chain.
    #[error("internal invariant failure: maximum board decodes to non-monotone strips at position {position}")]
    InternalNonMonotone { position: usize },
    #[error("rank {rank} out of range for {count} arrangements")]
    RankOutOfRange { rank: String, count: String },
    #[error("malformed subset json: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("board {rows}x{cols} outside supported range 1..={max}")]
    UnsupportedSize {
        rows: usize,
        cols: usize,
        max: usize,
    },
    #[error("{count} maximum arrangements exceed the enumeration limit {limit}")]
    TooMany { count: String, limit: u64 },
}
