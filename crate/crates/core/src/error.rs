//! Error type shared by all lattice operations.

use crate::pyramid::PyramidPoint;
use thiserror::Error;

/// Failures of the operations in this crate.
///
/// Construction errors (`InvalidSize`, `ShapeError`, `NotWeaklyDecreasing`,
/// `NotInterlacing`) reject data that does not satisfy a type invariant;
/// the remaining variants report violated preconditions of individual
/// operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The side parameter must be a positive integer.
    #[error("side parameter must be at least 1")]
    InvalidSize,

    /// Row data does not have the advertised dimensions.
    #[error("bad shape: {0}")]
    ShapeError(String),

    /// Path enumeration is capped; the requested side exceeds the cap.
    #[error("side {n} exceeds the path-enumeration limit {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },

    /// Forward or backward condensation hit a zero divisor at this point.
    #[error("division by zero: pyramid value at {0} vanishes")]
    DivisionByZero(PyramidPoint),

    /// Recovering a genetic array needs nonzero corner-grid values.
    #[error("division by zero: corner value at ({i}, {j}) vanishes")]
    ZeroCornerValue { i: usize, j: usize },

    /// The mixed second difference at `(i, j)` is negative.
    #[error("not supermodular: violation at ({i}, {j})")]
    NotSupermodular { i: usize, j: usize },

    /// One of the two interlocking corner inequalities fails at `(i, j)`.
    #[error("not inframodular: violation at ({i}, {j})")]
    NotInframodular { i: usize, j: usize },

    /// The north-east corner condition `h(n-1, n-1) <= h(n, n)` fails.
    #[error("corner condition failed: value at (n, n) is smaller than at (n-1, n-1)")]
    NegativeCorner,

    /// The array is not monotone along diagonals: `s(i, j) > s(i+1, j+1)`.
    #[error("not monotone-diagonal: violation at ({i}, {j})")]
    NotInMD { i: usize, j: usize },

    /// Tableaux exist only for integer plane partitions.
    #[error("non-integer entry at ({i}, {j})")]
    NonIntegerEntries { i: usize, j: usize },

    /// An entry is too large to lay out as tableau cells.
    #[error("entry at ({i}, {j}) is too large to expand into tableau cells")]
    EntryTooLarge { i: usize, j: usize },

    /// The two tableaux of a pair must have equal shapes.
    #[error("tableau shapes differ")]
    ShapeMismatch,

    /// The correspondence is defined for non-negative arrays only.
    #[error("negative entry at ({i}, {j})")]
    NegativeEntries { i: usize, j: usize },

    /// Plane partitions decrease weakly along rows and columns.
    #[error("not weakly decreasing at ({i}, {j})")]
    NotWeaklyDecreasing { i: usize, j: usize },

    /// Consecutive partitions of a tableau chain must interlace.
    #[error("partition chain does not interlace at step {step}")]
    NotInterlacing { step: usize },
}
