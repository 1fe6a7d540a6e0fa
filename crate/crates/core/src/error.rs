use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters (r, s) = ({r}, {s}): {reason}")]
    InvalidParams {
        r: i64,
        s: i64,
        reason: &'static str,
    },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index {index} out of range (bound {bound})")]
    OutOfRange { index: usize, bound: usize },

    #[error("polynomial has a nonzero odd-degree coefficient at degree {0}")]
    NotEven(usize),

    #[error("polynomial coefficients are not all integers")]
    NonInteger,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("quadratic form is degenerate (rank {rank} < {dim})")]
    DegenerateForm { rank: usize, dim: usize },

    #[error("polynomial has a root on the imaginary axis")]
    ImaginaryAxisRoot,

    #[error("color {color} is odd but the SO(3) flag is set")]
    OddColor { color: usize },

    #[error("algebra mismatch: elements belong to different algebras")]
    AlgebraMismatch,

    #[error(
        "structure constants are not closed on the even part (e_{i} e_{j} has an odd component)"
    )]
    ClosureViolation { i: usize, j: usize },

    #[error("{0}")]
    Undefined(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
