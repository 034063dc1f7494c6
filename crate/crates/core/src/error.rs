use thiserror::Error;

/// Errors raised by the library and the command-line front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("s-exponent {half}/2 is not integral; the computation is incomplete")]
    OddHalfExponent { half: u32 },

    #[error("term with zero u-exponent in a roof-length series")]
    ZeroRoofLength,

    #[error("linear system has no integral solution")]
    NonIntegralSolution,

    #[error("linear system is singular")]
    SingularSystem,

    #[error("x-coordinates must strictly increase (point {index})")]
    NonIncreasingX { index: usize },

    #[error("duplicate point ({x}, {y})")]
    DuplicatePoint { x: i64, y: i64 },

    #[error("configurations have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid roof code {code} for {points} points")]
    InvalidRoofCode { code: u64, points: usize },

    #[error("invalid roof: {0}")]
    InvalidRoof(String),

    #[error("all points are collinear")]
    Collinear,

    #[error("skylines cross")]
    CrossingSkylines,

    #[error("{points} points exceed the guard of {guard}")]
    GuardExceeded { points: usize, guard: usize },

    #[error("realization did not stabilize within {steps} halving steps")]
    NoStabilization { steps: u32 },

    #[error("coordinate overflow while realizing a configuration")]
    CoordinateOverflow,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
