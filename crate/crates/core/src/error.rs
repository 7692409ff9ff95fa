use alloc::string::String;
use alloc::vec::Vec;

/// Errors raised by evaluation, limits and the verification primitives.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("pole in denominator: {0}")]
    PoleInDenominator(String),
    #[error("evaluation hit a pole")]
    PoleAtPoint,
    #[error("limit does not exist: degree {found} exceeds requested order {order}")]
    DegreeOverflow { order: i32, found: i32 },
    #[error("no pole-free sample point found after {0} attempts")]
    AllPointsPoles(usize),
    #[error("normalizing denominator vanishes")]
    ZeroNormalization,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("hypergeometric data not balanced")]
    NotBalanced,
    #[error("operator reaches outside the domain through shift {0:?}")]
    BoundaryLeak(Vec<i32>),
    #[error("result has nonzero imaginary part")]
    NonRealResult,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("operation unsupported for this scalar type: {0}")]
    Unsupported(&'static str),
    #[error("unbound variable or parameter slot {0}")]
    Unbound(usize),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
