use thiserror::Error;

/// Errors raised by monomial, ideal, lattice and invariant operations.
///
/// Variable and generator positions carried by these variants are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} variables vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("the ambient ring must have at least one variable")]
    ZeroAmbient,

    #[error("the zero ideal is not supported")]
    ZeroIdeal,

    #[error("the unit monomial cannot be a generator")]
    UnitGenerator,

    #[error("empty monomial set")]
    EmptySet,

    #[error("exponent or degree overflow")]
    ExponentOverflow,

    #[error("monomial of degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("expected ambient {expected}, found {found}")]
    BadAmbient { expected: usize, found: usize },

    #[error("certificate shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("support overlaps the variables x1..x{n}")]
    SupportOverlap { n: usize },

    #[error("generators are not minimal: {0}")]
    NotMinimal(String),

    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch { index: usize, expected: u32, found: u32 },

    #[error("input set {0} is not smoothly spreadable")]
    NotSmoothInput(&'static str),

    #[error("lattice map is not well defined: {0}")]
    WellDefinednessViolation(String),

    #[error("{what}: size {size} exceeds the cap {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
