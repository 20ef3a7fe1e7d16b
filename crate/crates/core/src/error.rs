use alloc::vec::Vec;
use core::fmt;

use crate::C64;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Series division by a divisor whose constant term is zero.
    DivisionByZeroAtOrigin,
    /// Derivative of a degree-0 series.
    DegreeUnderflow,
    /// Composition with an inner series that does not fix the origin.
    NonOriginPreservingInner,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    InvalidModel(&'static str),
    /// The support functional of the zero vector is undefined.
    UndefinedSupport,
    NonUnitDirection {
        norm: f64,
    },
    /// `f(x) + Df(x)x` (or `f(x)`) vanishes, so `DF(x)` is not invertible.
    LocalDegeneracy {
        point: Vec<C64>,
    },
    /// A radius outside `(0, 1)`.
    OutOfBall {
        r: f64,
    },
    NotNormalized {
        f0: C64,
    },
    DegreeOverflow {
        needed: usize,
        cap: usize,
    },
    UnsupportedModel(&'static str),
    InvalidParameter(&'static str),
    /// Bloch seminorm gate for the class with seminorm one.
    NotInClass {
        seminorm: f64,
    },
    /// Root bracketing found a number of sign changes other than one.
    NonUniqueRoot {
        sign_changes: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZeroAtOrigin => {
                write!(f, "series division by a divisor vanishing at the origin")
            }
            Error::DegreeUnderflow => write!(f, "cannot differentiate a degree-0 series"),
            Error::NonOriginPreservingInner => {
                write!(f, "inner series of a composition must vanish at the origin")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::InvalidModel(msg) => write!(f, "invalid norm model: {msg}"),
            Error::UndefinedSupport => write!(f, "support functional undefined at the origin"),
            Error::NonUnitDirection { norm } => {
                write!(f, "direction must have unit norm, got {norm}")
            }
            Error::LocalDegeneracy { point } => {
                write!(f, "derivative is not invertible at {point:?}")
            }
            Error::OutOfBall { r } => write!(f, "radius {r} is outside (0, 1)"),
            Error::NotNormalized { f0 } => write!(f, "map is not normalized: f(0) = {f0}"),
            Error::DegreeOverflow { needed, cap } => {
                write!(f, "truncation degree {needed} exceeds cap {cap}")
            }
            Error::UnsupportedModel(msg) => write!(f, "unsupported model: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NotInClass { seminorm } => {
                write!(f, "Bloch seminorm {seminorm} is not within tolerance of 1")
            }
            Error::NonUniqueRoot { sign_changes } => {
                write!(
                    f,
                    "expected one sign change on (0, 1), found {sign_changes}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
