use thiserror::Error;

use crate::arith::Rational;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("pole at u = {0}")]
    Pole(Rational),

    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(Rational),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A mathematical statement that the library asserts failed to hold.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("no regular value at the origin: {0}")]
    Singular(String),

    #[error("{nu} does not occur in the module")]
    NotInModule { nu: String },

    #[error("J is not scalar on the {nu}-component (multiplicity > 1?)")]
    NotProportional { nu: String },
}

pub type Result<T> = std::result::Result<T, Error>;
