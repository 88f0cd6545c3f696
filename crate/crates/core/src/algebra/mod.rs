//! Exact arithmetic: quadratic numbers, dense matrices over ℚ(√m), fraction-free
//! elimination, integer polynomials and root counting.

pub mod elim;
pub mod irreducible;
pub mod matrix;
pub mod number;
pub mod poly;
pub mod ring;

pub use irreducible::{irreducibility_probe, Certificate, Irreducibility};
pub use matrix::{ExactMatrix, PsdOutcome};
pub use number::{format_rational, parse_rational, AlgebraicNumber};
pub use poly::{char_poly_int, real_root_count, roots_above, IntPolynomial, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("values from different quadratic fields Q(sqrt({0})) and Q(sqrt({1}))")]
    FieldMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse number: {0}")]
    Parse(String),
    #[error("matrix has non-integer entries")]
    NonIntegerEntries,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}
