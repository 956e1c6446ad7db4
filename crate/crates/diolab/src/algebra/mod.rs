//! Exact arithmetic for `F_q`, `F_q[t]` and `F_q(t)`.
//!
//! Everything here is immutable after construction and all operations are
//! pure functions, so values can be shared freely across threads.

mod enumerate;
mod factor;
mod field;
mod poly;
mod ratfunc;
mod text;

pub(crate) use factor::polymod_pow;

pub use enumerate::{enumerate_by_height, polynomials_of_degree_at_most};
pub use factor::{
    factor_monic, is_irreducible, partial_fractions, recompose, PartialFractionTerm,
};
pub use field::{standard_field, FieldDescriptor, FieldElement, STANDARD_MODULI};
pub use poly::Polynomial;
pub use ratfunc::{Place, RatFunc, Valuation};
pub use text::{parse_field_spec, parse_polynomial, parse_ratfunc, poly_text, ratfunc_text};

use thiserror::Error;

/// Errors raised by construction and normalization of algebraic values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("prime {0} too large (must fit in 31 bits)")]
    PrimeTooLarge(u64),
    #[error("extension modulus must be monic")]
    ModulusNotMonic,
    #[error("extension modulus is reducible over the prime field")]
    ReducibleModulus,
    #[error("extension modulus must have degree >= 1")]
    ModulusConstant,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("place polynomial must be monic")]
    PlaceNotMonic,
    #[error("place polynomial must be irreducible")]
    PlaceReducible,
    #[error("syntax error at byte {position}: expected {expected}")]
    SyntaxError { position: usize, expected: String },
    #[error("factorization degree bound exceeded (degree {0})")]
    FactorDegreeBound(u64),
}

impl AlgebraError {
    /// Stable machine-readable name, used by the CLI error envelope.
    pub fn name(&self) -> &'static str {
        match self {
            AlgebraError::NonPrime(_) => "NonPrime",
            AlgebraError::PrimeTooLarge(_) => "PrimeTooLarge",
            AlgebraError::ModulusNotMonic => "ModulusNotMonic",
            AlgebraError::ReducibleModulus => "ReducibleModulus",
            AlgebraError::ModulusConstant => "ModulusConstant",
            AlgebraError::ZeroDenominator => "ZeroDenominator",
            AlgebraError::PlaceNotMonic => "PlaceNotMonic",
            AlgebraError::PlaceReducible => "PlaceReducible",
            AlgebraError::SyntaxError { .. } => "SyntaxError",
            AlgebraError::FactorDegreeBound(_) => "FactorDegreeBound",
        }
    }
}
