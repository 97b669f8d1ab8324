use thiserror::Error;

/// Errors raised by exact arithmetic and by the verification layers.
///
/// Arithmetic preconditions that indicate a caller bug (zero divisor, zero
/// denominator) panic instead; these variants are reserved for conditions a
/// well-formed caller can legitimately run into and must be able to report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    /// Exact division was requested but the divisor does not divide the
    /// dividend in Z[q, q^-1].
    #[error("exact division failed: divisor does not divide dividend")]
    NotDivisible,

    /// `poly_rem` requires a monic modulus of degree >= 1.
    #[error("polynomial remainder requires a monic modulus of degree >= 1, got {0}")]
    NonMonicModulus(String),

    /// Legendre symbols are only defined here for odd prime moduli.
    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),

    /// Gauss-sum polynomials q^(tn/p) need integer exponents, i.e. p | n.
    #[error("prime {p} does not divide {n}")]
    PNotDividingN { p: i64, n: i64 },

    /// A closed form prescribes a fractional q-exponent on a term that does
    /// not vanish. The exponent is reported as a reduced fraction.
    #[error("non-integral q-exponent {num}/{den} on a surviving term ({context})")]
    NonIntegralExponent { num: i64, den: i64, context: String },

    /// A certificate denominator factor degenerated to the zero polynomial
    /// at an (n, k) outside the certificate's domain of validity. The factor
    /// is identified by its 1-based position in the denominator product.
    #[error("certificate denominator factor {factor} vanishes at n={n}, k={k}")]
    DegenerateDenominator { n: i64, k: i64, factor: usize },

    /// Malformed textual polynomial input.
    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    /// A parameter outside an operation's documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type QResult<T> = Result<T, QError>;
