//! Exact symbolic toolkit and verification engine for q-series identities
//! and congruences: Gaussian binomials, q-Catalan numbers, q-Fibonacci
//! polynomials, cyclotomic residues, Gauss sums, and recurrence
//! certificates, all over arbitrary-precision integers.
//!
//! The crate is organized bottom-up:
//!
//! * [`polyring`]: dense exact arithmetic (`IntPoly`, `LaurentPoly`,
//!   `RationalFn`) with canonical text and JSON forms.
//! * [`qcore`]: the q-calculus layer (q-integers, q-Pochhammer symbols,
//!   Gaussian binomials, cyclotomic polynomials, Legendre symbols, Gauss-sum
//!   polynomials).
//! * [`qobjects`]: named polynomial families and summation identities
//!   (q-Catalan, q-Fibonacci, finite Rogers-Ramanujan forms, the central
//!   q-binomial sums).
//! * [`congruences`]: checkers that reduce both sides of a claimed
//!   congruence modulo a cyclotomic polynomial (or an integer modulus) and
//!   report structured results.
//! * [`wz`]: the certificate-based recurrence machinery for the central
//!   q-binomial sum, with exact rational-function verification.

pub mod congruences;
pub mod error;
pub mod polyring;
pub mod qcore;
pub mod qobjects;
pub mod wz;

pub use error::{QError, QResult};
