//! Exact polynomial arithmetic in one variable `q`: integer-coefficient
//! polynomials, Laurent polynomials, and canonical rational functions,
//! together with a text format and a JSON format that round-trip exactly.
//!
//! Everything here is deterministic and allocation-only (no global state);
//! values are safe to share across threads.

mod int_poly;
mod laurent;
mod rational;
pub mod text;

pub use int_poly::IntPoly;
pub use laurent::LaurentPoly;
pub use rational::{poly_gcd, RationalFn};
pub use text::parse_laurent;
