//! Exact and numeric congruence checkers.
//!
//! Each submodule turns one family of claims into [`CongruenceReport`] rows:
//! [`identities`] covers polynomial identities of Gaussian binomials and
//! q-Fibonacci forms, [`binomial_lemmas`] the cyclotomic reductions of
//! binomial rows and central columns, [`sums`] the central prefix sums and
//! their `q = 1` tables, [`catalan`] the q-Catalan congruences, and
//! [`roots`] the root-of-unity evaluations. [`report`] holds the shared row
//! type, aggregation, and rendering.

pub mod binomial_lemmas;
pub mod catalan;
pub mod identities;
pub mod report;
pub mod roots;
pub mod sums;

pub use report::{sort_reports, CongruenceReport, TableLine};
