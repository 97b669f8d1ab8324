//! q-arithmetic primitives: q-integers, q-Pochhammer symbols, Gaussian
//! binomial coefficients, cyclotomic polynomials and reduction modulo them,
//! Legendre symbols, prime-power detection, and Gauss-sum polynomials.

pub mod arith;
pub mod cyclotomic;
pub mod qbinomial;

pub use arith::{binomial, catalan, gauss_poly, is_prime, legendre, prime_power, LegendreSymbol};
pub use cyclotomic::{
    congruent_mod_cyclotomic, cyclotomic, reduce_int_mod_cyclotomic, reduce_mod_cyclotomic,
    reduce_scaled_mod_cyclotomic, CyclotomicResidue,
};
pub use qbinomial::{q_binomial, q_binomial_by_product, q_int, q_int_poly, q_pochhammer};
