//! Cyclotomic polynomials and reduction of Laurent polynomials modulo them.
//!
//! `Phi_n` divides `q^n - 1`, so `q^n ≡ 1` holds modulo `Phi_n`; that makes
//! reduction meaningful for Laurent polynomials too — every exponent is
//! folded into `0..n` before the Euclidean remainder is taken.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::polyring::{IntPoly, LaurentPoly};

fn cyclo_cache() -> &'static RwLock<HashMap<i64, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<i64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The n-th cyclotomic polynomial, monic of degree `phi(n)`. Computed by
/// dividing `q^n - 1` by the product of the cyclotomic polynomials of the
/// proper divisors of `n`; results are cached. Requires `n >= 1`.
pub fn cyclotomic(n: i64) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic index must be >= 1");
    if let Some(hit) = cyclo_cache().read().unwrap().get(&n) {
        return hit.clone();
    }
    let value = if n == 1 {
        IntPoly::from_coeffs(vec![-1, 1])
    } else {
        let mut den = IntPoly::one();
        for d in 1..n {
            if n % d == 0 {
                den = &den * &cyclotomic(d);
            }
        }
        let num = -&IntPoly::one_minus_pow(n as usize);
        num.exact_div(&den)
            .expect("product of proper-divisor cyclotomics must divide q^n - 1")
    };
    let value = Arc::new(value);
    cyclo_cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| value.clone())
        .clone()
}

/// A residue class modulo the n-th cyclotomic polynomial, stored as its
/// canonical representative of degree below `phi(n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicResidue {
    n: i64,
    rep: IntPoly,
}

impl CyclotomicResidue {
    /// Index of the cyclotomic modulus.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Canonical representative, `deg < phi(n)`.
    pub fn rep(&self) -> &IntPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

impl fmt::Display for CyclotomicResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl fmt::Debug for CyclotomicResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicResidue(n={}, {})", self.n, self.rep)
    }
}

fn finish_reduction(folded: Vec<BigInt>, n: i64) -> CyclotomicResidue {
    let rep = IntPoly::from_coeffs(folded)
        .poly_rem(&cyclotomic(n))
        .expect("cyclotomic moduli are monic of degree >= 1");
    CyclotomicResidue { n, rep }
}

/// Reduces a Laurent polynomial modulo `Phi_n`: every exponent is first
/// folded into `0..n` via `q^n ≡ 1`, then the Euclidean remainder is taken.
/// For `n = 1` this amounts to evaluation at `q = 1`.
pub fn reduce_mod_cyclotomic(p: &LaurentPoly, n: i64) -> CyclotomicResidue {
    assert!(n >= 1, "cyclotomic index must be >= 1");
    let mut folded = vec![BigInt::zero(); n as usize];
    for (e, c) in p.iter_terms() {
        folded[e.rem_euclid(n) as usize] += c;
    }
    finish_reduction(folded, n)
}

/// Reduces an ordinary polynomial modulo `Phi_n` by the same exponent
/// folding, without a Laurent conversion.
pub fn reduce_int_mod_cyclotomic(p: &IntPoly, n: i64) -> CyclotomicResidue {
    reduce_scaled_mod_cyclotomic(p, &BigInt::from(1), 0, n)
}

/// Reduces `c * q^shift * p` modulo `Phi_n` without materializing the scaled
/// shift: each exponent is folded as `(e + shift) mod n` while the scalar is
/// applied term by term. This keeps reductions cheap when `shift` is far
/// larger than `n`, where building the shifted polynomial first would
/// allocate enormous dense vectors.
pub fn reduce_scaled_mod_cyclotomic(
    p: &IntPoly,
    c: &BigInt,
    shift: i64,
    n: i64,
) -> CyclotomicResidue {
    assert!(n >= 1, "cyclotomic index must be >= 1");
    let mut folded = vec![BigInt::zero(); n as usize];
    for (e, coeff) in p.coeffs().iter().enumerate() {
        if !coeff.is_zero() {
            folded[(e as i64 + shift).rem_euclid(n) as usize] += coeff * c;
        }
    }
    finish_reduction(folded, n)
}

/// True when `a ≡ b (mod Phi_n)` after Laurent exponent folding.
pub fn congruent_mod_cyclotomic(a: &LaurentPoly, b: &LaurentPoly, n: i64) -> bool {
    reduce_mod_cyclotomic(&(a - b), n).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::arith::prime_power;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn small_indices_pinned() {
        assert_eq!(*cyclotomic(1), ip(&[-1, 1]));
        assert_eq!(*cyclotomic(2), ip(&[1, 1]));
        assert_eq!(*cyclotomic(3), ip(&[1, 1, 1]));
        assert_eq!(*cyclotomic(4), ip(&[1, 0, 1]));
        assert_eq!(*cyclotomic(6), ip(&[1, -1, 1]));
        assert_eq!(*cyclotomic(9), ip(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(*cyclotomic(12), ip(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn index_105_has_a_minus_two_coefficient() {
        // The smallest index whose cyclotomic polynomial has a coefficient
        // outside {-1, 0, 1}; a good canary against silent miscomputation.
        let p = cyclotomic(105);
        assert_eq!(p.degree(), Some(48));
        assert_eq!(p.coeff(7), BigInt::from(-2));
        assert_eq!(p.coeff(41), BigInt::from(-2));
    }

    #[test]
    fn divisor_product_reconstructs_qn_minus_one() {
        for n in 1..=40i64 {
            let mut prod = IntPoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    prod = &prod * &cyclotomic(d);
                }
            }
            assert_eq!(prod, -&IntPoly::one_minus_pow(n as usize), "n={n}");
        }
    }

    #[test]
    fn value_at_one_detects_prime_powers() {
        for n in 2..=120i64 {
            let expected = match prime_power(n) {
                Some((p, _)) => BigInt::from(p),
                None => BigInt::from(1),
            };
            assert_eq!(cyclotomic(n).eval_one(), expected, "n={n}");
        }
    }

    #[test]
    fn reduction_folds_negative_exponents() {
        // q^-1 ≡ q^2 ≡ -1 - q (mod Phi_3)
        let r = reduce_mod_cyclotomic(&LaurentPoly::monomial(1, -1), 3);
        assert_eq!(r.rep(), &ip(&[-1, -1]));
        assert!(!r.is_zero());
        assert_eq!(r.n(), 3);
    }

    #[test]
    fn q_to_the_n_reduces_to_one() {
        for n in 1..=20i64 {
            let r = reduce_mod_cyclotomic(&LaurentPoly::monomial(1, n), n);
            assert_eq!(r.rep(), &IntPoly::one(), "n={n}");
        }
    }

    #[test]
    fn modulus_reduces_to_zero() {
        let phi5 = LaurentPoly::from(&*cyclotomic(5));
        assert!(reduce_mod_cyclotomic(&phi5, 5).is_zero());
    }

    #[test]
    fn index_one_reduction_is_evaluation_at_one() {
        let p = LaurentPoly::from_parts(-2, vec![3, 0, 1, 7]);
        let r = reduce_mod_cyclotomic(&p, 1);
        assert_eq!(r.rep(), &IntPoly::constant(11));
    }

    #[test]
    fn reduction_respects_multiplication() {
        let a = LaurentPoly::from_parts(-3, vec![2, 0, -1, 5]);
        let b = LaurentPoly::from_parts(1, vec![3, -4, 1]);
        for n in [4i64, 6, 7, 12] {
            let direct = reduce_mod_cyclotomic(&(&a * &b), n);
            let via_reps = {
                let ra = LaurentPoly::from(reduce_mod_cyclotomic(&a, n).rep());
                let rb = LaurentPoly::from(reduce_mod_cyclotomic(&b, n).rep());
                reduce_mod_cyclotomic(&(&ra * &rb), n)
            };
            assert_eq!(direct, via_reps, "n={n}");
        }
    }

    #[test]
    fn scaled_reduction_matches_explicit_product() {
        let p = ip(&[3, -1, 0, 2, 5]);
        for (c, shift, n) in [(7i64, 1000i64, 6i64), (-2, -13, 5), (1, 0, 9), (4, 3, 1)] {
            let direct = {
                let scaled = LaurentPoly::from(&p.scalar_mul(&BigInt::from(c))).shift(shift);
                reduce_mod_cyclotomic(&scaled, n)
            };
            let folded = reduce_scaled_mod_cyclotomic(&p, &BigInt::from(c), shift, n);
            assert_eq!(direct, folded, "c={c}, shift={shift}, n={n}");
        }
        assert_eq!(
            reduce_int_mod_cyclotomic(&p, 4),
            reduce_mod_cyclotomic(&LaurentPoly::from(&p), 4)
        );
    }

    #[test]
    fn congruence_helper_agrees_with_reduction() {
        let a = LaurentPoly::monomial(1, 7);
        let b = LaurentPoly::one();
        assert!(congruent_mod_cyclotomic(&a, &b, 7));
        assert!(!congruent_mod_cyclotomic(&a, &b, 5));
    }
}
