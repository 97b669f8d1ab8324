//! Elementary number theory on machine integers, plus the big-integer
//! combinatorial values the q = 1 specializations need.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{QError, QResult};
use crate::polyring::IntPoly;

/// Value of a quadratic-residue symbol: -1, 0, or +1; zero exactly when the
/// odd prime modulus divides the argument.
pub type LegendreSymbol = i64;

/// Deterministic trial-division primality test; plenty fast for the
/// machine-word arguments this crate ever sees.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut f = 5i64;
    while f * f <= n {
        if n % f == 0 || n % (f + 2) == 0 {
            return false;
        }
        f += 6;
    }
    true
}

/// Writes `n = p^a` with `p` prime and `a >= 1` if possible.
pub fn prime_power(n: i64) -> Option<(i64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 0i64;
    for f in 2.. {
        if f * f > n {
            p = n; // n itself is prime
            break;
        }
        if n % f == 0 {
            p = f;
            break;
        }
    }
    let mut rest = n;
    let mut a = 0u32;
    while rest % p == 0 {
        rest /= p;
        a += 1;
    }
    (rest == 1).then_some((p, a))
}

fn mod_pow(mut base: u128, mut exp: u64, modulus: u128) -> u128 {
    let mut acc = 1u128 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(a / p)` by Euler's criterion. `p` must be an odd prime.
pub fn legendre(a: i64, p: i64) -> QResult<LegendreSymbol> {
    if p < 3 || !is_prime(p) {
        return Err(QError::NotOddPrime(p));
    }
    let r = a.rem_euclid(p) as u128;
    if r == 0 {
        return Ok(0);
    }
    let e = mod_pow(r, (p as u64 - 1) / 2, p as u128);
    Ok(if e == 1 { 1 } else { -1 })
}

/// The quadratic Gauss sum as a polynomial: the sum of
/// `legendre(t, p) * q^(t*n/p)` over `t = 1..p`. At any primitive n-th root
/// of unity `q^(n/p)` is a primitive p-th root, so the square of this
/// polynomial reduces to the constant `p * (-1)^((p-1)/2)` modulo the n-th
/// cyclotomic polynomial. Used with `p = 3` (value -3) and `p = 5`
/// (value 5). Requires `p` an odd prime dividing `n`.
pub fn gauss_poly(n: i64, p: i64) -> QResult<IntPoly> {
    if p < 3 || !is_prime(p) {
        return Err(QError::NotOddPrime(p));
    }
    if n < 1 || n % p != 0 {
        return Err(QError::PNotDividingN { p, n });
    }
    let step = (n / p) as usize;
    let mut g = IntPoly::zero();
    for t in 1..p {
        g.add_term(&BigInt::from(legendre(t, p)?), t as usize * step);
    }
    Ok(g)
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::from(1);
    for i in 1..=k {
        r = r * BigInt::from(n - k + i) / BigInt::from(i);
    }
    r
}

/// The k-th Catalan number `binomial(2k, k) / (k + 1)`; requires `k >= 0`.
pub fn catalan(k: i64) -> BigInt {
    assert!(k >= 0, "catalan requires k >= 0");
    let (c, rem) = num_integer::Integer::div_rem(&binomial(2 * k, k), &BigInt::from(k + 1));
    debug_assert!(rem.is_zero());
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_table() {
        let primes: Vec<i64> = (0..=60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(!is_prime(-7));
        assert!(!is_prime(1));
        assert!(is_prime(7919));
        assert!(!is_prime(7917));
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(243), Some((3, 5)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(343), Some((7, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
        assert_eq!(prime_power(-9), None);
    }

    #[test]
    fn legendre_pinned_values() {
        assert_eq!(legendre(2, 5).unwrap(), -1);
        assert_eq!(legendre(6, 3).unwrap(), 0);
        assert_eq!(legendre(4, 3).unwrap(), 1);
        assert_eq!(legendre(-1, 5).unwrap(), 1);
        assert_eq!(legendre(-1, 7).unwrap(), -1);
        // Squares and non-squares mod 13.
        let squares: Vec<i64> = (1..13).map(|t| t * t % 13).collect();
        for a in 1..13 {
            let expected = if squares.contains(&a) { 1 } else { -1 };
            assert_eq!(legendre(a, 13).unwrap(), expected, "a={a}");
        }
    }

    #[test]
    fn legendre_rejects_bad_moduli() {
        assert!(matches!(legendre(1, 2), Err(QError::NotOddPrime(2))));
        assert!(matches!(legendre(1, 9), Err(QError::NotOddPrime(9))));
        assert!(matches!(legendre(1, -3), Err(QError::NotOddPrime(-3))));
    }

    #[test]
    fn gauss_poly_shapes() {
        let g33 = gauss_poly(3, 3).unwrap();
        assert_eq!(g33, IntPoly::from_coeffs(vec![0, 1, -1]));
        let g63 = gauss_poly(6, 3).unwrap();
        assert_eq!(g63.coeff(2), BigInt::from(1));
        assert_eq!(g63.coeff(4), BigInt::from(-1));
        assert_eq!(g63.term_count(), 2);
        let g55 = gauss_poly(5, 5).unwrap();
        assert_eq!(g55, IntPoly::from_coeffs(vec![0, 1, -1, -1, 1]));
        assert!(matches!(
            gauss_poly(4, 3),
            Err(QError::PNotDividingN { p: 3, n: 4 })
        ));
        assert!(matches!(gauss_poly(6, 2), Err(QError::NotOddPrime(2))));
    }

    #[test]
    fn gauss_square_reduces_to_signed_prime() {
        use crate::polyring::LaurentPoly;
        use crate::qcore::cyclotomic::reduce_mod_cyclotomic;
        for (n, p, c) in [(3, 3, -3), (6, 3, -3), (9, 3, -3), (5, 5, 5), (10, 5, 5)] {
            let g = LaurentPoly::from(&gauss_poly(n, p).unwrap());
            let r = reduce_mod_cyclotomic(&(&g * &g), n);
            assert_eq!(r.rep(), &IntPoly::constant(c), "n={n} p={p}");
        }
    }

    #[test]
    fn binomial_and_catalan_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
        let cats: Vec<BigInt> = (0..8).map(catalan).collect();
        let expected = [1, 1, 2, 5, 14, 42, 132, 429];
        for (c, e) in cats.iter().zip(expected) {
            assert_eq!(c, &BigInt::from(e));
        }
    }
}
