//! Laurent polynomials over Z: finitely many terms `c * q^e` with `e` of
//! either sign.
//!
//! Representation is a base exponent plus a dense ascending coefficient
//! vector. Invariant: the zero polynomial is `(min_exp = 0, [])`; otherwise
//! both the first and last stored coefficients are nonzero.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::QResult;
use crate::polyring::int_poly::IntPoly;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: e,
            coeffs: vec![c],
        }
    }

    /// `1 - q^e` for any `e != 0` (a unit multiple of its positive-exponent
    /// counterpart when `e < 0`).
    pub fn one_minus_pow(e: i64) -> Self {
        assert!(e != 0, "one_minus_pow requires e != 0");
        let mut p = LaurentPoly::one();
        p.add_term(&-BigInt::one(), e);
        p
    }

    /// Builds from a base exponent and ascending coefficients, normalizing
    /// both ends.
    pub fn from_parts(min_exp: i64, coeffs: Vec<impl Into<BigInt>>) -> Self {
        let mut p = LaurentPoly {
            min_exp,
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent with a nonzero coefficient, or `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Iterates `(exponent, coefficient)` over stored entries, ascending,
    /// including interior zeros.
    pub fn iter_terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let base = self.min_exp;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (base + i as i64, c))
    }

    pub(crate) fn raw_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies by `q^e` (either sign).
    pub fn shift(&self, e: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scalar_mul(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Adds `c * q^e` in place.
    pub fn add_term(&mut self, c: &BigInt, e: i64) {
        if c.is_zero() {
            return;
        }
        if self.is_zero() {
            self.min_exp = e;
            self.coeffs = vec![c.clone()];
            return;
        }
        if e < self.min_exp {
            let pad = (self.min_exp - e) as usize;
            self.coeffs
                .splice(0..0, std::iter::repeat_with(BigInt::zero).take(pad));
            self.min_exp = e;
        }
        let idx = (e - self.min_exp) as usize;
        if idx >= self.coeffs.len() {
            self.coeffs.resize(idx + 1, BigInt::zero());
        }
        self.coeffs[idx] += c;
        self.normalize();
    }

    /// Adds `c * q^e * other` in place.
    pub fn add_scaled(&mut self, c: &BigInt, e: i64, other: &LaurentPoly) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        for (exp, coeff) in other.iter_terms() {
            if !coeff.is_zero() {
                self.add_term(&(c * coeff), exp + e);
            }
        }
    }

    /// Lossless view as an ordinary polynomial when no negative exponents
    /// are present.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.min_exp < 0 {
            return None;
        }
        let mut coeffs = vec![BigInt::zero(); self.min_exp as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Some(IntPoly::from_coeffs(coeffs))
    }

    /// Exact division in the Laurent ring; fails with `NotDivisible` when the
    /// underlying integer-polynomial division is inexact. `d` must be nonzero.
    pub fn exact_div(&self, d: &LaurentPoly) -> QResult<LaurentPoly> {
        assert!(!d.is_zero(), "exact_div by the zero polynomial");
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let num = IntPoly::from_coeffs(self.coeffs.clone());
        let den = IntPoly::from_coeffs(d.coeffs.clone());
        let quot = num.exact_div(&den)?;
        Ok(LaurentPoly::from_int_poly_shifted(
            quot,
            self.min_exp - d.min_exp,
        ))
    }

    pub(crate) fn from_int_poly_shifted(p: IntPoly, shift: i64) -> LaurentPoly {
        let mut l = LaurentPoly {
            min_exp: shift,
            coeffs: p.coeffs().to_vec(),
        };
        l.normalize();
        l
    }

    /// Value at `q = 1`, always an integer.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact rational value at a nonzero integer `x`.
    pub fn eval_int(&self, x: i64) -> BigRational {
        assert!(x != 0, "eval_int requires x != 0");
        if self.is_zero() {
            return BigRational::zero();
        }
        let bx = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &bx + c;
        }
        // value = acc * x^min_exp
        if self.min_exp >= 0 {
            BigRational::from(acc * bx.pow(self.min_exp as u32))
        } else {
            BigRational::new(acc, bx.pow((-self.min_exp) as u32))
        }
    }

    /// Double-precision value at the root of unity `exp(2*pi*i*m/n)`.
    ///
    /// Exponents are folded modulo `n` exactly in integer arithmetic before
    /// any floating-point work, so accuracy is governed by the coefficient
    /// l1 norm, not the degree. Intended as an independent oracle only:
    /// polynomials whose coefficients carry more than ~45 bits of
    /// cancellation exceed what f64 can resolve.
    pub fn eval_root_of_unity(&self, m: i64, n: i64) -> Complex64 {
        assert!(n >= 1, "root order must be >= 1");
        let roots: Vec<Complex64> = (0..n)
            .map(|r| {
                let theta = 2.0 * std::f64::consts::PI * (r as f64) / (n as f64);
                let (s, c) = theta.sin_cos();
                Complex64::new(c, s)
            })
            .collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.iter_terms() {
            if c.is_zero() {
                continue;
            }
            let r = (e as i128 * m as i128).rem_euclid(n as i128) as usize;
            acc += roots[r].scale(c.to_f64().unwrap_or(f64::NAN));
        }
        acc
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl From<IntPoly> for LaurentPoly {
    fn from(p: IntPoly) -> Self {
        LaurentPoly::from_int_poly_shifted(p, 0)
    }
}

impl From<&IntPoly> for LaurentPoly {
    fn from(p: &IntPoly) -> Self {
        LaurentPoly::from_int_poly_shifted(p.clone(), 0)
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min_exp.min(rhs.min_exp);
        let max = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (max - min + 1) as usize];
        for (e, c) in self.iter_terms() {
            coeffs[(e - min) as usize] += c;
        }
        for (e, c) in rhs.iter_terms() {
            coeffs[(e - min) as usize] += c;
        }
        LaurentPoly::from_parts(min, coeffs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let coeffs = crate::polyring::int_poly::mul_coeffs_pub(&self.coeffs, &rhs.coeffs);
        LaurentPoly::from_parts(self.min_exp + rhs.min_exp, coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::polyring::text::render_terms(f, self.min_exp, &self.coeffs)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    min_exp: i64,
    coeffs: Vec<String>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LaurentJson {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = LaurentJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("bad integer coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_parts(raw.min_exp, coeffs))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LaurentPoly::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let l = LaurentPoly::deserialize(deserializer)?;
        l.to_int_poly()
            .ok_or_else(|| D::Error::custom("negative exponent in ordinary polynomial"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::QError;

    fn lp(min: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_parts(min, coeffs.to_vec())
    }

    #[test]
    fn normalization_trims_both_ends() {
        let p = lp(-3, &[0, 2, 0, 5, 0]);
        assert_eq!(p.min_exp(), -2);
        assert_eq!(p.max_exp(), Some(0));
        assert_eq!(p.coeff(-2), BigInt::from(2));
        assert_eq!(p.coeff(0), BigInt::from(5));
        assert!(lp(7, &[0, 0]).is_zero());
        assert_eq!(lp(7, &[0, 0]).min_exp(), 0);
    }

    #[test]
    fn arithmetic_with_negative_exponents() {
        let a = lp(-2, &[1, 0, 1]); // q^-2 + 1
        let b = lp(2, &[1]); // q^2
        assert_eq!(&a * &b, lp(0, &[1, 0, 1]));
        assert_eq!(&a + &b, lp(-2, &[1, 0, 1, 0, 1]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(-&b, lp(2, &[-1]));
    }

    #[test]
    fn shift_and_exact_div() {
        // (q^-1 - q) / (1 - q) = q^-1 + 1
        let num = lp(-1, &[1, 0, -1]);
        let den = lp(0, &[1, -1]);
        assert_eq!(num.exact_div(&den).unwrap(), lp(-1, &[1, 1]));
        assert_eq!(num.shift(3), lp(2, &[1, 0, -1]));
        assert_eq!(
            lp(0, &[1, 1]).exact_div(&lp(0, &[1, -1])),
            Err(QError::NotDivisible)
        );
    }

    #[test]
    fn eval_int_gives_exact_rationals() {
        // q^-1 + q at 2 is 5/2
        let p = lp(-1, &[1, 0, 1]);
        let v = p.eval_int(2);
        assert_eq!(v, BigRational::new(BigInt::from(5), BigInt::from(2)));
        assert_eq!(p.eval_int(-1), BigRational::from(BigInt::from(-2)));
        assert_eq!(p.eval_one(), BigInt::from(2));
    }

    #[test]
    fn int_poly_round_trip() {
        let p = IntPoly::from_coeffs(vec![0, 0, 3, -1]);
        let l = LaurentPoly::from(&p);
        assert_eq!(l.min_exp(), 2);
        assert_eq!(l.to_int_poly().unwrap(), p);
        assert_eq!(lp(-1, &[1]).to_int_poly(), None);
        assert_eq!(LaurentPoly::zero().to_int_poly().unwrap(), IntPoly::zero());
    }

    #[test]
    fn root_of_unity_basics() {
        // q at i (m=1, n=4) is i.
        let q = LaurentPoly::monomial(1, 1);
        let v = q.eval_root_of_unity(1, 4);
        assert!((v.re).abs() < 1e-12 && (v.im - 1.0).abs() < 1e-12);
        // q^-1 at i is -i.
        let v = LaurentPoly::monomial(1, -1).eval_root_of_unity(1, 4);
        assert!((v.re).abs() < 1e-12 && (v.im + 1.0).abs() < 1e-12);
        // 1 + q + q^2 vanishes at both primitive cube roots.
        let phi3 = lp(0, &[1, 1, 1]);
        for m in [1, 2] {
            assert!(phi3.eval_root_of_unity(m, 3).norm() < 1e-12);
        }
    }

    #[test]
    fn root_of_unity_is_multiplicative() {
        let a = lp(-3, &[2, 0, -1, 5, 1]);
        let b = lp(1, &[3, -4, 0, 0, 2, 1]);
        let prod = &a * &b;
        for n in [5i64, 7, 12] {
            for m in 1..n {
                if num_integer::Integer::gcd(&m, &n) != 1 {
                    continue;
                }
                let lhs = prod.eval_root_of_unity(m, n);
                let rhs = a.eval_root_of_unity(m, n) * b.eval_root_of_unity(m, n);
                assert!((lhs - rhs).norm() < 1e-9, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let p = lp(-2, &[7, 0, -13]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"min_exp":-2,"coeffs":["7","0","-13"]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);

        let zero = LaurentPoly::zero();
        let s = serde_json::to_string(&zero).unwrap();
        assert_eq!(s, r#"{"min_exp":0,"coeffs":[]}"#);
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), zero);

        // Huge coefficients survive the decimal-string path exactly.
        let big: BigInt = "123456789012345678901234567890123456789".parse().unwrap();
        let p = LaurentPoly::from_parts(5, vec![big.clone(), -&big]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    }

    #[test]
    fn int_poly_json_rejects_negative_exponents() {
        let bad = r#"{"min_exp":-1,"coeffs":["1"]}"#;
        assert!(serde_json::from_str::<IntPoly>(bad).is_err());
        let good = r#"{"min_exp":2,"coeffs":["4"]}"#;
        assert_eq!(
            serde_json::from_str::<IntPoly>(good).unwrap(),
            IntPoly::monomial(4, 2)
        );
    }
}
