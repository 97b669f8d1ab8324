//! Dense polynomials over Z in one variable `q`.
//!
//! Coefficients are stored in ascending order of exponent and the vector is
//! kept normalized: the last entry is nonzero, and the zero polynomial is the
//! empty vector. All arithmetic is exact; `BigInt` coefficients never
//! overflow. Multiplication is schoolbook convolution with an `i128` fast
//! path when both operands fit in machine words; swap in a subquadratic
//! algorithm here if profiles ever show convolution dominating.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::{QError, QResult};

/// A polynomial in `q` with integer coefficients, ascending by exponent.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    /// The constant polynomial `c`.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPoly { coeffs }
    }

    /// `1 - q^e` for `e >= 1`.
    pub fn one_minus_pow(e: usize) -> Self {
        assert!(e >= 1, "one_minus_pow requires e >= 1");
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[0] = BigInt::one();
        coeffs[e] = -BigInt::one();
        IntPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, normalizing trailing
    /// zeros away.
    pub fn from_coeffs(coeffs: Vec<impl Into<BigInt>>) -> Self {
        let mut p = IntPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^e` (zero outside the stored range).
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice; the last entry is nonzero.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading coefficient, or `None` for zero.
    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `q^e`.
    pub fn shift_up(&self, e: usize) -> IntPoly {
        if self.is_zero() || e == 0 {
            let mut p = self.clone();
            if e > 0 && !p.is_zero() {
                p.coeffs
                    .splice(0..0, std::iter::repeat_with(BigInt::zero).take(e));
            }
            return p;
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Multiplies by the integer `c`.
    pub fn scalar_mul(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Adds `c * q^e` in place.
    pub fn add_term(&mut self, c: &BigInt, e: usize) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, BigInt::zero());
        }
        self.coeffs[e] += c;
        self.normalize();
    }

    /// In-place multiplication by `1 - q^e`, a single O(deg) pass.
    pub fn mul_one_minus_pow(&mut self, e: usize) {
        assert!(e >= 1, "mul_one_minus_pow requires e >= 1");
        if self.is_zero() {
            return;
        }
        let old_len = self.coeffs.len();
        self.coeffs.resize(old_len + e, BigInt::zero());
        // new[i] = old[i] - old[i-e]; descending order reads each old value
        // before it is overwritten.
        for i in (e..old_len + e).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - e];
        }
        self.normalize();
    }

    /// In-place exact division by `1 - q^e`, a single O(deg) pass.
    ///
    /// Fails with `NotDivisible` when `1 - q^e` does not divide `self`, in
    /// which case `self` is left unspecified but valid.
    pub fn div_one_minus_pow_exact(&mut self, e: usize) -> QResult<()> {
        assert!(e >= 1, "div_one_minus_pow_exact requires e >= 1");
        if self.is_zero() {
            return Ok(());
        }
        let len = self.coeffs.len();
        if len <= e {
            return Err(QError::NotDivisible);
        }
        // p = u * (1 - q^e) means u[i] = p[i] + u[i-e]; ascending order makes
        // the update in place valid.
        let quot_len = len - e;
        for i in e..quot_len {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - e];
        }
        // The top e coefficients of p must cancel against the quotient tail
        // (or vanish outright where the quotient has no coefficient to pair).
        for i in quot_len..len {
            let expected = if i >= e {
                -&self.coeffs[i - e]
            } else {
                BigInt::zero()
            };
            if self.coeffs[i] != expected {
                return Err(QError::NotDivisible);
            }
        }
        self.coeffs.truncate(quot_len);
        self.normalize();
        Ok(())
    }

    /// Exact division, failing with `NotDivisible` when `d` does not divide
    /// `self` over Z[q]. `d` must be nonzero.
    pub fn exact_div(&self, d: &IntPoly) -> QResult<IntPoly> {
        assert!(!d.is_zero(), "exact_div by the zero polynomial");
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return Err(QError::NotDivisible);
        }
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[i + dd]);
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(QError::NotDivisible);
            }
            for (j, dj) in d.coeffs.iter().enumerate().take(dd) {
                rem[i + j] -= &c * dj;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(QError::NotDivisible);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Remainder of `self` modulo a monic polynomial `m` of degree >= 1.
    pub fn poly_rem(&self, m: &IntPoly) -> QResult<IntPoly> {
        let md = match m.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(QError::NonMonicModulus(format!("{m}"))),
        };
        if !m.leading().unwrap().is_one() {
            return Err(QError::NonMonicModulus(format!("{m}")));
        }
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < md {
                break;
            }
            let c = rem.coeffs.last().unwrap().clone();
            let shift = rd - md;
            for (j, mj) in m.coeffs.iter().enumerate() {
                rem.coeffs[shift + j] -= &c * mj;
            }
            rem.normalize();
        }
        Ok(rem)
    }

    /// Greatest common divisor of all coefficients (zero for the zero
    /// polynomial, positive otherwise).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and forces a positive leading coefficient.
    /// Returns zero unchanged.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
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

fn small_coeffs(p: &[BigInt]) -> Option<Vec<i64>> {
    p.iter().map(ToPrimitive::to_i64).collect()
}

pub(crate) fn mul_coeffs_pub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    mul_coeffs(a, b)
}

/// Schoolbook convolution. When both operands fit in `i64` and the worst-case
/// accumulator is provably below `i128::MAX`, runs entirely on machine words.
fn mul_coeffs(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if let (Some(sa), Some(sb)) = (small_coeffs(a), small_coeffs(b)) {
        let ma = sa.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) as u128;
        let mb = sb.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) as u128;
        let terms = sa.len().min(sb.len()) as u128;
        let fits = ma
            .checked_mul(mb)
            .and_then(|m| m.checked_mul(terms))
            .is_some_and(|bound| bound <= i128::MAX as u128 / 2);
        if fits {
            let mut acc = vec![0i128; sa.len() + sb.len() - 1];
            for (i, &ai) in sa.iter().enumerate() {
                if ai == 0 {
                    continue;
                }
                for (j, &bj) in sb.iter().enumerate() {
                    acc[i + j] += ai as i128 * bj as i128;
                }
            }
            return acc.into_iter().map(BigInt::from).collect();
        }
    }
    let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc[i + j] += ai * bj;
            }
        }
    }
    acc
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: mul_coeffs(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::polyring::text::render_terms(f, 0, &self.coeffs)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn zero_is_normalized_empty() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(IntPoly::zero(), p(&[]));
    }

    #[test]
    fn add_cancels_to_constant() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2]));
    }

    #[test]
    fn mul_geometric_telescope() {
        // (1 - q)(1 + q + q^2) = 1 - q^3
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1, 1]), p(&[1, 0, 0, -1]));
    }

    #[test]
    fn mul_matches_between_fast_and_bigint_paths() {
        let big = BigInt::from(i64::MAX) * BigInt::from(3);
        let a = IntPoly::from_coeffs(vec![big.clone(), BigInt::from(2), -big.clone()]);
        let b = IntPoly::from_coeffs(vec![BigInt::from(5), -&big]);
        let prod = &a * &b;
        // Spot-check against hand expansion.
        assert_eq!(prod.coeff(0), 5 * &big);
        assert_eq!(prod.coeff(3), &big * &big);
        assert_eq!(prod.coeff(2), -5 * &big - 2 * &big);
    }

    #[test]
    fn exact_div_recovers_factor() {
        let n = p(&[1, 0, 0, -1]);
        assert_eq!(n.exact_div(&p(&[1, -1])).unwrap(), p(&[1, 1, 1]));
    }

    #[test]
    fn exact_div_reports_nondivisor() {
        assert_eq!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(QError::NotDivisible)
        );
    }

    #[test]
    fn exact_div_with_nonunit_leading_coefficient() {
        // (2 + 2q)(3 + q) = 6 + 8q + 2q^2
        let prod = p(&[6, 8, 2]);
        assert_eq!(prod.exact_div(&p(&[3, 1])).unwrap(), p(&[2, 2]));
        assert_eq!(prod.exact_div(&p(&[2, 2])).unwrap(), p(&[3, 1]));
    }

    #[test]
    fn poly_rem_reduces_square_mod_phi3() {
        // q^2 mod (1 + q + q^2) = -1 - q
        let r = p(&[0, 0, 1]).poly_rem(&p(&[1, 1, 1])).unwrap();
        assert_eq!(r, p(&[-1, -1]));
    }

    #[test]
    fn poly_rem_rejects_nonmonic_modulus() {
        assert!(matches!(
            p(&[0, 0, 1]).poly_rem(&p(&[1, 2])),
            Err(QError::NonMonicModulus(_))
        ));
        assert!(matches!(
            p(&[1]).poly_rem(&p(&[5])),
            Err(QError::NonMonicModulus(_))
        ));
    }

    #[test]
    fn poly_rem_is_consistent_with_division() {
        // p = m*k + r with deg r < deg m, all exact.
        let m = p(&[2, 0, 1, 1]); // monic cubic
        let f = p(&[3, -1, 4, 1, -5, 2, 7]);
        let r = f.poly_rem(&m).unwrap();
        let diff = &f - &r;
        let k = diff.exact_div(&m).unwrap();
        assert_eq!(&(&k * &m) + &r, f);
        assert!(r.degree().unwrap_or(0) < 3);
    }

    #[test]
    fn in_place_binomial_ops_match_generic_arithmetic() {
        let base = p(&[3, -2, 0, 5, 1, -4]);
        for e in 1..=7usize {
            let mut fast = base.clone();
            fast.mul_one_minus_pow(e);
            let slow = &base * &IntPoly::one_minus_pow(e);
            assert_eq!(fast, slow, "mul by 1-q^{e}");
            let mut back = fast.clone();
            back.div_one_minus_pow_exact(e).unwrap();
            assert_eq!(back, base, "div by 1-q^{e}");
        }
    }

    #[test]
    fn in_place_division_detects_nondivisor() {
        let mut f = p(&[1, 1, 1]);
        assert_eq!(f.div_one_minus_pow_exact(1), Err(QError::NotDivisible));
        let mut g = p(&[1]);
        assert_eq!(g.div_one_minus_pow_exact(2), Err(QError::NotDivisible));
    }

    #[test]
    fn scalar_shift_eval() {
        let f = p(&[1, 0, 2]).shift_up(2);
        assert_eq!(f, p(&[0, 0, 1, 0, 2]));
        assert_eq!(f.scalar_mul(&BigInt::from(-3)), p(&[0, 0, -3, 0, -6]));
        assert_eq!(f.eval_one(), BigInt::from(3));
        assert_eq!(IntPoly::zero().eval_one(), BigInt::zero());
    }

    #[test]
    fn content_and_primitive_part() {
        let f = p(&[6, -9, 12]);
        assert_eq!(f.content(), BigInt::from(3));
        assert_eq!(f.primitive_part(), p(&[2, -3, 4]));
        let g = p(&[6, -9, -12]);
        assert_eq!(g.primitive_part(), p(&[-2, 3, 4]));
        assert_eq!(IntPoly::zero().content(), BigInt::zero());
    }
}
