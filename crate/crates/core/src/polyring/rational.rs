//! Rational functions in `q` over the integers, kept in a canonical reduced
//! form so that structural equality is mathematical equality.
//!
//! Canonical form: all powers of `q` are pushed into the numerator, the
//! denominator is an ordinary polynomial with nonzero constant term and
//! positive leading coefficient, and numerator and denominator share no
//! polynomial or integer factor.

use num_integer::Integer;
use num_traits::Signed;
use std::fmt;

use crate::polyring::int_poly::IntPoly;
use crate::polyring::laurent::LaurentPoly;

/// Gcd in Z[q], including the integer content, with positive leading
/// coefficient. Primitive pseudo-remainder sequence; adequate for the degree
/// scale used here.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive_part().scalar_mul(&b.content());
    }
    if b.is_zero() {
        return a.primitive_part().scalar_mul(&a.content());
    }
    let content = a.content().gcd(&b.content());
    let mut x = a.primitive_part();
    let mut y = b.primitive_part();
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = pseudo_rem(&x, &y).primitive_part();
        x = y;
        y = r;
    }
    x.primitive_part().scalar_mul(&content)
}

fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo_rem by zero");
    let lb = b.leading().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading().unwrap().clone();
        r = &r.scalar_mul(&lb) - &b.shift_up(dr - db).scalar_mul(&lr);
    }
    r
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: LaurentPoly,
    den: IntPoly,
}

impl RationalFn {
    /// Builds `num / den` and reduces to canonical form. Panics when `den`
    /// is zero, which is a caller bug.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> RationalFn {
        assert!(!den.is_zero(), "RationalFn with zero denominator");
        if num.is_zero() {
            return RationalFn::zero();
        }
        // Split off q powers: num = q^a * n, den = q^b * d.
        let shift = num.min_exp() - den.min_exp();
        let n = IntPoly::from_coeffs(num.raw_coeffs().to_vec());
        let d = IntPoly::from_coeffs(den.raw_coeffs().to_vec());
        let g = poly_gcd(&n, &d);
        let mut n = n.exact_div(&g).expect("gcd must divide numerator");
        let mut d = d.exact_div(&g).expect("gcd must divide denominator");
        if d.leading().unwrap().is_negative() {
            n = -&n;
            d = -&d;
        }
        RationalFn {
            num: LaurentPoly::from_int_poly_shifted(n, shift),
            den: d,
        }
    }

    pub fn zero() -> RationalFn {
        RationalFn {
            num: LaurentPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> RationalFn {
        RationalFn {
            num: LaurentPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> RationalFn {
        RationalFn {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, rhs: &RationalFn) -> RationalFn {
        let d1 = LaurentPoly::from(&self.den);
        let d2 = LaurentPoly::from(&rhs.den);
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        RationalFn::new(num, &d1 * &d2)
    }

    pub fn sub(&self, rhs: &RationalFn) -> RationalFn {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RationalFn) -> RationalFn {
        let den = &LaurentPoly::from(&self.den) * &LaurentPoly::from(&rhs.den);
        RationalFn::new(&self.num * &rhs.num, den)
    }

    /// Multiplies by a Laurent polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly) -> RationalFn {
        RationalFn::new(&self.num * p, LaurentPoly::from(&self.den))
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}
