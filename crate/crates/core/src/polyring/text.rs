//! Canonical text form for polynomials: ascending terms like
//! `1 - q + 2*q^3` or `q^-2 + 1`.
//!
//! Rendering and parsing are exact inverses on canonical output, including
//! arbitrarily large coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{QError, QResult};
use crate::polyring::laurent::LaurentPoly;

/// Writes `coeffs` (ascending from `min_exp`) in canonical text form.
pub(crate) fn render_terms(
    f: &mut fmt::Formatter<'_>,
    min_exp: i64,
    coeffs: &[BigInt],
) -> fmt::Result {
    let mut wrote_any = false;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = min_exp + i as i64;
        if wrote_any {
            write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
        } else if c.is_negative() {
            write!(f, "-")?;
        }
        let mag = c.abs();
        if e == 0 {
            write!(f, "{mag}")?;
        } else {
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        wrote_any = true;
    }
    if !wrote_any {
        write!(f, "0")?;
    }
    Ok(())
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn digits(&mut self) -> QResult<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(QError::Parse(format!("expected digits at byte {start}")));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    /// Parses `q` or `q^<signed int>`; the caller has already seen `q`.
    fn exponent(&mut self) -> QResult<i64> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.bump();
        let neg = match self.peek() {
            Some(b'-') => {
                self.bump();
                true
            }
            Some(b'+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let digits = self.digits()?;
        let mag: i64 = digits
            .parse()
            .map_err(|_| QError::Parse(format!("exponent {digits} out of range")))?;
        Ok(if neg { -mag } else { mag })
    }
}

/// Parses the canonical text form, tolerating arbitrary whitespace between
/// tokens. Accepts non-canonical term order and repeated exponents, which
/// are accumulated.
pub fn parse_laurent(s: &str) -> QResult<LaurentPoly> {
    let mut sc = Scanner::new(s);
    let mut acc = LaurentPoly::zero();
    sc.skip_ws();
    if sc.peek().is_none() {
        return Err(QError::Parse("empty input".into()));
    }
    let mut sign: i64 = 1;
    if sc.peek() == Some(b'-') {
        sc.bump();
        sign = -1;
        sc.skip_ws();
    } else if sc.peek() == Some(b'+') {
        sc.bump();
        sc.skip_ws();
    }
    loop {
        // One term: INT, INT * qpow, or qpow.
        let (coeff, exp) = match sc.peek() {
            Some(b) if b.is_ascii_digit() => {
                let digits = sc.digits()?;
                let c: BigInt = digits.parse().unwrap();
                sc.skip_ws();
                if sc.peek() == Some(b'*') {
                    sc.bump();
                    sc.skip_ws();
                    if sc.bump() != Some(b'q') {
                        return Err(QError::Parse("expected q after *".into()));
                    }
                    let e = sc.exponent()?;
                    (c, e)
                } else {
                    (c, 0)
                }
            }
            Some(b'q') => {
                sc.bump();
                let e = sc.exponent()?;
                (BigInt::one(), e)
            }
            other => {
                return Err(QError::Parse(format!(
                    "unexpected token {:?} at byte {}",
                    other.map(char::from),
                    sc.pos
                )))
            }
        };
        acc.add_term(&(coeff * sign), exp);
        sc.skip_ws();
        match sc.bump() {
            None => break,
            Some(b'+') => sign = 1,
            Some(b'-') => sign = -1,
            Some(b) => {
                return Err(QError::Parse(format!(
                    "unexpected {:?} between terms",
                    char::from(b)
                )))
            }
        }
        sc.skip_ws();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::int_poly::IntPoly;

    fn lp(min: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_parts(min, coeffs.to_vec())
    }

    #[test]
    fn renders_canonical_forms() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp(0, &[1, -1, 0, 2]).to_string(), "1 - q + 2*q^3");
        assert_eq!(lp(-2, &[1, 0, 1]).to_string(), "q^-2 + 1");
        assert_eq!(lp(0, &[-1, -1]).to_string(), "-1 - q");
        assert_eq!(lp(-1, &[-1, 0, 0, 3]).to_string(), "-q^-1 + 3*q^2");
        assert_eq!(IntPoly::from_coeffs(vec![0, 5]).to_string(), "5*q");
    }

    #[test]
    fn parses_what_it_renders() {
        let cases = [
            lp(0, &[1, -1, 0, 2]),
            lp(-2, &[1, 0, 1]),
            lp(0, &[-1, -1]),
            lp(-7, &[3]),
            lp(0, &[42]),
            LaurentPoly::zero(),
            lp(-1, &[-1, 0, 0, 3]),
        ];
        for p in cases {
            let text = p.to_string();
            let back = parse_laurent(&text).unwrap();
            assert_eq!(back, p, "round trip of {text:?}");
            assert_eq!(back.to_string(), text);
        }
    }

    #[test]
    fn parses_loose_input() {
        assert_eq!(parse_laurent("1-q").unwrap(), lp(0, &[1, -1]));
        assert_eq!(parse_laurent("  +q^+2 ").unwrap(), lp(2, &[1]));
        assert_eq!(parse_laurent("q + q").unwrap(), lp(1, &[2]));
        assert_eq!(parse_laurent("3*q^2 + 1").unwrap(), lp(0, &[1, 0, 3]));
        let big = "123456789123456789123456789";
        assert_eq!(
            parse_laurent(&format!("{big}*q^-3")).unwrap(),
            LaurentPoly::monomial(big.parse::<BigInt>().unwrap(), -3)
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "q^", "1 +", "* q", "2q", "q**2", "1 ? q", "^3"] {
            assert!(parse_laurent(bad).is_err(), "{bad:?} should not parse");
        }
    }
}
