//! Root-of-unity evaluations of the central-left sums: the alternating sum
//! with inverse-triangular q-powers and its unsigned companion, checked two
//! independent ways. Exactly, the sums reduce modulo `Phi_n` to a Legendre
//! constant or to a Gauss-sum polynomial; numerically, every primitive n-th
//! root is substituted through a multiplicative evaluation of Gaussian
//! binomials and compared against the closed constant within a tolerance.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::congruences::report::CongruenceReport;
use crate::polyring::LaurentPoly;
use crate::qcore::arith::{binomial, gauss_poly, legendre};
use crate::qcore::cyclotomic::reduce_mod_cyclotomic;
use crate::qobjects::{dual_lhs, gk_lhs};

/// Powers `omega^0..omega^(n-1)` of `omega = exp(2*pi*i*m/n)`, with every
/// angle reduced modulo `n` before trigonometry so large exponents lose no
/// precision.
pub(crate) fn unit_root_powers(n: i64, m: i64) -> Vec<Complex64> {
    (0..n)
        .map(|j| {
            let angle = std::f64::consts::TAU * ((m * j).rem_euclid(n) as f64) / (n as f64);
            Complex64::from_polar(1.0, angle)
        })
        .collect()
}

/// Residues `1 <= m < n` coprime to `n`: the primitive root exponents.
pub(crate) fn coprime_residues(n: i64) -> Vec<i64> {
    (1..n).filter(|&m| num_integer::gcd(m, n) == 1).collect()
}

/// `qbin(big, k)` evaluated at the root of unity `powers[1]` of order `ord`,
/// factored through the base-`ord` carry structure: the quotient indices
/// contribute an ordinary binomial coefficient, the remainder indices a
/// short product of nonvanishing cyclotomic-free factors. Exact zeros are
/// detected structurally rather than by cancellation.
pub(crate) fn qbin_at_root(big: i64, k: i64, ord: i64, powers: &[Complex64]) -> Complex64 {
    if k < 0 || k > big {
        return Complex64::new(0.0, 0.0);
    }
    let (nq, nr) = (big.div_euclid(ord), big.rem_euclid(ord));
    let (kq, kr) = (k.div_euclid(ord), k.rem_euclid(ord));
    if kr > nr {
        return Complex64::new(0.0, 0.0);
    }
    let top = binomial(nq, kq)
        .to_f64()
        .expect("quotient binomial fits in f64 exactly at these ranges");
    let mut v = Complex64::new(top, 0.0);
    let one = Complex64::new(1.0, 0.0);
    for i in 1..=kr {
        let e = (nr - kr + i).rem_euclid(ord);
        v *= (one - powers[e as usize]) / (one - powers[i as usize]);
    }
    v
}

pub(crate) fn fmt_complex(z: Complex64) -> String {
    format!("{:.9}{:+.9}i", z.re, z.im)
}

/// Exact form of the alternating central-left sum at index `n >= 2`:
/// `1 + 2 sum_(k=1)^(n-1) (-1)^k q^(-binom(k,2)) qbin(2k-1, k)` reduces
/// modulo `Phi_n` to the Gauss-sum polynomial for 5 when `5 | n` and to the
/// constant `legendre(n, 5)` otherwise.
pub fn check_gk(n: i64) -> CongruenceReport {
    assert!(n >= 2, "root-of-unity sums need n >= 2");
    CongruenceReport::measure("gk", n, &[], || {
        let lhs = reduce_mod_cyclotomic(&gk_lhs(n), n);
        let rhs = expected_root_sum(n, 5);
        let rhs = reduce_mod_cyclotomic(&rhs, n);
        (lhs == rhs, lhs.to_string(), rhs.to_string())
    })
}

/// Exact form of the unsigned companion sum at index `n >= 2`:
/// `1 + 2 sum_(k=1)^(n-1) q^k qbin(2k-1, k)` reduces modulo `Phi_n` to the
/// Gauss-sum polynomial for 3 when `3 | n` and to `legendre(n, 3)` otherwise.
pub fn check_dual(n: i64) -> CongruenceReport {
    assert!(n >= 2, "root-of-unity sums need n >= 2");
    CongruenceReport::measure("dual", n, &[], || {
        let lhs = reduce_mod_cyclotomic(&LaurentPoly::from(&dual_lhs(n)), n);
        let rhs = expected_root_sum(n, 3);
        let rhs = reduce_mod_cyclotomic(&rhs, n);
        (lhs == rhs, lhs.to_string(), rhs.to_string())
    })
}

fn expected_root_sum(n: i64, p: i64) -> LaurentPoly {
    if n % p == 0 {
        LaurentPoly::from(&gauss_poly(n, p).expect("p is an odd prime dividing n"))
    } else {
        LaurentPoly::monomial(legendre(n, p).expect("p is an odd prime"), 0)
    }
}

/// Numeric counterpart of [`check_gk`] at `omega = exp(2*pi*i*m/n)` for one
/// `m` coprime to `n`: the sum must land within `tol` of
/// `legendre(m, 5) * sqrt(5)` when `5 | n` and of `legendre(n, 5)` otherwise.
pub fn check_gk_numeric(n: i64, m: i64, tol: f64) -> CongruenceReport {
    assert!(n >= 2 && tol > 0.0);
    CongruenceReport::measure("gk-numeric", n, &[("m", m)], || {
        let powers = unit_root_powers(n, m);
        let mut lhs = Complex64::new(1.0, 0.0);
        for k in 1..n {
            let sign = if k % 2 == 0 { 2.0 } else { -2.0 };
            let shift = (-(k * (k - 1) / 2)).rem_euclid(n);
            lhs += sign * powers[shift as usize] * qbin_at_root(2 * k - 1, k, n, &powers);
        }
        let expected = if n % 5 == 0 {
            Complex64::new(
                legendre(m, 5).expect("5 is an odd prime") as f64 * 5f64.sqrt(),
                0.0,
            )
        } else {
            Complex64::new(legendre(n, 5).expect("5 is an odd prime") as f64, 0.0)
        };
        let err = (lhs - expected).norm();
        (
            err <= tol,
            fmt_complex(lhs),
            format!(
                "{} (|diff| = {:.3e}, tol {:.1e})",
                fmt_complex(expected),
                err,
                tol
            ),
        )
    })
}

/// Numeric counterpart of [`check_dual`]: within `tol` of
/// `legendre(m, 3) * i * sqrt(3)` when `3 | n`, of `legendre(n, 3)` otherwise.
pub fn check_dual_numeric(n: i64, m: i64, tol: f64) -> CongruenceReport {
    assert!(n >= 2 && tol > 0.0);
    CongruenceReport::measure("dual-numeric", n, &[("m", m)], || {
        let powers = unit_root_powers(n, m);
        let mut lhs = Complex64::new(1.0, 0.0);
        for k in 1..n {
            lhs += 2.0 * powers[(k % n) as usize] * qbin_at_root(2 * k - 1, k, n, &powers);
        }
        let expected = if n % 3 == 0 {
            Complex64::new(
                0.0,
                legendre(m, 3).expect("3 is an odd prime") as f64 * 3f64.sqrt(),
            )
        } else {
            Complex64::new(legendre(n, 3).expect("3 is an odd prime") as f64, 0.0)
        };
        let err = (lhs - expected).norm();
        (
            err <= tol,
            fmt_complex(lhs),
            format!(
                "{} (|diff| = {:.3e}, tol {:.1e})",
                fmt_complex(expected),
                err,
                tol
            ),
        )
    })
}

/// All numeric rows at index `n`: one per residue `m` coprime to `n`.
pub fn gk_numeric_rows(n: i64, tol: f64) -> Vec<CongruenceReport> {
    coprime_residues(n)
        .into_iter()
        .map(|m| check_gk_numeric(n, m, tol))
        .collect()
}

/// All numeric rows of the unsigned companion at index `n`.
pub fn dual_numeric_rows(n: i64, tol: f64) -> Vec<CongruenceReport> {
    coprime_residues(n)
        .into_iter()
        .map(|m| check_dual_numeric(n, m, tol))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::qbinomial::q_binomial;

    #[test]
    fn multiplicative_evaluation_matches_direct_substitution() {
        for n in [2i64, 3, 5, 7, 12] {
            for m in coprime_residues(n) {
                let powers = unit_root_powers(n, m);
                for big in 0..=12i64 {
                    for k in 0..=big {
                        let direct =
                            LaurentPoly::from(&q_binomial(big, k)).eval_root_of_unity(m, n);
                        let factored = qbin_at_root(big, k, n, &powers);
                        assert!(
                            (direct - factored).norm() < 1e-9,
                            "qbin({big}, {k}) at m={m}, n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn structural_zeros_are_exact() {
        let powers = unit_root_powers(6, 1);
        assert_eq!(qbin_at_root(7, 2, 6, &powers).norm(), 0.0); // 2 mod 6 > 7 mod 6
        assert_eq!(qbin_at_root(3, 5, 6, &powers).norm(), 0.0); // out of range
    }

    #[test]
    fn exact_sums_reduce_to_constants_or_gauss_polynomials() {
        for n in 2..=30 {
            let gk = check_gk(n);
            assert!(gk.holds, "gk n={n}: {} vs {}", gk.lhs, gk.rhs);
            let dual = check_dual(n);
            assert!(dual.holds, "dual n={n}: {} vs {}", dual.lhs, dual.rhs);
        }
        // Away from multiples of 5 the reduced sum is a plain constant.
        assert_eq!(check_gk(4).lhs, "1"); // legendre(4, 5) = 1
        assert_eq!(check_gk(7).lhs, "-1"); // legendre(7, 5) = -1
        assert_eq!(check_dual(5).lhs, "-1"); // legendre(5, 3) = -1
    }

    #[test]
    fn numeric_sums_match_their_constants_tightly() {
        for n in 2..=20 {
            for row in gk_numeric_rows(n, 1e-6) {
                assert!(row.holds, "gk n={n} m={}: {}", row.params["m"], row.rhs);
            }
            for row in dual_numeric_rows(n, 1e-6) {
                assert!(row.holds, "dual n={n} m={}: {}", row.params["m"], row.rhs);
            }
        }
    }
}
