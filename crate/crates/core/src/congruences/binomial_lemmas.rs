//! Reduction lemmas for Gaussian binomials modulo a cyclotomic polynomial.
//!
//! Five families: stretched rows `qbin(a*n, k)` collapse to ordinary
//! binomial coefficients, the row just past the modulus collapses to an
//! indicator pattern, and the three central-column families `qbin(2k-1, k)`,
//! `qbin(2k, k)`, `qbin(2k, k+1)` fold back onto antidiagonal entries with
//! explicit signs and q-powers. Each family has a single-instance checker
//! and a per-`n` row that aggregates over all admissible `k`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::congruences::report::{CongruenceReport, RowAggregate};
use crate::polyring::IntPoly;
use crate::qcore::arith::binomial;
use crate::qcore::cyclotomic::{
    reduce_int_mod_cyclotomic, reduce_scaled_mod_cyclotomic, CyclotomicResidue,
};
use crate::qcore::qbinomial::{
    qbin_shared, scan_antidiagonal, scan_central, scan_central_left, scan_row,
};

fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn constant_residue(c: BigInt, n: i64) -> CyclotomicResidue {
    reduce_int_mod_cyclotomic(&IntPoly::constant(c), n)
}

fn bc1_expected(n: i64, a: i64, k: i64) -> CyclotomicResidue {
    let c = if k % n == 0 {
        binomial(a, k / n)
    } else {
        BigInt::zero()
    };
    constant_residue(c, n)
}

/// `qbin(a*n, k) ≡ binom(a, k/n)` modulo `Phi_n` when `n | k`, else `≡ 0`;
/// requires `n >= 2`, `a >= 1`, `0 <= k <= a*n`.
pub fn check_bc1(n: i64, a: i64, k: i64) -> CongruenceReport {
    CongruenceReport::measure("bc1", n, &[("a", a), ("k", k)], || {
        let lhs = reduce_int_mod_cyclotomic(&qbin_shared(a * n, k), n);
        let rhs = bc1_expected(n, a, k);
        (lhs == rhs, lhs.to_string(), rhs.to_string())
    })
}

/// One row of [`check_bc1`] aggregated over `k = 0..=a*n`.
pub fn bc1_row(n: i64, a: i64) -> CongruenceReport {
    assert!(n >= 2 && a >= 1, "stretched-row lemma needs n >= 2, a >= 1");
    CongruenceReport::measure("bc1", n, &[("a", a)], || {
        let mut agg = RowAggregate::new();
        scan_row(a * n, a * n, |k, p| {
            let lhs = reduce_int_mod_cyclotomic(p, n);
            let rhs = bc1_expected(n, a, k);
            let ok = lhs == rhs;
            agg.record(k, ok, || lhs.to_string(), || rhs.to_string());
        });
        agg.finish(
            format!("qbin({}, k) mod Phi_{n}, k = 0..={}", a * n, a * n),
            format!("binom({a}, k/{n}) at multiples of {n}, else 0"),
        )
    })
}

fn bc2_expected(n: i64, k: i64) -> BigInt {
    if k == 0 || k == 1 || k == n || k == n + 1 {
        BigInt::from(1)
    } else {
        BigInt::zero()
    }
}

/// `qbin(n+1, k) ≡ 1` modulo `Phi_n` for `k` in `{0, 1, n, n+1}`, else `≡ 0`;
/// requires `n >= 2`, `0 <= k <= n+1`.
pub fn check_bc2(n: i64, k: i64) -> CongruenceReport {
    CongruenceReport::measure("bc2", n, &[("k", k)], || {
        let lhs = reduce_int_mod_cyclotomic(&qbin_shared(n + 1, k), n);
        let rhs = constant_residue(bc2_expected(n, k), n);
        (lhs == rhs, lhs.to_string(), rhs.to_string())
    })
}

/// One row of [`check_bc2`] aggregated over `k = 0..=n+1`.
pub fn bc2_row(n: i64) -> CongruenceReport {
    assert!(n >= 2, "near-diagonal row lemma needs n >= 2");
    CongruenceReport::measure("bc2", n, &[], || {
        let mut agg = RowAggregate::new();
        scan_row(n + 1, n + 1, |k, p| {
            let lhs = reduce_int_mod_cyclotomic(p, n);
            let rhs = constant_residue(bc2_expected(n, k), n);
            let ok = lhs == rhs;
            agg.record(k, ok, || lhs.to_string(), || rhs.to_string());
        });
        agg.finish(
            format!("qbin({}, k) mod Phi_{n}, k = 0..={}", n + 1, n + 1),
            format!("1 at k in {{0, 1, {n}, {}}}, else 0", n + 1),
        )
    })
}

/// `qbin(2k-1, k) ≡ (-1)^k q^((3k^2-k)/2) qbin(n-k, k)` modulo `Phi_n` for
/// `1 <= k <= n-1`, `n >= 2`.
pub fn check_bc3(n: i64, k: i64) -> CongruenceReport {
    CongruenceReport::measure("bc3", n, &[("k", k)], || {
        let lhs = reduce_int_mod_cyclotomic(&qbin_shared(2 * k - 1, k), n);
        let rhs = reduce_scaled_mod_cyclotomic(&qbin_shared(n - k, k), &sign(k), bc3_shift(k), n);
        (lhs == rhs, lhs.to_string(), rhs.to_string())
    })
}

fn bc3_shift(k: i64) -> i64 {
    (3 * k * k - k) / 2
}

/// `qbin(2k, k) ≡ (-1)^k q^((3k^2+k)/2) qbin(n-1-k, k)` modulo `Phi_n` for
/// `0 <= k <= n-1`, `n >= 2`.
pub fn check_bc4(n: i64, k: i64) -> CongruenceReport {
    CongruenceReport::measure("bc4", n, &[("k", k)], || {
        let lhs = reduce_int_mod_cyclotomic(&qbin_shared(2 * k, k), n);
        let rhs =
            reduce_scaled_mod_cyclotomic(&qbin_shared(n - 1 - k, k), &sign(k), bc4_shift(k), n);
        (lhs == rhs, lhs.to_string(), rhs.to_string())
    })
}

fn bc4_shift(k: i64) -> i64 {
    (3 * k * k + k) / 2
}

/// `qbin(2k, k+1) ≡ (-1)^(k+1) q^((3k^2+3k)/2) qbin(n-k, k+1)` modulo
/// `Phi_n` for `0 <= k <= n-2`, and `≡ 1` at `k = n-1`; requires `n >= 2`.
pub fn check_bc5(n: i64, k: i64) -> CongruenceReport {
    CongruenceReport::measure("bc5", n, &[("k", k)], || {
        let lhs = reduce_int_mod_cyclotomic(&qbin_shared(2 * k, k + 1), n);
        let rhs = bc5_expected(n, k);
        (lhs == rhs, lhs.to_string(), rhs.to_string())
    })
}

fn bc5_shift(k: i64) -> i64 {
    (3 * k * k + 3 * k) / 2
}

fn bc5_expected(n: i64, k: i64) -> CyclotomicResidue {
    if k == n - 1 {
        constant_residue(BigInt::from(1), n)
    } else {
        reduce_scaled_mod_cyclotomic(&qbin_shared(n - k, k + 1), &sign(k + 1), bc5_shift(k), n)
    }
}

/// Rows for the three central-column lemmas, aggregated over their `k`
/// ranges, as `[bc3, bc4, bc5]` for this `n`. One antidiagonal walk feeds
/// each right-hand side, one central walk each left-hand side.
pub fn central_lemma_rows(n: i64) -> Vec<CongruenceReport> {
    assert!(n >= 2, "central-column lemmas need n >= 2");
    let zero = constant_residue(BigInt::zero(), n);

    let bc3 = CongruenceReport::measure("bc3", n, &[], || {
        let mut rhs: Vec<CyclotomicResidue> = Vec::new();
        scan_antidiagonal(n, |k, p| {
            rhs.push(reduce_scaled_mod_cyclotomic(p, &sign(k), bc3_shift(k), n));
        });
        let mut agg = RowAggregate::new();
        scan_central_left(n - 1, |k, p| {
            let lhs = reduce_int_mod_cyclotomic(p, n);
            let expected = rhs.get(k as usize).unwrap_or(&zero);
            let ok = lhs == *expected;
            agg.record(k, ok, || lhs.to_string(), || expected.to_string());
        });
        agg.finish(
            format!("qbin(2k-1, k) mod Phi_{n}, k = 1..={}", n - 1),
            format!("(-1)^k q^((3k^2-k)/2) qbin({n}-k, k) mod Phi_{n}"),
        )
    });

    let bc4 = CongruenceReport::measure("bc4", n, &[], || {
        let mut rhs: Vec<CyclotomicResidue> = Vec::new();
        scan_antidiagonal(n - 1, |k, p| {
            rhs.push(reduce_scaled_mod_cyclotomic(p, &sign(k), bc4_shift(k), n));
        });
        let mut agg = RowAggregate::new();
        scan_central(0, n - 1, |k, p| {
            let lhs = reduce_int_mod_cyclotomic(p, n);
            let expected = rhs.get(k as usize).unwrap_or(&zero);
            let ok = lhs == *expected;
            agg.record(k, ok, || lhs.to_string(), || expected.to_string());
        });
        agg.finish(
            format!("qbin(2k, k) mod Phi_{n}, k = 0..={}", n - 1),
            format!("(-1)^k q^((3k^2+k)/2) qbin({}-k, k) mod Phi_{n}", n - 1),
        )
    });

    let bc5 = CongruenceReport::measure("bc5", n, &[], || {
        // Antidiagonal of n+1 at index j = k+1 is qbin(n-k, k+1).
        let mut rhs: Vec<CyclotomicResidue> = Vec::new();
        scan_antidiagonal(n + 1, |j, p| {
            rhs.push(reduce_scaled_mod_cyclotomic(
                p,
                &sign(j),
                bc5_shift(j - 1),
                n,
            ));
        });
        let one = constant_residue(BigInt::from(1), n);
        let mut agg = RowAggregate::new();
        let mut check = |k: i64, lhs: CyclotomicResidue| {
            let expected = if k == n - 1 {
                &one
            } else {
                rhs.get((k + 1) as usize).unwrap_or(&zero)
            };
            let ok = lhs == *expected;
            agg.record(k, ok, || lhs.to_string(), || expected.to_string());
        };
        check(0, zero.clone());
        scan_central(1, n - 1, |k, p| check(k, reduce_int_mod_cyclotomic(p, n)));
        agg.finish(
            format!("qbin(2k, k+1) mod Phi_{n}, k = 0..={}", n - 1),
            format!(
                "(-1)^(k+1) q^((3k^2+3k)/2) qbin({n}-k, k+1) mod Phi_{n}; 1 at k = {}",
                n - 1
            ),
        )
    });

    vec![bc3, bc4, bc5]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::qbinomial::q_binomial;

    #[test]
    fn stretched_rows_collapse_to_ordinary_binomials() {
        for n in 2..=12 {
            for a in 1..=3 {
                let row = bc1_row(n, a);
                assert!(row.holds, "n={n} a={a}: {} vs {}", row.lhs, row.rhs);
            }
        }
        let single = check_bc1(3, 2, 3);
        assert!(single.holds);
        assert_eq!(single.lhs, "2"); // binom(2, 1)
        assert!(check_bc1(4, 2, 5).holds); // non-multiple of n reduces to zero
    }

    #[test]
    fn near_diagonal_row_is_an_indicator_pattern() {
        for n in 2..=14 {
            let row = bc2_row(n);
            assert!(row.holds, "n={n}: {} vs {}", row.lhs, row.rhs);
        }
        assert_eq!(check_bc2(5, 1).lhs, "1");
        assert_eq!(check_bc2(5, 3).lhs, "0");
    }

    #[test]
    fn central_columns_fold_onto_antidiagonals() {
        for n in 2..=14 {
            for row in central_lemma_rows(n) {
                assert!(row.holds, "n={n} {}: {} vs {}", row.claim, row.lhs, row.rhs);
            }
        }
        assert!(check_bc3(5, 2).holds);
        assert!(check_bc4(7, 3).holds);
        assert!(check_bc5(7, 6).holds); // boundary case reduces to 1
        assert!(check_bc5(7, 0).holds); // both sides vanish
    }

    #[test]
    fn aggregated_rows_agree_with_single_instance_checks() {
        let n = 9;
        for a in 1..=2 {
            for k in 0..=(a * n) {
                assert!(check_bc1(n, a, k).holds, "a={a} k={k}");
            }
        }
        for k in 0..=(n + 1) {
            assert!(check_bc2(n, k).holds, "k={k}");
        }
        for k in 1..n {
            assert!(check_bc3(n, k).holds, "k={k}");
        }
        for k in 0..n {
            assert!(check_bc4(n, k).holds, "k={k}");
            assert!(check_bc5(n, k).holds, "k={k}");
        }
    }

    #[test]
    fn cyclotomic_divides_binomial_iff_remainders_jump() {
        // Phi_n | qbin(m, k) exactly when k mod n exceeds m mod n; checked
        // against honest reduction over the full grid.
        for m in 0..=60i64 {
            let row: Vec<IntPoly> = (0..=m).map(|k| q_binomial(m, k)).collect();
            for n in 2..=30i64 {
                for (k, p) in row.iter().enumerate() {
                    let divides = reduce_int_mod_cyclotomic(p, n).is_zero();
                    let jump = (k as i64).rem_euclid(n) > m.rem_euclid(n);
                    assert_eq!(divides, jump, "m={m} k={k} n={n}");
                }
            }
        }
    }
}
