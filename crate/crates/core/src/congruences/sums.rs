//! Central-column prefix sums: the cyclotomic reduction of
//! `sum_(k<n) q^k qbin(2k, k+d)` to a single signed q-power, and its q = 1
//! shadow modulo primes at prime-power lengths.

use num_bigint::BigInt;
use num_traits::Zero;
use std::time::Instant;

use crate::congruences::report::{CongruenceReport, TableLine};
use crate::polyring::IntPoly;
use crate::qcore::arith::{binomial, is_prime, legendre};
use crate::qcore::cyclotomic::{
    reduce_int_mod_cyclotomic, reduce_scaled_mod_cyclotomic, CyclotomicResidue,
};
use crate::qcore::qbinomial::scan_central;
use crate::qobjects::s_sum;

/// Hard ceiling on prime-power lengths for the q = 1 sums: large enough to
/// exercise every prime several exponents deep, small enough that the exact
/// integer sums stay printable.
pub const PRIME_POWER_CAP: i64 = 343;

/// `(p, a, p^a)` for every prime `p <= p_max` and `1 <= a <= a_max` with
/// `p^a <= PRIME_POWER_CAP`, in increasing `(p, a)` order.
pub fn prime_powers(p_max: i64, a_max: u32) -> Vec<(i64, u32, i64)> {
    let mut out = Vec::new();
    for p in 2..=p_max.max(1) {
        if !is_prime(p) {
            continue;
        }
        let mut n = p;
        let mut a = 1u32;
        while a <= a_max && n <= PRIME_POWER_CAP {
            out.push((p, a, n));
            a += 1;
            match n.checked_mul(p) {
                Some(next) => n = next,
                None => break,
            }
        }
    }
    out
}

fn central_residue_expected(n: i64, d: i64) -> CyclotomicResidue {
    let leg = legendre(n - d.abs(), 3).expect("3 is an odd prime");
    let r = (2 * (n - d.abs())).div_euclid(3);
    let shift = 3 * r * (r + 1) / 2 + d.abs() * (2 * r + 1);
    reduce_scaled_mod_cyclotomic(&IntPoly::one(), &BigInt::from(leg), shift, n)
}

/// `sum_(k=0)^(n-1) q^k qbin(2k, k+d) ≡ legendre(n-|d|, 3) *
/// q^(3r(r+1)/2 + |d|(2r+1))` modulo `Phi_n`, where `r = floor(2(n-|d|)/3)`;
/// requires `n >= max(|d|, 2)`.
pub fn check_qc1(n: i64, d: i64) -> CongruenceReport {
    assert!(
        n >= d.abs().max(2),
        "central residue needs n >= max(|d|, 2)"
    );
    CongruenceReport::measure("qc1", n, &[("d", d)], || {
        let lhs = reduce_int_mod_cyclotomic(&s_sum(n, d), n);
        let rhs = central_residue_expected(n, d);
        (lhs == rhs, lhs.to_string(), rhs.to_string())
    })
}

/// All `qc1` rows for one shift `d`, `n = max(|d|, 2)..=n_max`, computed by
/// rolling the prefix sum forward across `n` so each summand is built once.
pub fn sweep_central_residue_for_d(d: i64, n_max: i64) -> Vec<CongruenceReport> {
    let start = d.abs().max(2);
    if start > n_max {
        return Vec::new();
    }
    let mut terms = vec![IntPoly::zero(); n_max as usize];
    scan_central(d, n_max - 1, |k, p| {
        terms[k as usize] = p.shift_up(k as usize);
    });
    let mut rows = Vec::new();
    let mut sum = IntPoly::zero();
    for n in 1..=n_max {
        let t0 = Instant::now();
        sum = &sum + &terms[(n - 1) as usize];
        if n < start {
            continue;
        }
        let lhs = reduce_int_mod_cyclotomic(&sum, n);
        let rhs = central_residue_expected(n, d);
        rows.push(CongruenceReport::from_parts(
            "qc1",
            n,
            &[("d", d)],
            lhs == rhs,
            lhs.to_string(),
            rhs.to_string(),
            t0.elapsed().as_secs_f64() * 1e3,
        ));
    }
    rows
}

/// One q = 1 table line: `sum_(k=0)^(p^a - 1) binom(2k, k+d)` against
/// `legendre(p^a - |d|, 3)` modulo `p`; requires `p` prime, `a >= 1`,
/// `|d| <= p^a`.
pub fn p_binomial_line(p: i64, a: u32, d: i64) -> TableLine {
    assert!(is_prime(p) && a >= 1, "needs a prime power");
    let n: i64 = (0..a).fold(1, |acc, _| acc * p);
    assert!(d.abs() <= n, "shift must not exceed the prime power");
    let mut sum = BigInt::zero();
    for k in 0..n {
        sum += binomial(2 * k, k + d);
    }
    let target = legendre(n - d.abs(), 3).expect("3 is an odd prime");
    TableLine::new(p, a, n, Some(d), "sum binom(2k, k+d)", &sum, p, target)
}

/// [`p_binomial_line`] wrapped as a report row.
pub fn check_p_binomial(p: i64, a: u32, d: i64) -> CongruenceReport {
    let t0 = Instant::now();
    let line = p_binomial_line(p, a, d);
    CongruenceReport::from_parts(
        "p-binomial",
        line.n,
        &[("p", p), ("a", a as i64), ("d", d)],
        line.holds,
        format!("{} ≡ {} (mod {})", line.sum, line.residue, line.modulus),
        format!(
            "legendre({} - |{}|, 3) = {} ≡ {}",
            line.n, d, line.target, line.target_residue
        ),
        t0.elapsed().as_secs_f64() * 1e3,
    )
}

/// The full q = 1 table over primes `p <= p_max`, exponents up to `a_max`
/// (capped by [`PRIME_POWER_CAP`]), shifts `|d| <= min(p^a, d_cap)`.
pub fn p_binomial_table(p_max: i64, a_max: u32, d_cap: i64) -> Vec<TableLine> {
    let mut out = Vec::new();
    for (p, a, n) in prime_powers(p_max, a_max) {
        let cap = d_cap.min(n);
        for d in -cap..=cap {
            out.push(p_binomial_line(p, a, d));
        }
    }
    out
}
