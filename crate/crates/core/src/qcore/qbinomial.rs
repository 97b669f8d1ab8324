//! q-integers, q-Pochhammer symbols, and Gaussian binomial coefficients.
//!
//! `q_binomial` is the general entry point: Pascal recurrence with a shared
//! memo table for arguments small enough to memoize, product formula beyond
//! that (a full memo triangle at n ~ 300 costs gigabytes, so large arguments
//! stay off the table). Sweeps that need many related coefficients use the
//! `scan_*` walkers, which move between adjacent coefficients with two O(deg)
//! passes instead of recomputing from scratch.

use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::polyring::{IntPoly, LaurentPoly, RationalFn};

/// The q-integer `[m]_q = (1 - q^m)/(1 - q)` as a canonical rational
/// function. For every integer `m` this is in fact a Laurent polynomial;
/// see [`q_int_poly`] for the direct form.
pub fn q_int(m: i64) -> RationalFn {
    if m == 0 {
        return RationalFn::zero();
    }
    RationalFn::new(LaurentPoly::one_minus_pow(m), LaurentPoly::one_minus_pow(1))
}

/// `[m]_q` as a Laurent polynomial: `1 + q + ... + q^(m-1)` for `m >= 0`,
/// and `-(q^m + ... + q^-1)` for `m < 0`.
pub fn q_int_poly(m: i64) -> LaurentPoly {
    use std::cmp::Ordering::*;
    match m.cmp(&0) {
        Equal => LaurentPoly::zero(),
        Greater => LaurentPoly::from_parts(0, vec![BigInt::from(1); m as usize]),
        Less => LaurentPoly::from_parts(m, vec![BigInt::from(-1); (-m) as usize]),
    }
}

/// The q-Pochhammer symbol `(q; q)_n`, the product of `1 - q^j` for
/// `j = 1..=n`. Requires `n >= 0`; `(q; q)_0 = 1`.
pub fn q_pochhammer(n: i64) -> IntPoly {
    assert!(n >= 0, "q_pochhammer requires n >= 0");
    let mut p = IntPoly::one();
    for j in 1..=n {
        p.mul_one_minus_pow(j as usize);
    }
    p
}

const QBIN_MEMO_LIMIT: i64 = 128;

type QbinMemo = RwLock<HashMap<(i64, i64), Arc<IntPoly>>>;

fn qbin_memo() -> &'static QbinMemo {
    static MEMO: OnceLock<QbinMemo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn qbin_pascal(n: i64, k: i64) -> Arc<IntPoly> {
    // Symmetric key halves the table; the two arguments are the same
    // polynomial.
    let k = k.min(n - k);
    if k == 0 {
        return Arc::new(IntPoly::one());
    }
    if let Some(hit) = qbin_memo().read().unwrap().get(&(n, k)) {
        return hit.clone();
    }
    let left = qbin_pascal(n - 1, k - 1);
    let right = qbin_pascal(n - 1, k);
    let value = &*left + &right.shift_up(k as usize);
    let value = Arc::new(value);
    qbin_memo()
        .write()
        .unwrap()
        .entry((n, k))
        .or_insert_with(|| value.clone());
    value
}

/// The Gaussian binomial coefficient as a polynomial in `q`. Zero outside
/// `0 <= k <= n`; degree `k(n - k)` inside. `eval_one` recovers the ordinary
/// binomial coefficient.
pub fn q_binomial(n: i64, k: i64) -> IntPoly {
    (*qbin_shared(n, k)).clone()
}

/// Shared-ownership variant of [`q_binomial`] for summation loops that only
/// read the coefficient: memoized arguments come back without a copy.
pub(crate) fn qbin_shared(n: i64, k: i64) -> Arc<IntPoly> {
    if k < 0 || n < 0 || k > n {
        return Arc::new(IntPoly::zero());
    }
    if n <= QBIN_MEMO_LIMIT {
        qbin_pascal(n, k)
    } else {
        Arc::new(q_binomial_by_product(n, k))
    }
}

/// Independent product-formula route: multiply `1 - q^(n-k+i)` and divide
/// exactly by `1 - q^i` for `i = 1..=k`. Every partial product is itself a
/// Gaussian binomial, so each division is exact.
pub fn q_binomial_by_product(n: i64, k: i64) -> IntPoly {
    if k < 0 || n < 0 || k > n {
        return IntPoly::zero();
    }
    let k = k.min(n - k);
    let mut r = IntPoly::one();
    for i in 1..=k {
        r.mul_one_minus_pow((n - k + i) as usize);
        r.div_one_minus_pow_exact(i as usize)
            .expect("partial q-binomial product must stay polynomial");
    }
    r
}

/// Walks row `n` of the Gaussian triangle, calling `f(k, qbin(n, k))` for
/// `k = 0..=k_max`. Requires `0 <= k_max <= n`.
pub(crate) fn scan_row(n: i64, k_max: i64, mut f: impl FnMut(i64, &IntPoly)) {
    assert!(n >= 0 && (0..=n).contains(&k_max), "scan_row range");
    let mut poly = IntPoly::one();
    f(0, &poly);
    for k in 0..k_max {
        poly.mul_one_minus_pow((n - k) as usize);
        poly.div_one_minus_pow_exact((k + 1) as usize)
            .expect("row step must stay polynomial");
        f(k + 1, &poly);
    }
}

/// Walks the antidiagonal `m + k = top`, calling `f(k, qbin(top - k, k))`
/// for `k = 0..` as long as `k <= top - k` (the nonzero stretch). No calls
/// when `top < 0`.
pub(crate) fn scan_antidiagonal(top: i64, mut f: impl FnMut(i64, &IntPoly)) {
    if top < 0 {
        return;
    }
    let mut poly = IntPoly::one();
    let mut k = 0i64;
    loop {
        f(k, &poly);
        if 2 * (k + 1) > top {
            return;
        }
        let m = top - k;
        // (m, k) -> (m-1, k): strip the top Pochhammer factor.
        poly.mul_one_minus_pow((m - k) as usize);
        poly.div_one_minus_pow_exact(m as usize)
            .expect("antidiagonal step must stay polynomial");
        // (m-1, k) -> (m-1, k+1): ordinary row step.
        poly.mul_one_minus_pow((m - 1 - k) as usize);
        poly.div_one_minus_pow_exact((k + 1) as usize)
            .expect("antidiagonal step must stay polynomial");
        k += 1;
    }
}

/// Walks the central band, calling `f(k, qbin(2k, k + d))` for
/// `k = |d|..=k_max` (below `|d|` the coefficient is zero). No calls when
/// `k_max < |d|`.
pub(crate) fn scan_central(d: i64, k_max: i64, mut f: impl FnMut(i64, &IntPoly)) {
    let mut k = d.abs();
    if k > k_max {
        return;
    }
    let mut poly = IntPoly::one();
    loop {
        f(k, &poly);
        if k == k_max {
            return;
        }
        poly.mul_one_minus_pow((2 * k + 1) as usize);
        poly.div_one_minus_pow_exact((k + 1 - d) as usize)
            .expect("central step must stay polynomial");
        poly.mul_one_minus_pow((2 * k + 2) as usize);
        poly.div_one_minus_pow_exact((k + 1 + d) as usize)
            .expect("central step must stay polynomial");
        k += 1;
    }
}

/// Walks `f(k, qbin(2k - 1, k))` for `k = 1..=k_max`.
pub(crate) fn scan_central_left(k_max: i64, mut f: impl FnMut(i64, &IntPoly)) {
    if k_max < 1 {
        return;
    }
    let mut poly = IntPoly::one();
    let mut k = 1i64;
    loop {
        f(k, &poly);
        if k == k_max {
            return;
        }
        poly.mul_one_minus_pow((2 * k) as usize);
        poly.div_one_minus_pow_exact(k as usize)
            .expect("central-left step must stay polynomial");
        poly.mul_one_minus_pow((2 * k + 1) as usize);
        poly.div_one_minus_pow_exact((k + 1) as usize)
            .expect("central-left step must stay polynomial");
        k += 1;
    }
}
