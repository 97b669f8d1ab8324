//! Certificate-backed verification of the order-4 recurrence satisfied by
//! the shifted central Gaussian binomial terms, and of everything built on
//! top of it: telescoped tail sums, the boundary identity that closes the
//! induction for the central-sum transformation, and the three-step column
//! shift lemma.
//!
//! All checks cross-multiply by the certificate denominators, so every
//! comparison is between exact Laurent polynomials; no rational-function
//! reduction is trusted silently. The certificate is only defined where none
//! of its five denominator factors `1 - q^e` degenerates to zero (`e = 0`);
//! instances outside that domain are reported as errors by [`certificate`]
//! and are not part of any recurrence claim.

use num_bigint::BigInt;

use crate::congruences::report::{brief_int, brief_laurent, CongruenceReport};
use crate::error::{QError, QResult};
use crate::polyring::{IntPoly, LaurentPoly, RationalFn};
use crate::qcore::qbinomial::{q_int_poly, qbin_shared};
use crate::qobjects::{s_sum, t_sum};

/// The two admissible parameter pairs `(a, b)` of the certificate family:
/// `(3, 1)` for the nonnegative column offsets of the split central sum and
/// `(-3, -1)` for the negative ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificateParams {
    a: i64,
    b: i64,
}

impl CertificateParams {
    /// The `(a, b) = (3, 1)` family.
    pub const PLUS: CertificateParams = CertificateParams { a: 3, b: 1 };
    /// The `(a, b) = (-3, -1)` family.
    pub const MINUS: CertificateParams = CertificateParams { a: -3, b: -1 };

    /// Validates a parameter pair; only the two published families exist.
    pub fn new(a: i64, b: i64) -> QResult<Self> {
        match (a, b) {
            (3, 1) => Ok(Self::PLUS),
            (-3, -1) => Ok(Self::MINUS),
            _ => Err(QError::InvalidParameter(format!(
                "certificate family must be (3, 1) or (-3, -1), got ({a}, {b})"
            ))),
        }
    }

    pub fn a(self) -> i64 {
        self.a
    }

    pub fn b(self) -> i64 {
        self.b
    }

    fn report_params(self, extra: &[(&'static str, i64)]) -> Vec<(&'static str, i64)> {
        let mut params = extra.to_vec();
        params.push(("a", self.a));
        params.push(("b", self.b));
        params
    }
}

/// `s(n, k) = q^(6k^2 + a k) qbin(2n, n + 3k + b)`: the summand of the split
/// central sum. Zero exactly when `|3k + b| > n`; the q-power exponent
/// `6k^2 + a k = 3k(2k +- 1)` is nonnegative for every integer `k`.
pub fn s_term(n: i64, k: i64, fam: CertificateParams) -> IntPoly {
    assert!(n >= 0, "terms are indexed by n >= 0");
    let e = 6 * k * k + fam.a * k;
    qbin_shared(2 * n, n + 3 * k + fam.b).shift_up(e as usize)
}

/// Sums `c q^e` monomials into a plain polynomial; exponents must be
/// nonnegative here (the recurrence coefficients live in Z[q]).
fn signed_powers(terms: &[(i64, i64)]) -> IntPoly {
    let max = terms.iter().map(|&(_, e)| e).max().expect("nonempty");
    let mut coeffs = vec![BigInt::from(0); (max + 1) as usize];
    for &(c, e) in terms {
        assert!(e >= 0, "recurrence coefficients have nonnegative exponents");
        coeffs[e as usize] += c;
    }
    IntPoly::from_coeffs(coeffs)
}

/// The five polynomial coefficients `a_0 .. a_4` of the order-4 recurrence
/// in `n`. Only `a_1` mentions the family parameters, and there the two
/// exponents `4n + 7 +- (a - 4b)` form the same pair for both families; the
/// `aj-invariance` claim checks that coincidence rather than assuming it.
pub fn recurrence_coeffs(n: i64, fam: CertificateParams) -> [IntPoly; 5] {
    assert!(n >= 1, "the recurrence is indexed from n = 1");
    let (a, b) = (fam.a, fam.b);
    let mut a0 = IntPoly::one();
    a0.mul_one_minus_pow((2 * n + 1) as usize);
    a0.mul_one_minus_pow((2 * n + 2) as usize);
    let a0 = a0.shift_up(6);
    let a1 = signed_powers(&[
        (1, 4 * n + 7 + a - 4 * b),
        (1, 4 * n + 7 - a + 4 * b),
        (-1, 2 * n + 4),
        (-1, 2 * n + 3),
        (1, 3),
        (1, 2),
        (1, 1),
        (1, 0),
    ])
    .scalar_mul(&BigInt::from(-1))
    .shift_up(3);
    let a2 = signed_powers(&[
        (1, 4 * n + 10),
        (1, 2 * n + 7),
        (1, 2 * n + 6),
        (1, 4),
        (1, 3),
        (2, 2),
        (1, 1),
        (1, 0),
    ])
    .shift_up(1);
    let a3 = (&signed_powers(&[(1, 2 * n + 6), (1, 2), (1, 0)])
        * &IntPoly::from_coeffs(vec![1, 1]))
        .scalar_mul(&BigInt::from(-1));
    [a0, a1, a2, a3, IntPoly::one()]
}

/// The 16-term certificate numerator. A Laurent polynomial: several
/// exponents go negative at strongly negative `k`.
fn cert_h(n: i64, k: i64, fam: CertificateParams) -> LaurentPoly {
    let (a, b) = (fam.a, fam.b);
    let terms: [(i64, i64); 16] = [
        (1, 3 * n + 9 * k + 3 * b + a + 6),
        (-1, 3 * n + 3 * k + 5 * b + 9),
        (-1, 2 * n + 6 * k + 2 * b + a + 7),
        (1, 2 * n + 6 * k + 6 * b + 7),
        (-1, 2 * n + 6 * k + 2 * b + a + 6),
        (1, 2 * n + 6 * k + 6 * b + 6),
        (1, n + 3 * k + b + a + 7),
        (1, n + 3 * k + b + a + 6),
        (-1, 2 * n + 6 * k + 2 * b + a + 5),
        (1, 2 * n + 6 * k + 6 * b + 5),
        (-1, n + 9 * k + 7 * b + 4),
        (1, n + 3 * k + b + a + 5),
        (-1, n + 9 * k + 7 * b + 3),
        (-1, n + 9 * k + 7 * b + 2),
        (1, 12 * k + 8 * b),
        (-1, a + 6),
    ];
    let one = LaurentPoly::monomial(1, 0);
    let mut h = LaurentPoly::zero();
    for (c, e) in terms {
        h.add_scaled(&BigInt::from(c), e, &one);
    }
    h
}

/// Exponents of the five denominator factors `1 - q^e`: the shifted
/// factorial run `n - 3k - b + 1 .. n - 3k - b + 4` plus `n + 3k + b + 1`.
fn denominator_exponents(n: i64, k: i64, fam: CertificateParams) -> [i64; 5] {
    let t = 3 * k + fam.b;
    [n - t + 1, n - t + 2, n - t + 3, n - t + 4, n + t + 1]
}

/// Whether the certificate is defined at `(n, k)`: no denominator factor
/// `1 - q^e` may vanish identically, i.e. no exponent may be zero.
pub fn certificate_defined(n: i64, k: i64, fam: CertificateParams) -> bool {
    denominator_exponents(n, k, fam).iter().all(|&e| e != 0)
}

/// The rational-function certificate `r(n, k)` in reduced canonical form.
/// Fails with [`QError::DegenerateDenominator`] when a denominator factor
/// vanishes identically; the factor is identified by its 1-based position.
pub fn certificate(n: i64, k: i64, fam: CertificateParams) -> QResult<RationalFn> {
    assert!(n >= 1, "certificates are indexed from n = 1");
    let exps = denominator_exponents(n, k, fam);
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            return Err(QError::DegenerateDenominator {
                n,
                k,
                factor: i + 1,
            });
        }
    }
    let mut front = IntPoly::one();
    front.mul_one_minus_pow((2 * n + 1) as usize);
    front.mul_one_minus_pow((2 * n + 2) as usize);
    let shift = 4 * n - 12 * k + 10 - fam.a - 4 * fam.b;
    let num = (&cert_h(n, k, fam) * &LaurentPoly::from(&front)).shift(shift);
    let mut den = LaurentPoly::monomial(1, 0);
    for &e in &exps {
        let factor = &LaurentPoly::monomial(1, 0) - &LaurentPoly::monomial(1, e);
        den = &den * &factor;
    }
    Ok(RationalFn::new(num, den))
}

/// `g(n, k) = r(n, k) s(n, k)` as an unreduced exact fraction
/// `(numerator, denominator)`. Outside the support of `s` the product is
/// exactly zero (the certificate is still required to be defined there),
/// giving `(0, 1)`; inside the support every denominator exponent is
/// positive, so the denominator is a plain polynomial.
fn g_raw(n: i64, k: i64, fam: CertificateParams) -> QResult<(LaurentPoly, IntPoly)> {
    let exps = denominator_exponents(n, k, fam);
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            return Err(QError::DegenerateDenominator {
                n,
                k,
                factor: i + 1,
            });
        }
    }
    let s = s_term(n, k, fam);
    if s.is_zero() {
        return Ok((LaurentPoly::zero(), IntPoly::one()));
    }
    let mut den = IntPoly::one();
    for &e in &exps {
        assert!(
            e >= 1,
            "inside the support all denominator exponents are positive"
        );
        den.mul_one_minus_pow(e as usize);
    }
    let mut front = IntPoly::one();
    front.mul_one_minus_pow((2 * n + 1) as usize);
    front.mul_one_minus_pow((2 * n + 2) as usize);
    let shift = 4 * n - 12 * k + 10 - fam.a - 4 * fam.b;
    let num =
        &(&cert_h(n, k, fam) * &LaurentPoly::from(&front)).shift(shift) * &LaurentPoly::from(&s);
    Ok((num, den))
}

/// Column offsets checked per `n`: wide enough to cover every `k` where any
/// of `s(n, k) .. s(n+4, k)` is nonzero, plus one fully-zero instance on
/// each side.
pub fn recurrence_window(n: i64) -> std::ops::RangeInclusive<i64> {
    let lim = (n + 5).div_euclid(3) + 1;
    -lim..=lim
}

/// One instance of the order-4 recurrence at `(n, k)`:
/// `sum_j a_j(n) s(n+j, k) = g(n, k+1) - g(n, k)`, cross-multiplied by both
/// boundary denominators. Instances where either boundary certificate value
/// is undefined render the degeneracy as a failure; sweeps exclude them
/// up front because the recurrence is not claimed there.
pub fn check_recurrence(n: i64, k: i64, fam: CertificateParams) -> CongruenceReport {
    assert!(n >= 1);
    CongruenceReport::measure("wz-recurrence", n, &fam.report_params(&[("k", k)]), || {
        let coeffs = recurrence_coeffs(n, fam);
        let mut lhs = IntPoly::zero();
        for (j, c) in coeffs.iter().enumerate() {
            lhs = &lhs + &(c * &s_term(n + j as i64, k, fam));
        }
        match (g_raw(n, k, fam), g_raw(n, k + 1, fam)) {
            (Ok((n0, d0)), Ok((n1, d1))) => {
                let cross = &LaurentPoly::from(&lhs) * &LaurentPoly::from(&(&d0 * &d1));
                let rhs = &(&n1 * &LaurentPoly::from(&d0)) - &(&n0 * &LaurentPoly::from(&d1));
                (cross == rhs, brief_laurent(&cross), brief_laurent(&rhs))
            }
            (Err(e), _) | (_, Err(e)) => (
                false,
                brief_int(&lhs),
                format!("boundary value undefined: {e}"),
            ),
        }
    })
}

/// All claimed recurrence instances at `n`: both families over
/// [`recurrence_window`], excluding offsets where a boundary certificate
/// value is undefined (those sit just outside the support of `s`, where the
/// recurrence is not asserted).
pub fn recurrence_rows(n: i64) -> Vec<CongruenceReport> {
    let mut rows = Vec::new();
    for fam in [CertificateParams::PLUS, CertificateParams::MINUS] {
        for k in recurrence_window(n) {
            if certificate_defined(n, k, fam) && certificate_defined(n, k + 1, fam) {
                rows.push(check_recurrence(n, k, fam));
            }
        }
    }
    rows
}

/// Largest `k` with any nonzero `s(n+j, k)`, `0 <= j <= 4`, plus one.
fn support_upper(n: i64, fam: CertificateParams) -> i64 {
    (n + 4 - fam.b).div_euclid(3) + 1
}

/// One telescoped tail at `(n, k0)`: summing the recurrence over `k >= k0`
/// collapses the right side to `-g(n, k0)`, so
/// `sum_j a_j(n) sum_(k >= k0) s(n+j, k) = -g(n, k0)`, cross-multiplied by
/// the denominator of `g(n, k0)`. Defined only where the certificate is.
pub fn check_telescope_sum(n: i64, k0: i64, fam: CertificateParams) -> CongruenceReport {
    assert!(n >= 1);
    CongruenceReport::measure(
        "telescope-sum",
        n,
        &fam.report_params(&[("k0", k0)]),
        || {
            let coeffs = recurrence_coeffs(n, fam);
            let hi = support_upper(n, fam);
            let mut lhs = IntPoly::zero();
            for (j, c) in coeffs.iter().enumerate() {
                let mut tail = IntPoly::zero();
                for k in k0..=hi {
                    tail = &tail + &s_term(n + j as i64, k, fam);
                }
                lhs = &lhs + &(c * &tail);
            }
            match g_raw(n, k0, fam) {
                Ok((num, den)) => {
                    let cross = &LaurentPoly::from(&lhs) * &LaurentPoly::from(&den);
                    let rhs = -&num;
                    (cross == rhs, brief_laurent(&cross), brief_laurent(&rhs))
                }
                Err(e) => (
                    false,
                    brief_int(&lhs),
                    format!("boundary value undefined: {e}"),
                ),
            }
        },
    )
}

/// The claimed telescoped tails at `n`: `k0 in {0, 1}` for both families,
/// excluding the cells where `g(n, k0)` is undefined (`k0 = 1` needs
/// `n >= 4` in the `(3, 1)` family and `n >= 2` in the `(-3, -1)` one).
pub fn telescope_sum_rows(n: i64) -> Vec<CongruenceReport> {
    let mut rows = Vec::new();
    for fam in [CertificateParams::PLUS, CertificateParams::MINUS] {
        for k0 in [0, 1] {
            if certificate_defined(n, k0, fam) {
                rows.push(check_telescope_sum(n, k0, fam));
            }
        }
    }
    rows
}

/// Both boundary values of the telescoped recurrence for the split central
/// sum: `-g(n, 0)` in the `(3, 1)` family plus `g(n, 1)` in the
/// `(-3, -1)` family, as one cross-multiplied pair. Needs `n >= 2` (at
/// `n = 1` the second certificate value is undefined).
fn boundary_parts(n: i64) -> ((LaurentPoly, IntPoly), (LaurentPoly, IntPoly)) {
    let plus = g_raw(n, 0, CertificateParams::PLUS)
        .expect("g(n, 0) in the (3, 1) family is defined for n >= 1");
    let minus = g_raw(n, 1, CertificateParams::MINUS)
        .expect("g(n, 1) in the (-3, -1) family is defined for n >= 2");
    (plus, minus)
}

fn matches_boundary(lhs: &IntPoly, n: i64) -> (bool, String, String) {
    let ((n0, d0), (n1, d1)) = boundary_parts(n);
    let cross = &LaurentPoly::from(lhs) * &LaurentPoly::from(&(&d0 * &d1));
    let rhs = &(&n1 * &LaurentPoly::from(&d0)) - &(&n0 * &LaurentPoly::from(&d1));
    (cross == rhs, brief_laurent(&cross), brief_laurent(&rhs))
}

/// The telescoped recurrence applied to the closed-form central sums:
/// `sum_j a_j(n) T(n+j, 0)` must equal the two-term boundary value, for
/// `n >= 2`. This is the route through the re-expanded sums.
pub fn check_telescoped(n: i64) -> CongruenceReport {
    assert!(n >= 2, "the boundary value needs n >= 2");
    CongruenceReport::measure("telescoped", n, &[], || {
        let coeffs = recurrence_coeffs(n, CertificateParams::PLUS);
        let mut lhs = IntPoly::zero();
        for (j, c) in coeffs.iter().enumerate() {
            let t = t_sum(n + j as i64, 0).expect("the d = 0 closed form is always admissible");
            lhs = &lhs + &(c * &t);
        }
        matches_boundary(&lhs, n)
    })
}

/// Partial-sum rearrangement of the telescoped recurrence: with
/// `c_i = sum_(j >= i) a_j` and `c_0 = 0`, the same boundary value must
/// equal `sum_(i=0)^3 c_(i+1)(n) q^(n+i) qbin(2(n+i), n+i)`, for `n >= 2`.
/// This is the route through the plain central sums, and it closes the
/// induction on the transformation identity.
pub fn check_final_identity(n: i64) -> CongruenceReport {
    assert!(n >= 2, "the boundary value needs n >= 2");
    CongruenceReport::measure("final-identity", n, &[], || {
        let coeffs = recurrence_coeffs(n, CertificateParams::PLUS);
        let mut lhs = IntPoly::zero();
        let mut suffix = IntPoly::zero(); // c_(i+1) built downward from c_5 = 0
        for i in (0..=3).rev() {
            suffix = &suffix + &coeffs[i + 1];
            let m = n + i as i64;
            let step = qbin_shared(2 * m, m).shift_up(m as usize);
            lhs = &lhs + &(&suffix * &step);
        }
        matches_boundary(&lhs, n)
    })
}

/// `c_0(n) = sum_j a_j(n)` vanishes identically; this is what lets the
/// telescoped recurrence collapse onto the four fresh summands of the plain
/// central sums.
pub fn check_c0_zero(n: i64) -> CongruenceReport {
    assert!(n >= 1);
    CongruenceReport::measure("c0-zero", n, &[], || {
        let coeffs = recurrence_coeffs(n, CertificateParams::PLUS);
        let mut total = IntPoly::zero();
        for c in &coeffs {
            total = &total + c;
        }
        (total.is_zero(), brief_int(&total), "0".to_owned())
    })
}

/// The recurrence coefficients agree between the two families, which is
/// what allows one recurrence to drive both halves of the split sum.
pub fn check_aj_invariance(n: i64) -> CongruenceReport {
    assert!(n >= 1);
    CongruenceReport::measure("aj-invariance", n, &[], || {
        let plus = recurrence_coeffs(n, CertificateParams::PLUS);
        let minus = recurrence_coeffs(n, CertificateParams::MINUS);
        let holds = plus == minus;
        let render = |cs: &[IntPoly; 5]| cs.iter().map(brief_int).collect::<Vec<_>>().join(" | ");
        (holds, render(&plus), render(&minus))
    })
}

/// The three-step column shift of the plain central sum, `n >= |d|`:
/// `S(n, d) - q^(4d+6) S(n, d+3)` equals
/// `q^d [2d+3]_q qbin(2n+1, n+d+2) / [2n+1]_q`, with the extra constants
/// `-q^(-1)` at `d = -1` and `+q^(-3)` at `d = -2`. Cross-multiplied by
/// `[2n+1]_q`; negative `d` makes both sides genuinely Laurent.
pub fn check_shift_lemma(n: i64, d: i64) -> CongruenceReport {
    assert!(n >= d.abs() && n >= 1, "shift lemma needs n >= max(|d|, 1)");
    CongruenceReport::measure("shift-lemma", n, &[("d", d)], || {
        let mut lhs = &LaurentPoly::from(&s_sum(n, d))
            - &LaurentPoly::from(&s_sum(n, d + 3)).shift(4 * d + 6);
        if d == -1 {
            lhs = &lhs + &LaurentPoly::monomial(1, -1);
        }
        if d == -2 {
            lhs = &lhs - &LaurentPoly::monomial(1, -3);
        }
        let cross = &lhs * &q_int_poly(2 * n + 1);
        let rhs = (&q_int_poly(2 * d + 3)
            * &LaurentPoly::from(&*qbin_shared(2 * n + 1, n + d + 2)))
            .shift(d);
        (cross == rhs, brief_laurent(&cross), brief_laurent(&rhs))
    })
}

/// Shift-lemma rows at `n` for all `|d| <= min(n, d_cap)`.
pub fn shift_lemma_rows(n: i64, d_cap: i64) -> Vec<CongruenceReport> {
    assert!(n >= 1 && d_cap >= 0);
    let cap = d_cap.min(n);
    (-cap..=cap).map(|d| check_shift_lemma(n, d)).collect()
}
