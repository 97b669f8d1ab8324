//! Randomized laws for the exact polynomial layer: ring axioms, division
//! round-trips, rendering/parsing stability, and the floating-point
//! root-of-unity oracle against exact evaluation.

use num_bigint::BigInt;
use proptest::prelude::*;
use qcert_core::polyring::{parse_laurent, IntPoly, LaurentPoly};

fn int_poly() -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-30i64..=30, 0..10).prop_map(IntPoly::from_coeffs)
}

fn monic_poly() -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-9i64..=9, 1..6).prop_map(|mut coeffs| {
        coeffs.push(1);
        IntPoly::from_coeffs(coeffs)
    })
}

fn laurent_poly() -> impl Strategy<Value = LaurentPoly> {
    (int_poly(), -8i64..=8).prop_map(|(p, e)| LaurentPoly::from(&p).shift(e))
}

fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
    (proptest::collection::vec(-3i64..=3, 0..40), -10i64..=10)
        .prop_map(|(coeffs, e)| LaurentPoly::from(IntPoly::from_coeffs(coeffs)).shift(e))
}

proptest! {
    #[test]
    fn addition_commutes(a in int_poly(), b in int_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn addition_associates(a in int_poly(), b in int_poly(), c in int_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn negation_cancels_addition(a in int_poly()) {
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn multiplication_commutes(a in int_poly(), b in int_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in int_poly(), b in int_poly(), c in int_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes_over_addition(
        a in int_poly(),
        b in int_poly(),
        c in int_poly(),
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn one_is_multiplicatively_neutral(a in int_poly()) {
        prop_assert_eq!(&a * &IntPoly::one(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in int_poly(), b in int_poly()) {
        prop_assume!(!b.is_zero());
        let product = &a * &b;
        prop_assert_eq!(product.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn remainder_splits_off_a_multiple_of_the_modulus(
        a in int_poly(),
        m in monic_poly(),
    ) {
        let r = a.poly_rem(&m).unwrap();
        if let Some(rd) = r.degree() {
            prop_assert!(rd < m.degree().unwrap());
        }
        let multiple = &a - &r;
        if multiple.is_zero() {
            prop_assert!(a == r);
        } else {
            prop_assert_eq!(&multiple.exact_div(&m).unwrap() * &m, multiple);
        }
    }

    #[test]
    fn rendering_round_trips_through_the_parser(p in laurent_poly()) {
        prop_assert_eq!(parse_laurent(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn json_round_trips_exactly(p in laurent_poly()) {
        let encoded = serde_json::to_string(&p).unwrap();
        let back: LaurentPoly = serde_json::from_str(&encoded).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn integer_evaluation_is_multiplicative(
        a in laurent_poly(),
        b in laurent_poly(),
        x in prop_oneof![-5i64..=-1, 1i64..=5],
    ) {
        prop_assert_eq!((&a * &b).eval_int(x), a.eval_int(x) * b.eval_int(x));
    }

    #[test]
    fn root_of_unity_evaluation_is_multiplicative(
        a in small_laurent(),
        b in small_laurent(),
        n in 1i64..=60,
        m in 0i64..=60,
    ) {
        let lhs = (&a * &b).eval_root_of_unity(m, n);
        let rhs = a.eval_root_of_unity(m, n) * b.eval_root_of_unity(m, n);
        prop_assert!((lhs - rhs).norm() <= 1e-9, "lhs {lhs} rhs {rhs}");
    }
}

/// Degree-2000 stress case for the documented trust radius of the numeric
/// oracle: |eval(p * r) - eval(p) * eval(r)| stays within 1e-9 at every
/// order up to 60 when coefficients are small.
#[test]
fn root_of_unity_evaluation_survives_degree_2000() {
    let stream = |seed: u64| {
        let mut state = seed;
        let mut coeffs: Vec<BigInt> = (0..1000)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                BigInt::from(((state >> 33) % 3) as i64 - 1)
            })
            .collect();
        coeffs.push(BigInt::from(1));
        coeffs
    };
    let p = IntPoly::from_coeffs(stream(1));
    let r = IntPoly::from_coeffs(stream(2));
    let (p, r) = (LaurentPoly::from(p), LaurentPoly::from(r));
    let product = &p * &r;
    assert_eq!(product.max_exp(), Some(2000));
    for n in [1, 2, 3, 5, 12, 30, 59, 60] {
        for m in [1, n / 2, n - 1] {
            let lhs = product.eval_root_of_unity(m, n);
            let rhs = p.eval_root_of_unity(m, n) * r.eval_root_of_unity(m, n);
            assert!(
                (lhs - rhs).norm() <= 1e-9,
                "order {n}, numerator {m}: {lhs} vs {rhs}"
            );
        }
    }
}
