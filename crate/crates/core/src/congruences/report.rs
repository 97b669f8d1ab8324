//! Uniform result rows for verification runs.
//!
//! Every checker in this crate reports through [`CongruenceReport`]: a claim
//! name, the primary index `n`, any further integer parameters, the verdict,
//! and both sides rendered as text. Rows serialize to JSON lines and sort by
//! `(claim, n, params)`, so the output of a full run is reproducible up to
//! the wall-clock field.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

use crate::polyring::{IntPoly, LaurentPoly};

/// Longest rendered side kept verbatim; longer text is truncated with a note
/// so that degree-thousands polynomials cannot bloat run artifacts.
const RENDER_CAP: usize = 2000;

/// Outcome of checking one instance of one claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CongruenceReport {
    /// Claim identifier, e.g. `"qid3"` or `"wz-recurrence"`.
    pub claim: String,
    /// Primary index of the instance.
    pub n: i64,
    /// Remaining parameters keyed by short names such as `"d"` or `"k"`.
    pub params: BTreeMap<String, i64>,
    /// Whether the instance held (exactly, or within tolerance for the
    /// floating-point claims).
    pub holds: bool,
    /// Rendered left-hand side, possibly truncated.
    pub lhs: String,
    /// Rendered right-hand side, possibly truncated.
    pub rhs: String,
    /// Wall-clock time spent on this instance, in milliseconds. Excluded
    /// from ordering and from any determinism comparison.
    pub ms: f64,
}

impl CongruenceReport {
    /// Runs `body` under a timer and wraps its `(holds, lhs, rhs)` verdict.
    pub fn measure(
        claim: &str,
        n: i64,
        params: &[(&str, i64)],
        body: impl FnOnce() -> (bool, String, String),
    ) -> Self {
        let start = Instant::now();
        let (holds, lhs, rhs) = body();
        CongruenceReport {
            claim: claim.to_owned(),
            n,
            params: params.iter().map(|&(k, v)| (k.to_owned(), v)).collect(),
            holds,
            lhs: cap_render(lhs),
            rhs: cap_render(rhs),
            ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }

    /// Wraps an already-computed verdict with an explicit timing figure;
    /// used by sweeps that share one computation across several rows.
    pub fn from_parts(
        claim: &str,
        n: i64,
        params: &[(&str, i64)],
        holds: bool,
        lhs: String,
        rhs: String,
        ms: f64,
    ) -> Self {
        CongruenceReport {
            claim: claim.to_owned(),
            n,
            params: params.iter().map(|&(k, v)| (k.to_owned(), v)).collect(),
            holds,
            lhs: cap_render(lhs),
            rhs: cap_render(rhs),
            ms,
        }
    }

    /// One-line JSON encoding, stable field order.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// Canonical row order: by claim, then `n`, then parameters.
    pub fn cmp_row(&self, other: &Self) -> Ordering {
        (&self.claim, self.n, &self.params).cmp(&(&other.claim, other.n, &other.params))
    }
}

/// Sorts rows into the canonical deterministic order.
pub fn sort_reports(rows: &mut [CongruenceReport]) {
    rows.sort_by(CongruenceReport::cmp_row);
}

/// Folds per-`k` verdicts into one aggregated row: the row holds when every
/// instance holds, and the first failing instance is rendered in full so a
/// red row pinpoints its own counterexample.
pub(crate) struct RowAggregate {
    checked: usize,
    first_fail: Option<(i64, String, String)>,
}

impl RowAggregate {
    pub(crate) fn new() -> Self {
        RowAggregate {
            checked: 0,
            first_fail: None,
        }
    }

    pub(crate) fn record(
        &mut self,
        k: i64,
        holds: bool,
        lhs: impl FnOnce() -> String,
        rhs: impl FnOnce() -> String,
    ) {
        self.checked += 1;
        if !holds && self.first_fail.is_none() {
            self.first_fail = Some((k, lhs(), rhs()));
        }
    }

    /// Verdict triple for [`CongruenceReport::measure`]: on success the two
    /// descriptions are used, on failure the stored counterexample.
    pub(crate) fn finish(self, ok_lhs: String, ok_rhs: String) -> (bool, String, String) {
        match self.first_fail {
            None => (
                true,
                ok_lhs,
                format!("{ok_rhs} ({} instances)", self.checked),
            ),
            Some((k, lhs, rhs)) => (false, format!("k = {k}: {lhs}"), format!("k = {k}: {rhs}")),
        }
    }
}

fn cap_render(s: String) -> String {
    if s.len() <= RENDER_CAP {
        return s;
    }
    let total = s.len();
    let mut cut = RENDER_CAP;
    while !s.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{}... ({total} chars total)", &s[..cut])
}

/// One line of a q = 1 corollary table: indices, the exact integer sum, its
/// normalized residue, and the predicted value side by side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableLine {
    /// Prime base.
    pub p: i64,
    /// Exponent of the prime power.
    pub a: u32,
    /// The prime power `p^a` itself.
    pub n: i64,
    /// Column shift, for tables that have one.
    pub d: Option<i64>,
    /// Which sum this line reports.
    pub label: String,
    /// Exact integer value of the sum, as decimal text.
    pub sum: String,
    /// Modulus of the congruence.
    pub modulus: i64,
    /// `sum` reduced into `0..modulus`.
    pub residue: i64,
    /// Predicted value before reduction (a signed Legendre expression).
    pub target: i64,
    /// `target` reduced into `0..modulus`.
    pub target_residue: i64,
    /// Whether the residues agree.
    pub holds: bool,
}

impl TableLine {
    /// Builds a line from the raw sum and target, reducing both.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        p: i64,
        a: u32,
        n: i64,
        d: Option<i64>,
        label: &str,
        sum: &num_bigint::BigInt,
        modulus: i64,
        target: i64,
    ) -> Self {
        let residue = num_integer::Integer::mod_floor(sum, &num_bigint::BigInt::from(modulus));
        let residue = i64::try_from(&residue).expect("residue fits the modulus");
        let target_residue = target.rem_euclid(modulus);
        TableLine {
            p,
            a,
            n,
            d,
            label: label.to_owned(),
            sum: sum.to_string(),
            modulus,
            residue,
            target,
            target_residue,
            holds: residue == target_residue,
        }
    }
}

/// Terms kept verbatim when describing a large polynomial.
const BRIEF_TERMS: usize = 12;

/// Renders a polynomial side cheaply: full canonical text when small, a
/// head-plus-shape summary when large, so reports never pay for stringifying
/// degree-thousands polynomials.
pub(crate) fn brief_laurent(p: &LaurentPoly) -> String {
    if p.term_count() <= 2 * BRIEF_TERMS {
        return p.to_string();
    }
    let mut head = LaurentPoly::zero();
    for (e, c) in p.iter_terms().take(BRIEF_TERMS) {
        head.add_term(c, e);
    }
    format!(
        "{head} + ... ({} terms, exponents {}..{})",
        p.term_count(),
        p.min_exp(),
        p.max_exp()
            .expect("a polynomial with terms has a max exponent"),
    )
}

/// [`brief_laurent`] for ordinary polynomials.
pub(crate) fn brief_int(p: &IntPoly) -> String {
    if p.term_count() <= 2 * BRIEF_TERMS {
        return p.to_string();
    }
    brief_laurent(&LaurentPoly::from(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(claim: &str, n: i64, params: &[(&str, i64)]) -> CongruenceReport {
        CongruenceReport::measure(claim, n, params, || (true, "l".into(), "r".into()))
    }

    #[test]
    fn json_line_has_stable_field_order() {
        let mut r = row("demo", 3, &[("d", -1)]);
        r.ms = 0.0;
        assert_eq!(
            r.to_json_line(),
            r#"{"claim":"demo","n":3,"params":{"d":-1},"holds":true,"lhs":"l","rhs":"r","ms":0.0}"#
        );
    }

    #[test]
    fn rows_sort_by_claim_then_n_then_params() {
        let mut rows = vec![
            row("b", 1, &[]),
            row("a", 2, &[("k", 5)]),
            row("a", 2, &[("k", 1)]),
            row("a", 1, &[]),
        ];
        sort_reports(&mut rows);
        let order: Vec<(String, i64)> = rows.iter().map(|r| (r.claim.clone(), r.n)).collect();
        assert_eq!(
            order,
            vec![
                ("a".to_owned(), 1),
                ("a".to_owned(), 2),
                ("a".to_owned(), 2),
                ("b".to_owned(), 1)
            ]
        );
        assert_eq!(rows[1].params["k"], 1);
    }

    #[test]
    fn oversized_renders_are_truncated_with_a_note() {
        let long = "x".repeat(5000);
        let r = CongruenceReport::measure("demo", 0, &[], || (true, long, "r".into()));
        assert!(r.lhs.len() < 2100);
        assert!(r.lhs.ends_with("(5000 chars total)"));
        assert_eq!(r.rhs, "r");
    }

    #[test]
    fn brief_rendering_keeps_small_polynomials_verbatim() {
        let small = IntPoly::from_coeffs(vec![1, 2, 3]);
        assert_eq!(brief_int(&small), "1 + 2*q + 3*q^2");
        let big = IntPoly::from_coeffs((1..=60i64).collect::<Vec<_>>());
        let s = brief_int(&big);
        assert!(s.starts_with("1 + 2*q"));
        assert!(s.ends_with("(60 terms, exponents 0..59)"));
        let l = LaurentPoly::from_parts(-30, (1..=60i64).collect::<Vec<_>>());
        assert!(brief_laurent(&l).ends_with("(60 terms, exponents -30..29)"));
    }

    #[test]
    fn aggregation_keeps_the_first_counterexample() {
        let mut agg = RowAggregate::new();
        agg.record(0, true, || unreachable!(), || unreachable!());
        agg.record(1, false, || "left".into(), || "right".into());
        agg.record(2, false, || unreachable!(), || unreachable!());
        let (holds, lhs, rhs) = agg.finish("a".into(), "b".into());
        assert!(!holds);
        assert_eq!(lhs, "k = 1: left");
        assert_eq!(rhs, "k = 1: right");

        let mut ok = RowAggregate::new();
        ok.record(0, true, || unreachable!(), || unreachable!());
        ok.record(1, true, || unreachable!(), || unreachable!());
        assert_eq!(
            ok.finish("a".into(), "b".into()),
            (true, "a".to_owned(), "b (2 instances)".to_owned())
        );
    }

    #[test]
    fn round_trips_through_json() {
        let mut r = row("demo", -4, &[("d", 2), ("a", 0)]);
        r.ms = 1.5;
        let back: CongruenceReport = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(back, r);
    }
}
