//! Verification suites: build the instance list for a suite, fan the
//! instances out over a thread pool, and summarize the sorted reports.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::ValueEnum;
use qcert_core::congruences::binomial_lemmas::{bc1_row, bc2_row, central_lemma_rows};
use qcert_core::congruences::catalan::{
    catalan_roots_numeric_rows, check_p_catalan, sweep_c3, sweep_c5, sweep_catalan_roots_exact,
};
use qcert_core::congruences::identities::{
    central_transform_rows, cyclotomic_rows, pascal_rows, product_form_row, sweep_antidiagonal_sum,
    sweep_fibonacci_identities,
};
use qcert_core::congruences::roots::{check_dual, check_gk, dual_numeric_rows, gk_numeric_rows};
use qcert_core::congruences::sums::{check_p_binomial, prime_powers, sweep_central_residue_for_d};
use qcert_core::congruences::{sort_reports, CongruenceReport};
use qcert_core::wz::{
    check_aj_invariance, check_c0_zero, check_final_identity, check_telescoped, recurrence_rows,
    shift_lemma_rows, telescope_sum_rows,
};
use rayon::prelude::*;

/// Named verification suites; `all` concatenates every other suite.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    BiRelations,
    Cyclotomic,
    BcLemmas,
    Qid1,
    Qid2,
    Qid3,
    Qc1,
    Gk,
    Dual,
    C3,
    C5,
    CatalanRoots,
    PCongruences,
    WzRecurrence,
    ShiftLemma,
    Telescoping,
    FinalIdentity,
    All,
}

const CONCRETE_SUITES: [Suite; 17] = [
    Suite::BiRelations,
    Suite::Cyclotomic,
    Suite::BcLemmas,
    Suite::Qid1,
    Suite::Qid2,
    Suite::Qid3,
    Suite::Qc1,
    Suite::Gk,
    Suite::Dual,
    Suite::C3,
    Suite::C5,
    Suite::CatalanRoots,
    Suite::PCongruences,
    Suite::WzRecurrence,
    Suite::ShiftLemma,
    Suite::Telescoping,
    Suite::FinalIdentity,
];

pub struct SuiteConfig {
    pub n_max: Option<i64>,
    pub d_max: i64,
    pub p_max: i64,
    pub a_max: u32,
    pub numeric_n_max: i64,
    pub tolerance: f64,
    pub jobs: Option<usize>,
    pub output: Option<PathBuf>,
}

type Task = Box<dyn FnOnce() -> Vec<CongruenceReport> + Send>;

fn task<F>(f: F) -> Task
where
    F: FnOnce() -> Vec<CongruenceReport> + Send + 'static,
{
    Box::new(f)
}

/// Sweep bound used when `--n-max` is not given: 60 for the polynomial
/// suites and 25 for the certificate-driven ones, sized so that the full
/// `all` run finishes in a few minutes.
fn default_n_max(suite: Suite) -> i64 {
    match suite {
        Suite::WzRecurrence | Suite::Telescoping | Suite::FinalIdentity => 25,
        Suite::All => unreachable!("all expands into concrete suites"),
        _ => 60,
    }
}

fn suite_tasks(suite: Suite, cfg: &SuiteConfig) -> Vec<Task> {
    if suite == Suite::All {
        let mut tasks = Vec::new();
        for concrete in CONCRETE_SUITES {
            tasks.extend(suite_tasks(concrete, cfg));
        }
        return tasks;
    }
    let nm = cfg.n_max.unwrap_or_else(|| default_n_max(suite));
    let d_max = cfg.d_max;
    let numeric = cfg.numeric_n_max.min(nm);
    let tol = cfg.tolerance;
    let mut tasks = Vec::new();
    match suite {
        Suite::BiRelations => {
            for n in 1..=nm {
                tasks.push(task(move || {
                    let mut rows = pascal_rows(n);
                    rows.push(product_form_row(n));
                    rows
                }));
            }
        }
        Suite::Cyclotomic => {
            for n in 2..=nm {
                tasks.push(task(move || cyclotomic_rows(n)));
            }
        }
        Suite::BcLemmas => {
            for n in 2..=nm {
                tasks.push(task(move || {
                    let mut rows = vec![bc2_row(n)];
                    for a in 1..=4 {
                        rows.push(bc1_row(n, a));
                    }
                    rows.extend(central_lemma_rows(n));
                    rows
                }));
            }
        }
        Suite::Qid1 => {
            if nm >= 1 {
                tasks.push(task(move || sweep_fibonacci_identities(nm)));
            }
        }
        Suite::Qid2 => {
            tasks.push(task(move || sweep_antidiagonal_sum(nm)));
        }
        Suite::Qid3 => {
            for n in 1..=nm {
                tasks.push(task(move || central_transform_rows(n, d_max)));
            }
        }
        Suite::Qc1 => {
            for d in -d_max..=d_max {
                tasks.push(task(move || sweep_central_residue_for_d(d, nm)));
            }
        }
        Suite::Gk => {
            for n in 2..=nm {
                tasks.push(task(move || vec![check_gk(n)]));
            }
            for n in 2..=numeric {
                tasks.push(task(move || gk_numeric_rows(n, tol)));
            }
        }
        Suite::Dual => {
            for n in 2..=nm {
                tasks.push(task(move || vec![check_dual(n)]));
            }
            for n in 2..=numeric {
                tasks.push(task(move || dual_numeric_rows(n, tol)));
            }
        }
        Suite::C3 => {
            tasks.push(task(move || sweep_c3(nm)));
        }
        Suite::C5 => {
            tasks.push(task(move || sweep_c5(nm)));
        }
        Suite::CatalanRoots => {
            if nm >= 2 {
                tasks.push(task(move || sweep_catalan_roots_exact(nm)));
            }
            for n in 1..=numeric {
                if n % 3 == 0 || n % 5 == 0 {
                    tasks.push(task(move || catalan_roots_numeric_rows(n, tol)));
                }
            }
        }
        Suite::PCongruences => {
            for (p, a, n) in prime_powers(cfg.p_max, cfg.a_max) {
                tasks.push(task(move || {
                    let mut rows = vec![check_p_catalan(p, a)];
                    let cap = 5.min(n);
                    for d in -cap..=cap {
                        rows.push(check_p_binomial(p, a, d));
                    }
                    rows
                }));
            }
        }
        Suite::WzRecurrence => {
            for n in 1..=nm {
                tasks.push(task(move || recurrence_rows(n)));
            }
            tasks.push(task(move || {
                (1..=2 * nm).map(check_aj_invariance).collect()
            }));
        }
        Suite::ShiftLemma => {
            for n in 1..=nm {
                tasks.push(task(move || shift_lemma_rows(n, d_max)));
            }
        }
        Suite::Telescoping => {
            for n in 1..=nm {
                tasks.push(task(move || {
                    let mut rows = telescope_sum_rows(n);
                    if n >= 2 {
                        rows.push(check_telescoped(n));
                    }
                    rows
                }));
            }
        }
        Suite::FinalIdentity => {
            for n in 2..=nm {
                tasks.push(task(move || vec![check_final_identity(n)]));
            }
            tasks.push(task(move || (1..=2 * nm).map(check_c0_zero).collect()));
        }
        Suite::All => unreachable!("handled above"),
    }
    tasks
}

fn resolve_jobs(cfg: &SuiteConfig) -> Result<usize, String> {
    if let Some(jobs) = cfg.jobs {
        if jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        return Ok(jobs);
    }
    if let Ok(raw) = std::env::var("QCERT_JOBS") {
        return match raw.parse::<usize>() {
            Ok(jobs) if jobs >= 1 => Ok(jobs),
            _ => Err(format!(
                "QCERT_JOBS must be a positive integer, got {raw:?}"
            )),
        };
    }
    Ok(std::thread::available_parallelism()
        .map(usize::from)
        .unwrap_or(1))
}

fn format_params(params: &BTreeMap<String, i64>) -> String {
    params
        .iter()
        .map(|(key, value)| format!("{key}={value}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_report(path: &PathBuf, rows: &[CongruenceReport]) -> std::io::Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    for row in rows {
        serde_json::to_writer(&mut out, row)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

const FAILURE_DETAIL_CAP: usize = 20;

pub fn run_verify(suite: Suite, cfg: SuiteConfig) -> i32 {
    if let Some(nm) = cfg.n_max {
        if nm < 1 {
            eprintln!("qcert: --n-max must be at least 1");
            return 2;
        }
    }
    if !cfg.tolerance.is_finite() || cfg.tolerance <= 0.0 {
        eprintln!("qcert: --tolerance must be positive");
        return 2;
    }
    if cfg.d_max < 0 {
        eprintln!("qcert: --d-max must be nonnegative");
        return 2;
    }
    if cfg.p_max < 2 {
        eprintln!("qcert: --p-max must be at least 2");
        return 2;
    }
    if cfg.a_max < 1 {
        eprintln!("qcert: --a-max must be at least 1");
        return 2;
    }
    let jobs = match resolve_jobs(&cfg) {
        Ok(jobs) => jobs,
        Err(msg) => {
            eprintln!("qcert: {msg}");
            return 2;
        }
    };

    let started = Instant::now();
    let tasks = suite_tasks(suite, &cfg);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool construction");
    let mut rows: Vec<CongruenceReport> = pool
        .install(|| {
            tasks
                .into_par_iter()
                .map(|run| run())
                .collect::<Vec<Vec<CongruenceReport>>>()
        })
        .into_iter()
        .flatten()
        .collect();
    sort_reports(&mut rows);
    let wall = started.elapsed();

    if let Some(path) = &cfg.output {
        if let Err(e) = write_report(path, &rows) {
            eprintln!("qcert: cannot write {}: {e}", path.display());
            return 2;
        }
    }

    let failures: Vec<&CongruenceReport> = rows.iter().filter(|row| !row.holds).collect();
    for row in failures.iter().take(FAILURE_DETAIL_CAP) {
        crate::emit(format!(
            "FAIL {} n={} {} | lhs {} | rhs {}",
            row.claim,
            row.n,
            format_params(&row.params),
            row.lhs,
            row.rhs
        ));
    }
    if failures.len() > FAILURE_DETAIL_CAP {
        crate::emit(format!(
            "... and {} more failing instances",
            failures.len() - FAILURE_DETAIL_CAP
        ));
    }

    let mut by_claim: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for row in &rows {
        let entry = by_claim.entry(row.claim.as_str()).or_insert((0, 0));
        entry.0 += 1;
        if !row.holds {
            entry.1 += 1;
        }
    }
    let claim_width = by_claim
        .keys()
        .map(|claim| claim.len())
        .max()
        .unwrap_or(5)
        .max("claim".len());
    crate::emit(format!(
        "{:<claim_width$}  {:>9}  {:>8}",
        "claim", "instances", "failures"
    ));
    for (claim, (instances, failed)) in &by_claim {
        crate::emit(format!(
            "{claim:<claim_width$}  {instances:>9}  {failed:>8}"
        ));
    }
    crate::emit(format!(
        "{} claims, {} instances, {} failures in {:.2}s",
        by_claim.len(),
        rows.len(),
        failures.len(),
        wall.as_secs_f64()
    ));

    if failures.is_empty() {
        0
    } else {
        1
    }
}
