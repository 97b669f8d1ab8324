//! qcert: compute exact q-objects, verify congruence suites over finite
//! ranges, and print q = 1 specialization tables.
//!
//! Exit codes: 0 when everything checked out, 1 when at least one verified
//! instance failed, 2 on invalid parameters or I/O problems.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qcert_core::qcore::cyclotomic::cyclotomic;
use qcert_core::qcore::qbinomial::q_binomial;
use qcert_core::qobjects::{
    dual_lhs, gk_lhs, q_catalan, q_fibonacci_explicit, rr_rhs, s_sum, t_sum, QFibSpec,
};

mod suites;
mod table;

use suites::{Suite, SuiteConfig};
use table::Corollary;

#[derive(Parser)]
#[command(name = "qcert")]
#[command(about = "Exact verification of q-binomial and q-Catalan congruences")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComputeObject {
    /// Gaussian binomial coefficient; needs --n and --k
    Qbin,
    /// Cyclotomic polynomial; needs --n >= 1
    Cyclotomic,
    /// q-Catalan number; needs --n >= 0
    Qcatalan,
    /// q-Fibonacci polynomial at t = q^a; needs --n >= 0, optional --a
    Qfib,
    /// Alternating Rogers-Ramanujan-type sum; needs --n >= 0, --a in {0, 1}
    Rr,
    /// Alternating signed central-column sum; needs --n >= 1
    GkLhs,
    /// Unsigned central-column companion sum; needs --n >= 1
    DualLhs,
    /// Shifted central sum S(n, d); needs --n >= 1, optional --d
    SSum,
    /// Re-expanded central sum T(n, d); needs --n >= max(|d|, 1)
    TSum,
}

#[derive(Subcommand)]
enum Commands {
    /// Compute one q-object and print its canonical rendering
    Compute {
        #[arg(value_enum)]
        object: ComputeObject,
        /// Primary index of the object
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Column index (qbin)
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        /// Column shift (s-sum, t-sum)
        #[arg(long, allow_negative_numbers = true)]
        d: Option<i64>,
        /// Specialization exponent (qfib, rr)
        #[arg(long, allow_negative_numbers = true)]
        a: Option<i64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run a verification suite and summarize the results
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Upper bound of the main index sweep (suite-specific default)
        #[arg(long, allow_negative_numbers = true)]
        n_max: Option<i64>,
        /// Largest |d| for shifted sweeps
        #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
        d_max: i64,
        /// Largest prime base for integer congruence sweeps
        #[arg(long, default_value_t = 13)]
        p_max: i64,
        /// Largest prime-power exponent for integer congruence sweeps
        #[arg(long, default_value_t = 8)]
        a_max: u32,
        /// Upper bound for numeric root-of-unity sweeps
        #[arg(long, default_value_t = 30)]
        numeric_n_max: i64,
        /// Absolute tolerance for numeric comparisons
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        /// Worker threads (default: QCERT_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the full JSON-lines report here
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print a q = 1 congruence table over prime powers
    Table {
        #[arg(value_enum)]
        corollary: Corollary,
        #[arg(long, default_value_t = 13)]
        p_max: i64,
        #[arg(long, default_value_t = 8)]
        a_max: u32,
        /// Largest |d| column shift (p-binomial only)
        #[arg(long, default_value_t = 5)]
        d_max: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn invalid(msg: &str) -> i32 {
    eprintln!("qcert: {msg}");
    2
}

/// Write one line to stdout; when the consumer has closed the pipe early
/// (e.g. `qcert table ... | head`), end with the conventional SIGPIPE
/// status instead of panicking.
pub(crate) fn emit(line: impl std::fmt::Display) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(141);
    }
}

#[allow(clippy::too_many_arguments)]
fn run_compute(
    object: ComputeObject,
    n: i64,
    k: Option<i64>,
    d: Option<i64>,
    a: Option<i64>,
    format: OutputFormat,
) -> i32 {
    // (rendered value, object name, extra params that were consumed)
    let (value, name, extras): (String, &str, Vec<(&str, i64)>) = match object {
        ComputeObject::Qbin => {
            let Some(k) = k else {
                return invalid("qbin needs --k");
            };
            (q_binomial(n, k).to_string(), "qbin", vec![("k", k)])
        }
        ComputeObject::Cyclotomic => {
            if n < 1 {
                return invalid("cyclotomic needs --n >= 1");
            }
            (cyclotomic(n).to_string(), "cyclotomic", vec![])
        }
        ComputeObject::Qcatalan => {
            if n < 0 {
                return invalid("qcatalan needs --n >= 0");
            }
            (q_catalan(n).to_string(), "qcatalan", vec![])
        }
        ComputeObject::Qfib => {
            let a = a.unwrap_or(0);
            if n < 0 || a < 0 {
                return invalid("qfib needs --n >= 0 and --a >= 0");
            }
            (
                q_fibonacci_explicit(QFibSpec::new(n, a)).to_string(),
                "qfib",
                vec![("a", a)],
            )
        }
        ComputeObject::Rr => {
            let a = a.unwrap_or(0);
            if n < 0 || !(a == 0 || a == 1) {
                return invalid("rr needs --n >= 0 and --a in {0, 1}");
            }
            (rr_rhs(n, a).to_string(), "rr", vec![("a", a)])
        }
        ComputeObject::GkLhs => {
            if n < 1 {
                return invalid("gk-lhs needs --n >= 1");
            }
            (gk_lhs(n).to_string(), "gk-lhs", vec![])
        }
        ComputeObject::DualLhs => {
            if n < 1 {
                return invalid("dual-lhs needs --n >= 1");
            }
            (dual_lhs(n).to_string(), "dual-lhs", vec![])
        }
        ComputeObject::SSum => {
            let d = d.unwrap_or(0);
            if n < 1 {
                return invalid("s-sum needs --n >= 1");
            }
            (s_sum(n, d).to_string(), "s-sum", vec![("d", d)])
        }
        ComputeObject::TSum => {
            let d = d.unwrap_or(0);
            if n < 1 || n < d.abs() {
                return invalid("t-sum needs --n >= max(|d|, 1)");
            }
            match t_sum(n, d) {
                Ok(p) => (p.to_string(), "t-sum", vec![("d", d)]),
                Err(e) => return invalid(&e.to_string()),
            }
        }
    };
    match format {
        OutputFormat::Text => emit(value),
        OutputFormat::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("object".into(), name.into());
            obj.insert("n".into(), n.into());
            for (key, v) in extras {
                obj.insert(key.into(), v.into());
            }
            obj.insert("value".into(), value.into());
            emit(serde_json::Value::Object(obj));
        }
    }
    0
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Commands::Compute {
            object,
            n,
            k,
            d,
            a,
            format,
        } => run_compute(object, n, k, d, a, format),
        Commands::Verify {
            suite,
            n_max,
            d_max,
            p_max,
            a_max,
            numeric_n_max,
            tolerance,
            jobs,
            output,
        } => suites::run_verify(
            suite,
            SuiteConfig {
                n_max,
                d_max,
                p_max,
                a_max,
                numeric_n_max,
                tolerance,
                jobs,
                output,
            },
        ),
        Commands::Table {
            corollary,
            p_max,
            a_max,
            d_max,
            format,
        } => table::run_table(corollary, p_max, a_max, d_max, format == OutputFormat::Json),
    };
    std::process::exit(code);
}
