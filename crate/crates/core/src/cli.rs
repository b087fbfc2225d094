//! The `qbern` command line.
//!
//! ```text
//! qbern [--format json|latex|csv|plain] [--bracket-notation] [--max-n-cap N] <command>
//!
//!   compute  --n N --what bpoly|fpoly|bnumber|eta|beta|classical|limit
//!   table    --max-n N
//!   verify   [--max-n N] [--max-N N] [--tags TAG,...]
//!   numcheck --q Q0 [--truncation T] [--tolerance EPS]
//! ```
//!
//! Exit status is 0 on success, 1 when a check fails or a computation
//! contradicts itself, 2 on a usage error.
//!
//! CSV layouts (header row first, values in plain notation):
//!
//! | command   | columns                                       |
//! |-----------|-----------------------------------------------|
//! | `compute` | `n,what,value`                                |
//! | `table`   | `n,bpoly,bnumber,beta_number,limit`           |
//! | `verify`, `numcheck` | `identity,params,passed,lhs,rhs,detail` |
//!
//! JSON output of `compute` is the canonical serialization of the object, so
//! parsing and re-serializing it reproduces the same bytes. `table` emits one
//! JSON object per line; `verify` and `numcheck` emit JSON lines followed by a
//! summary object.

use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bernoulli::{classical_bernoulli, limit_q_to_1, qbernoulli};
use crate::error::Error;
use crate::exactq::{parse_rational, QRat, Rational};
use crate::poly::{DensePoly, Indeterminate};
use crate::qexp::{beta, beta_number, eta};
use crate::render::{self, Style};
use crate::verify::{
    numeric_suite, to_json_lines, IdentityTag, SuiteSummary, Verifier, VerifyReport, DEFAULT_TOLERANCE,
    DEFAULT_TRUNCATION,
};
use crate::xpoly::XPoly;

pub const DEFAULT_MAX_N_CAP: usize = 12;
const WARN_ABOVE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Latex,
    Csv,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    /// `B_{n,q}(X)`
    Bpoly,
    /// `F_{n,q}(X)`, the q-antiderivative of `B_{n,q}` vanishing at 0
    Fpoly,
    /// `B_{n,q} = B_{n,q}(0)`
    Bnumber,
    /// Carlitz `η_{n,q}(X)` in `Y = q^X`
    Eta,
    /// Carlitz `β_{n,q}(X)` in `Y = q^X`
    Beta,
    /// Classical `B_n(X)`
    Classical,
    /// `B_{n,q}(X)` at `q -> 1`
    Limit,
}

impl What {
    fn name(self) -> &'static str {
        match self {
            What::Bpoly => "bpoly",
            What::Fpoly => "fpoly",
            What::Bnumber => "bnumber",
            What::Eta => "eta",
            What::Beta => "beta",
            What::Classical => "classical",
            What::Limit => "limit",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qbern", version, about = "Exact q-Bernoulli polynomials over Q(q)")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub format: OutputFormat,
    /// Write denominators as products of q-brackets [k]_q where possible.
    #[arg(long, global = true)]
    pub bracket_notation: bool,
    /// Largest n accepted by any command.
    #[arg(long, env = "QBERN_MAX_N", default_value_t = DEFAULT_MAX_N_CAP, global = true)]
    pub max_n_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one object.
    Compute {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        what: What,
    },
    /// B_{n,q}(X), B_{n,q}, β_{n,q} and the q -> 1 limit for n = 0..=max-n.
    Table {
        #[arg(long)]
        max_n: usize,
    },
    /// Run the identity suite.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long = "max-N", default_value_t = 6)]
        max_big_n: usize,
        /// Comma-separated identity tags, e.g. COR2,THM1.
        #[arg(long, value_delimiter = ',')]
        tags: Vec<String>,
    },
    /// Compare the Jackson series with the closed form at q = Q0.
    Numcheck {
        /// A fraction such as 1/2 or a decimal such as 0.5.
        #[arg(long = "q", allow_hyphen_values = true)]
        q0: String,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
}

/// Result of one invocation: exit status and the two output streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn from_error(err: &Error) -> Self {
        let code = match err {
            Error::Usage(_) | Error::Parse(_) => 2,
            _ => 1,
        };
        Outcome { code, stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let mut warning = String::new();
    if cli.max_n_cap > WARN_ABOVE_CAP {
        warning = format!(
            "warning: n cap {} is above {WARN_ABOVE_CAP}; expect long runtimes\n",
            cli.max_n_cap
        );
    }
    let out = match &cli.command {
        Command::Compute { n, what } => cmd_compute(cli, *n, *what),
        Command::Table { max_n } => cmd_table(cli, *max_n),
        Command::Verify { max_n, max_big_n, tags } => cmd_verify(cli, *max_n, *max_big_n, tags),
        Command::Numcheck { q0, truncation, tolerance } => cmd_numcheck(cli, q0, *truncation, *tolerance),
    };
    let mut out = out.unwrap_or_else(|e| Outcome::from_error(&e));
    out.stderr.insert_str(0, &warning);
    out
}

fn check_cap(cli: &Cli, n: usize) -> Result<(), Error> {
    if n > cli.max_n_cap {
        return Err(Error::Usage(format!(
            "n = {n} exceeds the cap {}; raise it with --max-n-cap or QBERN_MAX_N",
            cli.max_n_cap
        )));
    }
    Ok(())
}

fn style(cli: &Cli) -> Style {
    match cli.format {
        OutputFormat::Latex => Style::latex(cli.bracket_notation),
        _ => Style::plain(cli.bracket_notation),
    }
}

/// One computed object in its native representation.
enum Value {
    X(XPoly),
    Y(DensePoly<crate::poly::VarY>),
    Scalar(QRat),
}

impl Value {
    fn json(&self) -> String {
        match self {
            Value::X(p) => p.to_json(),
            Value::Y(p) => p.to_json(),
            Value::Scalar(c) => c.to_json(),
        }
    }

    fn render(&self, style: Style) -> String {
        fn poly<V: Indeterminate>(p: &DensePoly<V>, style: Style) -> String {
            render::poly(p.coeffs(), V::SYMBOL, style)
        }
        match self {
            Value::X(p) => poly(p, style),
            Value::Y(p) => poly(p, style),
            Value::Scalar(c) => render::qrat(c, style),
        }
    }
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

pub fn cmd_compute(cli: &Cli, n: usize, what: What) -> Result<Outcome, Error> {
    check_cap(cli, n)?;
    let value = match what {
        What::Bpoly => Value::X(qbernoulli(n)?.poly),
        What::Fpoly => Value::X(qbernoulli(n)?.antiderivative),
        What::Bnumber => Value::Scalar(qbernoulli(n)?.number),
        What::Eta => Value::Y(eta(n)),
        What::Beta => Value::Y(beta(n)),
        What::Classical => Value::X(classical_bernoulli(n)),
        What::Limit => Value::X(limit_q_to_1(&qbernoulli(n)?.poly)?),
    };
    let text = match cli.format {
        OutputFormat::Json => value.json() + "\n",
        OutputFormat::Latex | OutputFormat::Plain => value.render(style(cli)) + "\n",
        OutputFormat::Csv => csv_text(
            &["n", "what", "value"],
            &[vec![n.to_string(), what.name().to_owned(), value.render(style(cli))]],
        ),
    };
    Ok(Outcome::ok(text))
}

/// One row of `table`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub bpoly: XPoly,
    pub bnumber: QRat,
    pub beta_number: QRat,
    pub limit: XPoly,
}

pub fn table_rows(max_n: usize) -> Result<Vec<TableRow>, Error> {
    use rayon::prelude::*;
    (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let b = qbernoulli(n)?;
            Ok(TableRow {
                n,
                limit: limit_q_to_1(&b.poly)?,
                bnumber: b.number,
                bpoly: b.poly,
                beta_number: beta_number(n),
            })
        })
        .collect()
}

pub fn cmd_table(cli: &Cli, max_n: usize) -> Result<Outcome, Error> {
    check_cap(cli, max_n)?;
    let rows = table_rows(max_n)?;
    let st = style(cli);
    let x = |p: &XPoly| render::poly(p.coeffs(), "X", st);
    let c = |v: &QRat| render::qrat(v, st);
    let text = match cli.format {
        OutputFormat::Json => rows
            .iter()
            .map(|r| serde_json::to_string(r).expect("row serializes") + "\n")
            .collect(),
        OutputFormat::Csv => csv_text(
            &["n", "bpoly", "bnumber", "beta_number", "limit"],
            &rows
                .iter()
                .map(|r| vec![r.n.to_string(), x(&r.bpoly), c(&r.bnumber), c(&r.beta_number), x(&r.limit)])
                .collect::<Vec<_>>(),
        ),
        OutputFormat::Plain => rows
            .iter()
            .map(|r| {
                format!(
                    "n = {}\n  B(X)    = {}\n  B       = {}\n  beta    = {}\n  q -> 1  = {}\n",
                    r.n,
                    x(&r.bpoly),
                    c(&r.bnumber),
                    c(&r.beta_number),
                    x(&r.limit)
                )
            })
            .collect(),
        OutputFormat::Latex => {
            let mut t = String::from(
                "\\begin{tabular}{c|c|c|c|c}\n\
                 $n$ & $B_{n,q}(X)$ & $B_{n,q}$ & $\\beta_{n,q}$ & $\\lim_{q \\to 1} B_{n,q}(X)$ \\\\\n\
                 \\hline\n",
            );
            for r in &rows {
                t.push_str(&format!(
                    "{} & ${}$ & ${}$ & ${}$ & ${}$ \\\\\n",
                    r.n,
                    x(&r.bpoly),
                    c(&r.bnumber),
                    c(&r.beta_number),
                    x(&r.limit)
                ));
            }
            t.push_str("\\end{tabular}\n");
            t
        }
    };
    Ok(Outcome::ok(text))
}

fn report_stream(cli: &Cli, reports: &[VerifyReport], started: Instant) -> Outcome {
    let summary = SuiteSummary::from_reports(reports, started);
    let stdout = match cli.format {
        OutputFormat::Json => to_json_lines(reports, &summary),
        OutputFormat::Plain => {
            let mut s: String = reports.iter().map(|r| r.summary_line() + "\n").collect();
            s.push_str(&format!(
                "{} checks, {} passed, {} failed ({} ms)\n",
                summary.total, summary.passed, summary.failed, summary.elapsed_ms
            ));
            s
        }
        OutputFormat::Csv => csv_text(
            &["identity", "params", "passed", "lhs", "rhs", "detail"],
            &reports
                .iter()
                .map(|r| {
                    vec![
                        r.identity.to_string(),
                        serde_json::to_string(&r.params).expect("params serialize"),
                        r.passed.to_string(),
                        r.lhs.clone().unwrap_or_default(),
                        r.rhs.clone().unwrap_or_default(),
                        r.detail.clone(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        OutputFormat::Latex => {
            let mut t = String::from("\\begin{tabular}{l|l|c}\nidentity & parameters & result \\\\\n\\hline\n");
            for r in reports {
                let params = r
                    .params
                    .iter()
                    .map(|(k, v)| format!("${k} = {v}$"))
                    .collect::<Vec<_>>()
                    .join(", ");
                let name = r.identity.to_string().replace('_', "\\_");
                let status = if r.passed { "pass" } else { "FAIL" };
                t.push_str(&format!("{name} & {params} & {status} \\\\\n"));
            }
            t.push_str("\\end{tabular}\n");
            t
        }
    };
    Outcome {
        code: if summary.failed == 0 { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

pub fn cmd_verify(cli: &Cli, max_n: usize, max_big_n: usize, tags: &[String]) -> Result<Outcome, Error> {
    check_cap(cli, max_n)?;
    if max_big_n == 0 {
        return Err(Error::Usage("--max-N must be at least 1".into()));
    }
    let selected = if tags.is_empty() {
        IdentityTag::ALL.to_vec()
    } else {
        tags.iter().map(|t| t.parse()).collect::<Result<Vec<IdentityTag>, Error>>()?
    };
    let started = Instant::now();
    let reports = Verifier::new().run_suite(max_n, max_big_n, &selected);
    Ok(report_stream(cli, &reports, started))
}

pub fn cmd_numcheck(cli: &Cli, q0: &str, truncation: usize, tolerance: f64) -> Result<Outcome, Error> {
    let q0: Rational = parse_rational(q0).map_err(|e| Error::Usage(e.to_string()))?;
    let started = Instant::now();
    let reports = numeric_suite(&q0, truncation, tolerance)?;
    Ok(report_stream(cli, &reports, started))
}
