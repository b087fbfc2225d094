//! Identity checks with structured, serializable reports.
//!
//! Every exact identity is evaluated in Q(q) and compared by canonical form;
//! only [`IdentityTag::NumJackson`] touches floating point. A failed check
//! is a report with `passed = false`, never a panic.

mod numeric;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bernoulli::{
    beta_from_antiderivative, beta_via_remark, classical_bernoulli, eq1_rhs, limit_q_to_1,
    qbernoulli, qbernoulli_double_sum, QBernoulliResult,
};
use crate::error::{Error, Result};
use crate::exactq::{bracket, format_rational, integer, rational, QPoly, QRat, Rational};
use crate::qexp::{
    at_origin, beta, eta, eval_at_integer, from_xpoly, mixed_basis_expansion, power_sum,
    scaled_x_derivative, QExpPoly,
};
use crate::xpoly::{classical_derivative, jackson_integral, shifted_bound, XPoly};

pub use numeric::{numeric_jackson, Branch, JacksonComparison, NumericSample};

/// Default absolute tolerance for the numeric Jackson check.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
/// Default number of series terms for the numeric Jackson check.
pub const DEFAULT_TRUNCATION: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityTag {
    /// Defining integral of `B_{n,q}`.
    Eq1,
    /// Mixed-basis expansion of `η_n`.
    Eq6,
    /// Mixed-basis expansion of `β_n`.
    Eq7,
    /// Carlitz's first four numbers.
    Eq8,
    /// q-power sums through `η_n`.
    Prop2,
    /// X-derivative of `η_n`.
    Prop3,
    /// `B_{n,q}(0) = F'_{n,q}(0)`.
    Prop4,
    /// `F_{n,q}([X]_q) = (η_{n+1}(X) - η_{n+1})/(n+1)`.
    Thm1,
    /// `d/dX F_{n,q}([X]_q) = q^X/(q-1) β_n(X)`, with the factor `log q` removed.
    Cor1,
    /// `B_{n,q} = β_{n,q}`.
    Cor2,
    /// `q -> 1` limit and the double-sum expansion.
    Thm2,
    /// `β_n(X) = (∫_0^s B_{n,q})'` at `s = [X]_q`.
    RemarkF,
    /// `β_n(X) = (∫_0^s ((t-1)/(q-1))^n d_q t)'` at `s = q^X`.
    RemarkBeta,
    /// Series against closed form for the Jackson integral.
    NumJackson,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 14] = [
        IdentityTag::Eq1,
        IdentityTag::Eq6,
        IdentityTag::Eq7,
        IdentityTag::Eq8,
        IdentityTag::Prop2,
        IdentityTag::Prop3,
        IdentityTag::Prop4,
        IdentityTag::Thm1,
        IdentityTag::Cor1,
        IdentityTag::Cor2,
        IdentityTag::Thm2,
        IdentityTag::RemarkF,
        IdentityTag::RemarkBeta,
        IdentityTag::NumJackson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityTag::Eq1 => "EQ1",
            IdentityTag::Eq6 => "EQ6",
            IdentityTag::Eq7 => "EQ7",
            IdentityTag::Eq8 => "EQ8",
            IdentityTag::Prop2 => "PROP2",
            IdentityTag::Prop3 => "PROP3",
            IdentityTag::Prop4 => "PROP4",
            IdentityTag::Thm1 => "THM1",
            IdentityTag::Cor1 => "COR1",
            IdentityTag::Cor2 => "COR2",
            IdentityTag::Thm2 => "THM2",
            IdentityTag::RemarkF => "REMARK_F",
            IdentityTag::RemarkBeta => "REMARK_BETA",
            IdentityTag::NumJackson => "NUM_JACKSON",
        }
    }
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Usage(format!("unknown identity tag {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ParamValue {
    Int(i64),
    Rational(Rational),
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(n) => serializer.serialize_i64(*n),
            ParamValue::Rational(r) => serializer.serialize_str(&format_rational(r)),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Rational(r) => write!(f, "{r}"),
        }
    }
}

impl From<i64> for ParamValue {
    fn from(n: i64) -> Self {
        ParamValue::Int(n)
    }
}

impl From<usize> for ParamValue {
    fn from(n: usize) -> Self {
        ParamValue::Int(n as i64)
    }
}

impl From<Rational> for ParamValue {
    fn from(r: Rational) -> Self {
        ParamValue::Rational(r)
    }
}

pub type Params = BTreeMap<String, ParamValue>;

/// Builds a parameter map from `(name, value)` pairs.
pub fn params<I, K, V>(pairs: I) -> Params
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: Into<ParamValue>,
{
    pairs.into_iter().map(|(k, v)| (k.into(), v.into())).collect()
}

/// Outcome of one identity at one parameter set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub identity: IdentityTag,
    pub params: Params,
    pub passed: bool,
    /// Canonical JSON of the left-hand side.
    #[serde(serialize_with = "raw_json")]
    pub lhs: Option<String>,
    /// Canonical JSON of the right-hand side.
    #[serde(serialize_with = "raw_json")]
    pub rhs: Option<String>,
    pub detail: String,
}

fn raw_json<S: Serializer>(value: &Option<String>, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::Error as _;
    match value {
        None => serializer.serialize_none(),
        Some(text) => serde_json::value::RawValue::from_string(text.clone())
            .map_err(S::Error::custom)?
            .serialize(serializer),
    }
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One-line human summary, e.g. `PASS COR2 n=3`.
    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let mut line = format!("{status} {} {params}", self.identity);
        if !self.passed {
            line.push_str(": ");
            line.push_str(&self.detail);
        }
        line.trim_end().to_owned()
    }
}

/// Trailing record of a report stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub elapsed_ms: u128,
}

impl SuiteSummary {
    pub fn from_reports(reports: &[VerifyReport], started: Instant) -> Self {
        let passed = reports.iter().filter(|r| r.passed).count();
        SuiteSummary {
            total: reports.len(),
            passed,
            failed: reports.len() - passed,
            elapsed_ms: started.elapsed().as_millis(),
        }
    }
}

/// Exact comparison of two canonical values.
fn compare<T: Serialize + PartialEq>(
    tag: IdentityTag,
    params: Params,
    lhs: &T,
    rhs: &T,
    what: &str,
) -> VerifyReport {
    let passed = lhs == rhs;
    let json = |v: &T| serde_json::to_string(v).expect("canonical value serializes");
    VerifyReport {
        identity: tag,
        params,
        passed,
        lhs: Some(json(lhs)),
        rhs: Some(json(rhs)),
        detail: if passed {
            what.to_owned()
        } else {
            format!("{what}: sides differ")
        },
    }
}

fn errored(tag: IdentityTag, params: Params, err: &Error) -> VerifyReport {
    VerifyReport {
        identity: tag,
        params,
        passed: false,
        lhs: None,
        rhs: None,
        detail: format!("evaluation failed: {err}"),
    }
}

/// Checks `∫_X^{qX+1} P(t) d_q t = (q-1) X^{n+1} + X^n` for a candidate `P`.
pub fn check_eq1(n: usize, candidate: &XPoly) -> VerifyReport {
    let lhs = jackson_integral(candidate, &XPoly::var(), &shifted_bound());
    compare(
        IdentityTag::Eq1,
        params([("n", n)]),
        &lhs,
        &eq1_rhs(n),
        "integral of B_n,q over [X, qX+1] equals (q-1)X^(n+1) + X^n",
    )
}

/// The values Carlitz tabulates for `β_{0..3,q}`, built from q-brackets.
pub fn carlitz_table_value(n: usize) -> Option<QRat> {
    let q = QRat::q();
    let q_minus_1 = QRat::from_poly(QPoly::from_ints(&[-1, 1]));
    match n {
        0 => Some(QRat::one()),
        1 => Some(-(&QRat::one() / &bracket(2))),
        2 => Some(&q / &(&bracket(2) * &bracket(3))),
        3 => Some(-(&(&q * &q_minus_1) / &(&bracket(3) * &bracket(4)))),
        _ => None,
    }
}

/// Integrands and bounds for the numeric Jackson grid.
pub fn numeric_fixtures() -> Vec<(usize, Rational, Rational)> {
    let bounds = [(integer(0), integer(1)), (rational(1, 2), integer(2))];
    let mut out = Vec::new();
    for (a, b) in bounds {
        for degree in 0..=3 {
            out.push((degree, a.clone(), b.clone()));
        }
    }
    out
}

/// Compares series and closed form for `∫_a^b t^degree d_q t`.
pub fn numeric_report(degree: usize, sample: &NumericSample) -> VerifyReport {
    let mut p = params([("degree", degree)]);
    p.insert("q0".into(), sample.q0.clone().into());
    p.insert("a".into(), sample.a.clone().into());
    p.insert("b".into(), sample.b.clone().into());
    let integrand = XPoly::monomial(QRat::one(), degree);
    match numeric_jackson(&integrand, sample) {
        Ok(cmp) => {
            let passed = cmp.passes(sample.tolerance);
            let num = |x: f64| serde_json::to_string(&x).expect("finite float");
            VerifyReport {
                identity: IdentityTag::NumJackson,
                params: p,
                passed,
                lhs: Some(num(cmp.series_value)),
                rhs: Some(num(cmp.closed_form_value)),
                detail: format!(
                    "series vs closed form: |diff| = {:.3e}, tail bound = {:.3e}, tolerance = {:.1e}",
                    cmp.error(),
                    cmp.tail_bound,
                    sample.tolerance
                ),
            }
        }
        Err(e) => errored(IdentityTag::NumJackson, p, &e),
    }
}

/// The numeric fixture grid at one `q0`.
pub fn numeric_suite(q0: &Rational, truncation: usize, tolerance: f64) -> Result<Vec<VerifyReport>> {
    numeric_fixtures()
        .into_iter()
        .map(|(degree, a, b)| {
            let sample = NumericSample::new(q0.clone(), a, b, truncation, tolerance)?;
            Ok(numeric_report(degree, &sample))
        })
        .collect()
}

/// Lazily computed, shared per-`n` values. Results are identical with or
/// without the cache.
struct Memo<T> {
    slots: Mutex<HashMap<usize, Arc<OnceLock<T>>>>,
}

impl<T> Default for Memo<T> {
    fn default() -> Self {
        Memo {
            slots: Mutex::new(HashMap::new()),
        }
    }
}

impl<T: Clone> Memo<T> {
    fn get(&self, n: usize, compute: impl FnOnce() -> T) -> T {
        let slot = {
            let mut slots = self.slots.lock().expect("memo lock poisoned");
            Arc::clone(slots.entry(n).or_default())
        };
        slot.get_or_init(compute).clone()
    }
}

/// Runs identity checks, sharing intermediate results between them.
#[derive(Default)]
pub struct Verifier {
    bernoulli: Memo<Result<Arc<QBernoulliResult>>>,
    eta: Memo<Arc<QExpPoly>>,
    beta: Memo<Arc<QExpPoly>>,
}

fn int_param(params: &Params, name: &str) -> Result<i64> {
    match params.get(name) {
        Some(ParamValue::Int(v)) => Ok(*v),
        Some(other) => Err(Error::Usage(format!("parameter {name} must be an integer, got {other}"))),
        None => Err(Error::Usage(format!("missing parameter {name}"))),
    }
}

fn rational_param(params: &Params, name: &str) -> Result<Rational> {
    match params.get(name) {
        Some(ParamValue::Int(v)) => Ok(integer(*v)),
        Some(ParamValue::Rational(r)) => Ok(r.clone()),
        None => Err(Error::Usage(format!("missing parameter {name}"))),
    }
}

fn index_param(params: &Params, name: &str, min: i64) -> Result<usize> {
    let v = int_param(params, name)?;
    if v < min {
        return Err(Error::Usage(format!("parameter {name} must be at least {min}, got {v}")));
    }
    Ok(v as usize)
}

fn expect_keys(tag: IdentityTag, params: &Params, keys: &[&str]) -> Result<()> {
    for k in params.keys() {
        if !keys.contains(&k.as_str()) {
            return Err(Error::Usage(format!("{tag} does not take parameter {k}")));
        }
    }
    Ok(())
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    fn bernoulli(&self, n: usize) -> Result<Arc<QBernoulliResult>> {
        self.bernoulli.get(n, || qbernoulli(n).map(Arc::new))
    }

    fn eta(&self, n: usize) -> Arc<QExpPoly> {
        self.eta.get(n, || Arc::new(eta(n)))
    }

    fn beta(&self, n: usize) -> Arc<QExpPoly> {
        self.beta.get(n, || Arc::new(beta(n)))
    }

    /// Checks one identity. Usage errors (bad tag parameters) are `Err`;
    /// mathematical failures are reports with `passed = false`.
    pub fn run_identity(&self, tag: IdentityTag, params: &Params) -> Result<VerifyReport> {
        use IdentityTag::*;
        let p = params.clone();
        let report = match tag {
            NumJackson => {
                expect_keys(tag, params, &["degree", "q0", "a", "b"])?;
                let degree = index_param(params, "degree", 0)?;
                let sample = NumericSample::new(
                    rational_param(params, "q0")?,
                    rational_param(params, "a")?,
                    rational_param(params, "b")?,
                    DEFAULT_TRUNCATION,
                    DEFAULT_TOLERANCE,
                )?;
                numeric_report(degree, &sample)
            }
            Prop2 => {
                expect_keys(tag, params, &["n", "N"])?;
                let n = index_param(params, "n", 1)?;
                let big_n = index_param(params, "N", 1)?;
                let lhs = &QRat::from_integer(n as i64) * &power_sum(n, big_n)?;
                let eta_n = self.eta(n);
                let rhs = &eval_at_integer(&eta_n, big_n) - &at_origin(&eta_n);
                compare(tag, p, &lhs, &rhs, "n * power sum equals eta_n(N) - eta_n")
            }
            _ => {
                expect_keys(tag, params, &["n"])?;
                let min = if tag == Prop3 { 1 } else { 0 };
                let n = index_param(params, "n", min)?;
                if tag == Eq8 && n > 3 {
                    return Err(Error::Usage(format!("EQ8 covers n <= 3, got {n}")));
                }
                self.exact(tag, n, p)
            }
        };
        Ok(report)
    }

    fn exact(&self, tag: IdentityTag, n: usize, p: Params) -> VerifyReport {
        use IdentityTag::*;
        let with_b = |f: &dyn Fn(&QBernoulliResult) -> VerifyReport| match self.bernoulli(n) {
            Ok(b) => f(&b),
            Err(e) => errored(tag, p.clone(), &e),
        };
        match tag {
            Eq1 => with_b(&|b| check_eq1(n, &b.poly)),
            Eq6 => {
                let numbers: Vec<QRat> = (0..=n).map(|k| at_origin(&self.eta(k))).collect();
                match mixed_basis_expansion(&numbers, n) {
                    Ok(lhs) => compare(tag, p, &lhs, &*self.eta(n), "mixed-basis expansion equals eta_n"),
                    Err(e) => errored(tag, p, &e),
                }
            }
            Eq7 => {
                let numbers: Vec<QRat> = (0..=n).map(|k| at_origin(&self.beta(k))).collect();
                match mixed_basis_expansion(&numbers, n) {
                    Ok(lhs) => compare(tag, p, &lhs, &*self.beta(n), "mixed-basis expansion equals beta_n"),
                    Err(e) => errored(tag, p, &e),
                }
            }
            Eq8 => {
                let table = carlitz_table_value(n).expect("n <= 3 checked by caller");
                compare(tag, p, &at_origin(&self.beta(n)), &table, "beta_n,q matches the tabulated value")
            }
            Prop3 => {
                let lhs = scaled_x_derivative(&self.eta(n));
                let factor = &QRat::from_integer(n as i64)
                    / &QRat::from_poly(QPoly::from_ints(&[-1, 1]));
                let rhs = &QExpPoly::monomial(factor, 1) * &*self.beta(n - 1);
                compare(tag, p, &lhs, &rhs, "scaled derivative of eta_n equals n/(q-1) Y beta_(n-1)")
            }
            Prop4 => with_b(&|b| {
                let slope = classical_derivative(&b.antiderivative).coeff(0);
                compare(tag, p.clone(), &b.poly.coeff(0), &slope, "B_n,q(0) equals F'_n,q(0)")
            }),
            Thm1 => with_b(&|b| {
                let lhs = from_xpoly(&b.antiderivative);
                let eta_next = self.eta(n + 1);
                let shifted = &*eta_next - &QExpPoly::constant(at_origin(&eta_next));
                let rhs = shifted.scale(&QRat::from_integer(n as i64 + 1).inv().expect("nonzero"));
                compare(tag, p.clone(), &lhs, &rhs, "F_n,q([X]_q) equals (eta_(n+1)(X) - eta_(n+1))/(n+1)")
            }),
            Cor1 => with_b(&|b| {
                // d/dX of F([X]_q) = F'([X]_q) · log q/(q-1) · Y, with log q removed.
                let lhs = scaled_x_derivative(&from_xpoly(&b.antiderivative));
                let y_over = QExpPoly::monomial(
                    QRat::from_poly(QPoly::from_ints(&[-1, 1])).inv().expect("nonzero"),
                    1,
                );
                let rhs = &y_over * &*self.beta(n);
                compare(tag, p.clone(), &lhs, &rhs, "derivative of F_n,q([X]_q) equals Y/(q-1) beta_n")
            }),
            Cor2 => with_b(&|b| {
                compare(tag, p.clone(), &b.number, &at_origin(&self.beta(n)), "B_n,q equals beta_n,q")
            }),
            Thm2 => with_b(&|b| {
                let classical = classical_bernoulli(n);
                let limit = match limit_q_to_1(&b.poly) {
                    Ok(l) => l,
                    Err(e) => return errored(tag, p.clone(), &e),
                };
                if limit != classical {
                    return compare(tag, p.clone(), &limit, &classical, "q -> 1 limit equals B_n(X)");
                }
                let rebuilt = qbernoulli_double_sum(n);
                if rebuilt != b.poly {
                    return compare(tag, p.clone(), &rebuilt, &b.poly, "double-sum expansion equals B_n,q(X)");
                }
                compare(
                    tag,
                    p.clone(),
                    &limit,
                    &classical,
                    "q -> 1 limit equals B_n(X); double-sum expansion equals B_n,q(X)",
                )
            }),
            RemarkF => with_b(&|b| {
                let lhs = beta_from_antiderivative(&b.antiderivative);
                compare(tag, p.clone(), &lhs, &*self.beta(n), "F'_n,q([X]_q) equals beta_n(X)")
            }),
            RemarkBeta => compare(
                tag,
                p,
                &beta_via_remark(n),
                &*self.beta(n),
                "derivative of the q-integral of ((t-1)/(q-1))^n at s = q^X equals beta_n(X)",
            ),
            Prop2 | NumJackson => unreachable!("handled by run_identity"),
        }
    }

    /// The parameter grid for `tag`, in report order.
    pub fn grid(tag: IdentityTag, max_n: usize, max_big_n: usize) -> Vec<Params> {
        use IdentityTag::*;
        let ns = |lo: usize, hi: usize| -> Vec<Params> {
            (lo..=hi.max(lo)).map(|n| params([("n", n)])).collect()
        };
        match tag {
            Eq8 => ns(0, max_n.min(3)),
            Prop3 => ns(1, max_n),
            Prop2 => {
                let mut out = Vec::new();
                for n in 1..=max_n.max(1) {
                    for big_n in 1..=max_big_n.max(1) {
                        out.push(params([("n", n), ("N", big_n)]));
                    }
                }
                out
            }
            NumJackson => [rational(1, 2), integer(2)]
                .into_iter()
                .flat_map(|q0| {
                    numeric_fixtures().into_iter().map(move |(degree, a, b)| {
                        let mut p = params([("degree", degree)]);
                        p.insert("q0".into(), q0.clone().into());
                        p.insert("a".into(), a.into());
                        p.insert("b".into(), b.into());
                        p
                    })
                })
                .collect(),
            _ => ns(0, max_n),
        }
    }

    /// Runs the selected tags over their full grids. Order is fixed: by tag,
    /// then by parameters as listed in [`Verifier::grid`].
    pub fn run_suite(&self, max_n: usize, max_big_n: usize, tags: &[IdentityTag]) -> Vec<VerifyReport> {
        let mut selected: Vec<IdentityTag> = tags.to_vec();
        selected.sort();
        selected.dedup();
        let jobs: Vec<(IdentityTag, Params)> = selected
            .into_iter()
            .flat_map(|tag| Self::grid(tag, max_n, max_big_n).into_iter().map(move |p| (tag, p)))
            .collect();
        jobs.par_iter()
            .map(|(tag, p)| {
                self.run_identity(*tag, p)
                    .unwrap_or_else(|e| errored(*tag, p.clone(), &e))
            })
            .collect()
    }
}

/// Checks a single identity with a fresh cache.
pub fn run_identity(tag: IdentityTag, params: &Params) -> Result<VerifyReport> {
    Verifier::new().run_identity(tag, params)
}

/// Every identity over its full grid up to `max_n` (and `max_big_n` for the
/// power sums).
pub fn run_suite(max_n: usize, max_big_n: usize) -> Vec<VerifyReport> {
    Verifier::new().run_suite(max_n, max_big_n, &IdentityTag::ALL)
}

/// JSON lines: one report per line, then the summary object.
pub fn to_json_lines(reports: &[VerifyReport], summary: &SuiteSummary) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_json());
        out.push('\n');
    }
    out.push_str(&serde_json::to_string(summary).expect("summary serializes"));
    out.push('\n');
    out
}
