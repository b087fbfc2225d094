//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the PASS/FAIL lines are always printed; exits non-zero if any fail.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

use qbernoulli::bernoulli::{
    beta_via_f, beta_via_remark, classical_bernoulli, limit_q_to_1, qbernoulli_double_sum, solve_system,
    LinearSystem,
};
use qbernoulli::exactq::{integer, rational, Rational};
use qbernoulli::qexp::{
    at_origin, beta, beta_number, eta, eta_number, eval_at_integer, from_xpoly, mixed_basis_expansion,
    power_sum, scaled_x_derivative,
};
use qbernoulli::verify::{check_eq1, numeric_jackson, NumericSample};
use qbernoulli::xpoly::{classical_derivative, jackson_integral};
use qbernoulli::{bracket, qbernoulli, Error, QExpPoly, QPoly, QRat, XPoly};

type Check = Result<String, String>;

fn qp(cs: &[i64]) -> QRat {
    QRat::from_poly(QPoly::from_ints(cs))
}

fn frac(num: &[i64], den: &[i64]) -> QRat {
    QRat::new(QPoly::from_ints(num), QPoly::from_ints(den)).expect("nonzero denominator")
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn b(n: usize) -> Result<qbernoulli::QBernoulliResult, String> {
    qbernoulli(n).map_err(|e| format!("qbernoulli({n}): {e}"))
}

fn examples_reproduced() -> Check {
    let x = XPoly::var();
    let b0 = XPoly::one();
    let b1 = &x - &XPoly::constant(frac(&[1], &[1, 1]));
    // X^2 - ((2q+1)/(q^2+q+1)) X + q/((q+1)(q^2+q+1))
    let b2 = XPoly::from_coeffs(vec![
        frac(&[0, 1], &[1, 2, 2, 1]),
        frac(&[-1, -2], &[1, 1, 1]),
        QRat::one(),
    ]);
    for (n, expected) in [b0, b1, b2].into_iter().enumerate() {
        let got = b(n)?.poly;
        ensure(got == expected, || format!("B_{n},q(X) = {got}, expected {expected}"))?;
    }
    Ok("B_0, B_1, B_2 match exactly".into())
}

fn numbers_match_carlitz() -> Check {
    let table = [
        QRat::one(),
        -(&QRat::one() / &bracket(2)),
        &QRat::q() / &(&bracket(2) * &bracket(3)),
        -(&(&QRat::q() * &qp(&[-1, 1])) / &(&bracket(3) * &bracket(4))),
    ];
    for n in 0..=12 {
        let ours = b(n)?.number;
        let carlitz = beta_number(n);
        ensure(ours == carlitz, || format!("n = {n}: {ours} vs {carlitz}"))?;
        if let Some(t) = table.get(n) {
            ensure(&ours == t, || format!("n = {n}: {ours} vs tabulated {t}"))?;
        }
    }
    Ok("n = 0..=12 agree; n <= 3 equal the tabulated values".into())
}

fn defining_integral() -> Check {
    let x = XPoly::var();
    let upper = XPoly::from_coeffs(vec![QRat::one(), QRat::q()]);
    for n in 0..=12 {
        let lhs = jackson_integral(&b(n)?.poly, &x, &upper);
        let rhs = XPoly::monomial(qp(&[-1, 1]), n + 1) + XPoly::monomial(QRat::one(), n);
        ensure(lhs == rhs, || format!("n = {n}: residual {}", &lhs - &rhs))?;
    }
    Ok("zero residual for n = 0..=12".into())
}

fn antiderivative_through_eta() -> Check {
    for n in 0..=10 {
        let lhs = from_xpoly(&b(n)?.antiderivative);
        let shifted = &eta(n + 1) - &QExpPoly::constant(eta_number(n + 1));
        let rhs = shifted.scale(&QRat::from_integer(n as i64 + 1).inv().unwrap());
        ensure(lhs == rhs, || format!("n = {n}"))?;
    }
    Ok("n = 0..=10".into())
}

fn three_routes_to_beta() -> Check {
    for n in 0..=10 {
        let via_f = beta_via_f(n).map_err(|e| e.to_string())?;
        let carlitz = beta(n);
        let via_remark = beta_via_remark(n);
        ensure(via_f == carlitz, || format!("n = {n}: derivative route differs"))?;
        ensure(via_remark == carlitz, || format!("n = {n}: integral route differs"))?;
    }
    Ok("n = 0..=10".into())
}

fn power_sums() -> Check {
    let mut cases = 0;
    for n in 1..=8 {
        let e = eta(n);
        for big_n in 1..=10 {
            let lhs = &QRat::from_integer(n as i64) * &power_sum(n, big_n).map_err(|e| e.to_string())?;
            let rhs = &eval_at_integer(&e, big_n) - &at_origin(&e);
            ensure(lhs == rhs, || format!("n = {n}, N = {big_n}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn eta_derivative() -> Check {
    for n in 1..=10 {
        let lhs = scaled_x_derivative(&eta(n));
        let factor = &QRat::from_integer(n as i64) / &qp(&[-1, 1]);
        let rhs = &QExpPoly::monomial(factor, 1) * &beta(n - 1);
        ensure(lhs == rhs, || format!("n = {n}"))?;
    }
    Ok("n = 1..=10".into())
}

fn mixed_basis() -> Check {
    for n in 0..=10 {
        let en: Vec<QRat> = (0..=n).map(eta_number).collect();
        let bn: Vec<QRat> = (0..=n).map(beta_number).collect();
        let e = mixed_basis_expansion(&en, n).map_err(|e| e.to_string())?;
        let bb = mixed_basis_expansion(&bn, n).map_err(|e| e.to_string())?;
        ensure(e == eta(n), || format!("eta, n = {n}"))?;
        ensure(bb == beta(n), || format!("beta, n = {n}"))?;
    }
    Ok("eta and beta, n = 0..=10".into())
}

/// Classical Bernoulli numbers from `Σ_{k<=n} C(n+1,k) B_k = 0`.
fn bernoulli_numbers(max: usize) -> Vec<Rational> {
    let mut c = vec![vec![integer(1)]];
    for m in 1..=max + 1 {
        let prev = &c[m - 1];
        let row: Vec<Rational> = (0..=m)
            .map(|k| {
                let left = if k > 0 { prev[k - 1].clone() } else { integer(0) };
                let right = prev.get(k).cloned().unwrap_or_else(|| integer(0));
                left + right
            })
            .collect();
        c.push(row);
    }
    let mut out: Vec<Rational> = vec![integer(1)];
    for n in 1..=max {
        let s: Rational = (0..n).map(|k| &c[n + 1][k] * &out[k]).sum();
        out.push(-s / &c[n + 1][n]);
    }
    out
}

fn classical_limit() -> Check {
    let numbers = bernoulli_numbers(12);
    for (n, expected) in numbers.iter().enumerate() {
        let bq = b(n)?;
        let limit = limit_q_to_1(&bq.poly).map_err(|e| format!("n = {n}: {e}"))?;
        let classical = classical_bernoulli(n);
        ensure(limit == classical, || format!("n = {n}: {limit} vs {classical}"))?;
        let c0 = classical.coeff(0).as_constant().unwrap();
        ensure(&c0 == expected, || format!("B_{n}(0) = {c0}, recurrence gives {expected}"))?;
        if n <= 8 {
            ensure(qbernoulli_double_sum(n) == bq.poly, || format!("double sum, n = {n}"))?;
        }
    }
    Ok("limits for n = 0..=12, double sum for n = 0..=8".into())
}

fn constant_term() -> Check {
    for n in 0..=12 {
        let bq = b(n)?;
        let slope = classical_derivative(&bq.antiderivative).coeff(0);
        ensure(bq.poly.coeff(0) == slope, || format!("n = {n}"))?;
        ensure(bq.antiderivative.coeff(1) == slope, || format!("n = {n}: linear coefficient"))?;
    }
    Ok("n = 0..=12".into())
}

fn numeric_series() -> Check {
    let mut worst: f64 = 0.0;
    for q0 in [rational(1, 2), integer(2)] {
        for degree in 0..=3 {
            let sample = NumericSample::new(q0.clone(), integer(0), integer(1), 200, 1e-10)
                .map_err(|e| e.to_string())?;
            let p = XPoly::monomial(QRat::one(), degree);
            let cmp = numeric_jackson(&p, &sample).map_err(|e| e.to_string())?;
            // ∫_0^1 t^d d_q t = 1/[d+1]_q
            let q = if q0 == integer(2) { 2.0f64 } else { 0.5 };
            let expected = (q - 1.0) / (q.powi(degree as i32 + 1) - 1.0);
            ensure(cmp.error() <= 1e-10, || format!("q0 = {q0}, t^{degree}: {cmp:?}"))?;
            ensure((cmp.closed_form_value - expected).abs() <= 1e-12, || {
                format!("q0 = {q0}, t^{degree}: closed form {} vs {expected}", cmp.closed_form_value)
            })?;
            worst = worst.max(cmp.error());
        }
    }
    Ok(format!("max |series - closed form| = {worst:.2e}"))
}

fn random_qrat() -> impl Strategy<Value = QRat> {
    let poly = proptest::collection::vec(-4i64..=4, 1..=3);
    (poly.clone(), poly).prop_map(|(n, d)| {
        let d = if d.iter().all(|&c| c == 0) { vec![1] } else { d };
        QRat::new(QPoly::from_ints(&n), QPoly::from_ints(&d)).unwrap()
    })
}

fn negative_paths() -> Check {
    let mut coeffs = b(2)?.poly.into_coeffs();
    coeffs[1] = &coeffs[1] + &QRat::one();
    let report = check_eq1(2, &XPoly::from_coeffs(coeffs));
    ensure(!report.passed, || "corrupted B_2,q passed".into())?;
    ensure(report.lhs.is_some() && report.rhs.is_some(), || "missing sides".into())?;

    let entry = random_qrat();
    let mut runner = TestRunner::deterministic();
    let (mut solved, mut singular) = (0, 0);
    while solved < 50 {
        let draw = |runner: &mut TestRunner| entry.new_tree(runner).unwrap().current();
        let matrix: Vec<Vec<QRat>> = (0..4).map(|_| (0..4).map(|_| draw(&mut runner)).collect()).collect();
        let x: Vec<QRat> = (0..4).map(|_| draw(&mut runner)).collect();
        let probe = LinearSystem::new(matrix.clone(), vec![QRat::zero(); 4]).unwrap();
        let rhs = probe.apply(&x);
        let system = LinearSystem::new(matrix, rhs).unwrap();
        match solve_system(&system) {
            Ok(got) => {
                ensure(got == x, || format!("system {solved}: solution differs"))?;
                solved += 1;
            }
            Err(Error::Singular { .. }) => singular += 1,
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(format!("corruption detected; 50 random systems round-trip ({singular} singular draws skipped)"))
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "examples B_0..B_2", limit: secs(1), run: examples_reproduced },
        Criterion { id: 2, name: "numbers equal Carlitz's", limit: secs(5), run: numbers_match_carlitz },
        Criterion { id: 3, name: "defining integral residual", limit: secs(5), run: defining_integral },
        Criterion { id: 4, name: "antiderivative via eta", limit: secs(10), run: antiderivative_through_eta },
        Criterion { id: 5, name: "three constructions of beta", limit: secs(10), run: three_routes_to_beta },
        Criterion { id: 6, name: "q-power sums", limit: secs(10), run: power_sums },
        Criterion { id: 7, name: "derivative of eta", limit: secs(5), run: eta_derivative },
        Criterion { id: 8, name: "mixed-basis expansions", limit: secs(10), run: mixed_basis },
        Criterion { id: 9, name: "classical limit and double sum", limit: secs(10), run: classical_limit },
        Criterion { id: 10, name: "constant term", limit: secs(1), run: constant_term },
        Criterion { id: 11, name: "numeric Jackson series", limit: secs(1), run: numeric_series },
        Criterion { id: 12, name: "negative paths", limit: secs(5), run: negative_paths },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let line = match outcome {
            Ok(note) if elapsed < c.limit => format!("PASS [{:>2}] {}: {note} ({elapsed:.2?})", c.id, c.name),
            Ok(note) => format!(
                "FAIL [{:>2}] {}: {note}, but took {elapsed:.2?} (limit {:?})",
                c.id, c.name, c.limit
            ),
            Err(why) => format!("FAIL [{:>2}] {}: {why} ({elapsed:.2?})", c.id, c.name),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
