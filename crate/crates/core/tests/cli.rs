use std::process::{Command, Output};

fn qbern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbern"))
        .args(args)
        .env_remove("QBERN_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_outputs() {
    let out = qbern(&["compute", "--n", "1", "--what", "bpoly", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim_end(), "X - \\frac{1}{q + 1}");

    let out = qbern(&["compute", "--n", "0", "--what", "beta"]);
    assert_eq!(
        stdout(&out).trim_end(),
        r#"{"variable":"Y","meaning":"q^X","coefficients":[{"num":["1/1"],"den":["1/1"]}]}"#
    );

    let out = qbern(&["compute", "--n", "2", "--what", "limit", "--format", "plain"]);
    assert_eq!(stdout(&out).trim_end(), "X^2 - X + 1/6");

    let out = qbern(&["compute", "--n", "3", "--what", "bnumber", "--format", "plain", "--bracket-notation"]);
    assert_eq!(stdout(&out).trim_end(), "-(q^2 - q)/([3]_q[4]_q)");
}

#[test]
fn compute_json_round_trips_byte_for_byte() {
    for what in ["bpoly", "fpoly", "bnumber", "eta", "beta", "classical", "limit"] {
        for n in ["0", "3", "5"] {
            let out = qbern(&["compute", "--n", n, "--what", what]);
            assert_eq!(out.status.code(), Some(0), "{what} {n}");
            let text = stdout(&out);
            let text = text.trim_end();
            let generic: serde_json::Value = serde_json::from_str(text).unwrap();
            let typed = match what {
                "bnumber" => qbernoulli::QRat::from_json(text).unwrap().to_json(),
                "eta" | "beta" => qbernoulli::QExpPoly::from_json(text).unwrap().to_json(),
                _ => qbernoulli::XPoly::from_json(text).unwrap().to_json(),
            };
            assert_eq!(typed, text, "{what} {n}");
            assert_eq!(serde_json::from_str::<serde_json::Value>(&typed).unwrap(), generic);
        }
    }
}

#[test]
fn table_formats() {
    let out = qbern(&["table", "--max-n", "0", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,bpoly,bnumber,beta_number,limit\n0,1,1,1,1\n");

    let out = qbern(&["table", "--max-n", "3", "--format", "csv", "--bracket-notation"]);
    let last = stdout(&out).lines().last().unwrap().to_owned();
    assert!(last.starts_with("3,"));
    assert!(last.contains(",-(q^2 - q)/([3]_q[4]_q),-(q^2 - q)/([3]_q[4]_q),"), "{last}");

    let out = qbern(&["table", "--max-n", "2", "--format", "latex"]);
    let text = stdout(&out);
    assert!(text.starts_with("\\begin{tabular}"));
    assert!(text.contains("1 & $X - \\frac{1}{q + 1}$"));
    assert!(text.contains("$X^2 - \\frac{2q + 1}{q^2 + q + 1} X + \\frac{q}{q^3 + 2q^2 + 2q + 1}$"));

    let out = qbern(&["table", "--max-n", "2"]);
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn verify_exit_codes() {
    let out = qbern(&["verify", "--max-n", "8", "--max-N", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let summary: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(summary["failed"], 0);
    assert_eq!(summary["total"], text.lines().count() - 1);

    let out = qbern(&["verify", "--tags", "COR2", "--max-n", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 14);

    assert_eq!(qbern(&["verify", "--tags", "BOGUS"]).status.code(), Some(2));
}

#[test]
fn numcheck_exit_codes() {
    assert_eq!(qbern(&["numcheck", "--q", "0.5"]).status.code(), Some(0));
    assert_eq!(qbern(&["numcheck", "--q", "2"]).status.code(), Some(0));
    assert_eq!(qbern(&["numcheck", "--q", "1"]).status.code(), Some(2));
    assert_eq!(qbern(&["numcheck", "--q", "0"]).status.code(), Some(2));
    // One term is nowhere near enough for q = 1/2.
    assert_eq!(qbern(&["numcheck", "--q", "1/2", "--truncation", "1"]).status.code(), Some(1));
}

#[test]
fn cap_and_environment_override() {
    assert_eq!(qbern(&["compute", "--n", "13", "--what", "eta"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_qbern"))
        .args(["compute", "--n", "13", "--what", "eta"])
        .env("QBERN_MAX_N", "14")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = qbern(&["--max-n-cap", "21", "compute", "--n", "1", "--what", "eta"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
}

#[test]
fn identical_invocations_give_identical_bytes() {
    for args in [
        &["table", "--max-n", "4", "--format", "latex"][..],
        &["compute", "--n", "6", "--what", "fpoly"],
    ] {
        assert_eq!(qbern(args).stdout, qbern(args).stdout);
    }
    let strip = |o: Output| {
        let s = stdout(&o);
        s.lines().rev().skip(1).map(str::to_owned).collect::<Vec<_>>()
    };
    let args = ["verify", "--max-n", "4", "--max-N", "3"];
    assert_eq!(strip(qbern(&args)), strip(qbern(&args)));
}
