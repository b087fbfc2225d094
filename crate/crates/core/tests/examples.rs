macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(exact_field, "exact_field.rs");
example!(q_calculus, "q_calculus.rs");
example!(carlitz, "carlitz.rs");
example!(qbernoulli_table, "qbernoulli_table.rs");
example!(classical_limit, "classical_limit.rs");
example!(verify_suite, "verify_suite.rs");
example!(numeric_jackson, "numeric_jackson.rs");
example!(command_line, "command_line.rs");

#[test]
fn exact_field_example_runs() {
    exact_field::run_example().expect("exact_field example");
}

#[test]
fn q_calculus_example_runs() {
    q_calculus::run_example().expect("q_calculus example");
}

#[test]
fn carlitz_example_runs() {
    carlitz::run_example().expect("carlitz example");
}

#[test]
fn qbernoulli_table_example_runs() {
    qbernoulli_table::run_example().expect("qbernoulli_table example");
}

#[test]
fn classical_limit_example_runs() {
    classical_limit::run_example().expect("classical_limit example");
}

#[test]
fn verify_suite_example_runs() {
    verify_suite::run_example().expect("verify_suite example");
}

#[test]
fn numeric_jackson_example_runs() {
    numeric_jackson::run_example().expect("numeric_jackson example");
}

#[test]
fn command_line_example_runs() {
    command_line::run_example().expect("command_line example");
}
