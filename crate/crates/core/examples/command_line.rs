// Driving the command line in-process.

use qbernoulli::cli;
use qbernoulli::Result;

pub fn run_example() -> Result<()> {
    let out = cli::run(["qbern", "compute", "--n", "1", "--what", "bpoly", "--format", "latex"]);
    print!("{}", out.stdout);
    assert_eq!(out.code, 0);

    let out = cli::run(["qbern", "--format", "plain", "--bracket-notation", "table", "--max-n", "3"]);
    print!("{}", out.stdout);

    let out = cli::run(["qbern", "--format", "csv", "verify", "--tags", "COR2,EQ8", "--max-n", "3"]);
    print!("{}", out.stdout);
    assert_eq!(out.code, 0);

    let out = cli::run(["qbern", "numcheck", "--q", "1"]);
    eprint!("{}", out.stderr);
    assert_eq!(out.code, 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
