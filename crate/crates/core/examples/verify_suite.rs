// Structured identity reports, including a deliberately broken input.

use qbernoulli::verify::{check_eq1, params, IdentityTag, Verifier};
use qbernoulli::{qbernoulli, QRat, Result, XPoly};

pub fn run_example() -> Result<()> {
    let verifier = Verifier::new();
    let report = verifier.run_identity(IdentityTag::Cor2, &params([("n", 3usize)]))?;
    println!("{}", report.to_json());
    assert!(report.passed);

    let reports = verifier.run_suite(4, 3, &IdentityTag::ALL);
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} reports, {failed} failed", reports.len());
    assert_eq!(failed, 0);

    let mut coeffs = qbernoulli(2)?.poly.into_coeffs();
    coeffs[0] = &coeffs[0] + &QRat::one();
    let broken = check_eq1(2, &XPoly::from_coeffs(coeffs));
    println!("{}", broken.summary_line());
    assert!(!broken.passed);

    assert!("NOPE".parse::<IdentityTag>().is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
