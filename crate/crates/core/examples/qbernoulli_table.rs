// q-Bernoulli polynomials from the linear system, with their antiderivatives.

use qbernoulli::bernoulli::{build_system, eq1_rhs, solve_system};
use qbernoulli::xpoly::{jackson_integral, shifted_bound};
use qbernoulli::{qbernoulli, Result, XPoly};

pub fn run_example() -> Result<()> {
    for n in 0..=4 {
        let b = qbernoulli(n)?;
        println!("B_{n},q(X) = {}", b.poly.to_latex(true));
        println!("    B_{n},q  = {}", b.number);
        println!("    F_{n},q(X) = {}", b.antiderivative);
        let check = jackson_integral(&b.poly, &XPoly::var(), &shifted_bound());
        assert_eq!(check, eq1_rhs(n));
    }

    // The same coefficients straight from the solver.
    let system = build_system(2);
    let coeffs = solve_system(&system)?;
    assert_eq!(XPoly::from_coeffs(coeffs), qbernoulli(2)?.poly);
    println!("B_2,q as JSON: {}", qbernoulli(2)?.poly.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
