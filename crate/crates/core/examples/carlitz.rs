// Carlitz's eta and beta q-polynomials in Y = q^X.

use qbernoulli::qexp::{
    at_origin, beta, beta_number, eta, eval_at_integer, mixed_basis_expansion, power_sum,
    scaled_x_derivative,
};
use qbernoulli::{QRat, Result};

pub fn run_example() -> Result<()> {
    for n in 0..=3 {
        println!("beta_{n} = {}", beta_number(n));
    }
    println!("beta_2(X) = {}", beta(2));
    println!("beta_2(X) in LaTeX: {}", beta(2).to_latex(true));

    // eta_n(N) - eta_n = n * sum_{k<N} q^k [k]_q^(n-1)
    let (n, big_n) = (3, 4);
    let lhs = &QRat::from_integer(n as i64) * &power_sum(n, big_n)?;
    let e = eta(n);
    let rhs = &eval_at_integer(&e, big_n) - &at_origin(&e);
    assert_eq!(lhs, rhs);
    println!("3 * sum_(k<4) q^k [k]^2 = {lhs}");

    // beta_n(X) rebuilt from the numbers beta_0..beta_n in the basis q^(kX) [X]^(n-k).
    let numbers: Vec<QRat> = (0..=4).map(beta_number).collect();
    assert_eq!(mixed_basis_expansion(&numbers, 4)?, beta(4));

    println!("d/dX eta_2 (log q removed) = {}", scaled_x_derivative(&eta(2)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
