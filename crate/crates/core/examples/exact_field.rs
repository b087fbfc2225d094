// Arithmetic in Q(q): canonical fractions, q-brackets, gcd, evaluation.

use qbernoulli::exactq::{qpoly_gcd, rational};
use qbernoulli::{bracket, QPoly, QRat, Result};

pub fn run_example() -> Result<()> {
    let q = QRat::q();
    let one = QRat::one();

    // (q^2 - 1)/(q - 1) reduces to q + 1.
    let r = QRat::new(QPoly::from_ints(&[-1, 0, 1]), QPoly::from_ints(&[-1, 1]))?;
    assert_eq!(r, bracket(2));
    println!("(q^2 - 1)/(q - 1) = {r}");

    // [2]_q [3]_q / [6]_q
    let ratio = &(&bracket(2) * &bracket(3)) / &bracket(6);
    println!("[2][3]/[6] = {ratio}");

    let x = &(&one / &(&q + &one)) - &(&q / &(&q * &q + &one));
    println!("1/(q+1) - q/(q^2+1) = {x}");
    println!("  as JSON: {}", x.to_json());
    assert_eq!(QRat::from_json(&x.to_json())?, x);

    let g = qpoly_gcd(&QPoly::from_ints(&[-1, 0, 0, 1]), &QPoly::from_ints(&[-1, 0, 1]))?;
    println!("gcd(q^3 - 1, q^2 - 1) = {g}");
    assert_eq!(g, QPoly::from_ints(&[-1, 1]));

    println!("[5]_q at q = 1/2: {}", bracket(5).eval(&rational(1, 2))?);
    println!("[5]_q as q -> 1: {}", bracket(5).limit_at_1()?);
    assert!((&one / &(&q - &one)).eval(&rational(1, 1)).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
