// q-derivative, q-antiderivative and the Jackson integral on polynomials in X.

use qbernoulli::xpoly::{dilate, jackson_integral, q_antiderivative, q_derivative, shifted_bound};
use qbernoulli::{bracket, QRat, Result, XPoly};

pub fn run_example() -> Result<()> {
    let x = XPoly::var();
    let cube = x.pow(3);

    // D_q X^3 = [3]_q X^2
    let d = q_derivative(&cube);
    assert_eq!(d, XPoly::monomial(bracket(3), 2));
    println!("D_q X^3 = {d}");

    // Difference quotient (f(qX) - f(X)) / ((q - 1) X)
    let num = &dilate(&cube) - &cube;
    println!("f(qX) - f(X) = {num}");

    let f = q_antiderivative(&x.pow(2));
    println!("q-antiderivative of X^2: {f}");
    assert_eq!(q_derivative(&f), x.pow(2));

    let zero = XPoly::zero();
    let one = XPoly::one();
    let area = jackson_integral(&x.pow(2), &zero, &one);
    println!("int_0^1 t^2 d_q t = {area}");
    assert_eq!(area, XPoly::constant(bracket(3).inv()?));

    // The window used to define B_{n,q}: from X to qX + 1.
    let w = jackson_integral(&XPoly::one(), &x, &shifted_bound());
    println!("int_X^(qX+1) 1 d_q t = {w}");
    assert_eq!(w, XPoly::from_coeffs(vec![QRat::one(), &QRat::q() - &QRat::one()]));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
