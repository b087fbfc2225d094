//! q-polynomials: polynomials in `Y = q^X` over Q(q).
//!
//! Carlitz's sequences live here:
//!
//! ```text
//! η_n(X) = (q-1)^-n Σ_k (-1)^(n-k) C(n,k) (k/[k]_q)     q^(kX)
//! β_n(X) = (q-1)^-n Σ_k (-1)^(n-k) C(n,k) ((k+1)/[k+1]_q) q^(kX)
//! ```
//!
//! with `k/[k]_q = 1` at `k = 0`. Differentiation in `X` brings down a factor
//! `log q` per power of `Y`; [`scaled_x_derivative`] divides it out so every
//! identity stays inside Q(q)[Y].

use crate::error::{Error, Result};
use crate::exactq::{binomial, bracket, QPoly, QRat, Rational};
use crate::poly::{DensePoly, VarY};
use crate::xpoly::XPoly;

/// Polynomial in `Y = q^X` with coefficients in Q(q).
pub type QExpPoly = DensePoly<VarY>;

/// `[X]_q = (Y - 1)/(q - 1)` as a q-polynomial.
pub fn bracket_x() -> QExpPoly {
    let inv = q_minus_one().inv().expect("q - 1 is nonzero");
    QExpPoly::from_coeffs(vec![-&inv, inv])
}

fn q_minus_one() -> QRat {
    QRat::from_poly(QPoly::from_ints(&[-1, 1]))
}

fn binom(n: usize, k: usize) -> QRat {
    QRat::from_rational(Rational::from_integer(binomial(n, k)))
}

/// `k / [k]_q` with the value 1 at `k = 0`.
fn weight(k: usize) -> QRat {
    if k == 0 {
        QRat::one()
    } else {
        &QRat::from_integer(k as i64) / &bracket(k)
    }
}

fn carlitz(n: usize, shift: usize) -> QExpPoly {
    let prefactor = q_minus_one().pow(n as u32).inv().expect("nonzero");
    let coeffs = (0..=n)
        .map(|k| {
            let c = &binom(n, k) * &weight(k + shift);
            let c = if (n - k) % 2 == 1 { -c } else { c };
            &c * &prefactor
        })
        .collect();
    QExpPoly::from_coeffs(coeffs)
}

/// Carlitz's `η_{n,q}(X)`.
pub fn eta(n: usize) -> QExpPoly {
    carlitz(n, 0)
}

/// Carlitz's q-Bernoulli polynomial `β_{n,q}(X)`.
pub fn beta(n: usize) -> QExpPoly {
    carlitz(n, 1)
}

/// Value at `X = 0`, i.e. `Y = 1`.
pub fn at_origin(p: &QExpPoly) -> QRat {
    p.coeffs().iter().cloned().sum()
}

pub fn eta_number(n: usize) -> QRat {
    at_origin(&eta(n))
}

/// Carlitz's q-Bernoulli number `β_{n,q}`.
pub fn beta_number(n: usize) -> QRat {
    at_origin(&beta(n))
}

/// `Σ_k C(n,k) c_k q^(kX) [X]_q^(n-k)`.
pub fn mixed_basis_expansion(coeffs: &[QRat], n: usize) -> Result<QExpPoly> {
    if coeffs.len() != n + 1 {
        return Err(Error::Usage(format!(
            "mixed basis of order {n} needs {} coefficients, got {}",
            n + 1,
            coeffs.len()
        )));
    }
    let t = bracket_x();
    let mut t_pows = vec![QExpPoly::one()];
    for i in 1..=n {
        t_pows.push(&t_pows[i - 1] * &t);
    }
    let mut sum = QExpPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = &QExpPoly::monomial(&binom(n, k) * c, k) * &t_pows[n - k];
        sum = &sum + &term;
    }
    Ok(sum)
}

/// `d/dX` with the factor `log q` removed: `Y^k -> k Y^k`.
pub fn scaled_x_derivative(p: &QExpPoly) -> QExpPoly {
    p.map_coeffs_indexed(|k, c| c * &QRat::from_integer(k as i64))
}

/// `P([X]_q)` expanded in powers of `Y`.
pub fn from_xpoly(p: &XPoly) -> QExpPoly {
    p.eval_in(&bracket_x())
}

/// Value at `X = N`, i.e. `Y = q^N`.
pub fn eval_at_integer(p: &QExpPoly, n: usize) -> QRat {
    p.eval(&QRat::q().pow(n as u32))
}

/// `Σ_{k=0}^{N-1} q^k [k]_q^(n-1)` by direct summation.
pub fn power_sum(n: usize, big_n: usize) -> Result<QRat> {
    if n == 0 || big_n == 0 {
        return Err(Error::Usage(format!(
            "power_sum needs n >= 1 and N >= 1, got n = {n}, N = {big_n}"
        )));
    }
    let q = QRat::q();
    Ok((0..big_n)
        .map(|k| &q.pow(k as u32) * &bracket(k).pow((n - 1) as u32))
        .sum())
}
