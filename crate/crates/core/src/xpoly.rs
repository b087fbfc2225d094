//! Polynomials in `X` over Q(q) and the calculus operators acting on them.

use crate::exactq::{bracket, QRat};
use crate::poly::{DensePoly, VarX};

/// Polynomial in `X` with coefficients in Q(q).
pub type XPoly = DensePoly<VarX>;

/// `qX + 1`, the upper bound of the defining integral.
pub fn shifted_bound() -> XPoly {
    XPoly::from_coeffs(vec![QRat::one(), QRat::q()])
}

/// `P(qX)`.
pub fn dilate(p: &XPoly) -> XPoly {
    let q = QRat::q();
    let mut qk = QRat::one();
    let mut out = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        out.push(c * &qk);
        qk = &qk * &q;
    }
    XPoly::from_coeffs(out)
}

/// `D_q`: `X^k -> [k]_q X^(k-1)`.
pub fn q_derivative(p: &XPoly) -> XPoly {
    XPoly::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &bracket(k))
            .collect(),
    )
}

/// The q-antiderivative vanishing at 0: `X^k -> X^(k+1) / [k+1]_q`.
pub fn q_antiderivative(p: &XPoly) -> XPoly {
    if p.is_zero() {
        return XPoly::zero();
    }
    let mut out = vec![QRat::zero()];
    out.extend(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c / &bracket(k + 1)),
    );
    XPoly::from_coeffs(out)
}

/// `∫_a^b P(t) d_q t` for polynomial bounds, as `F(b) - F(a)` with `F` the
/// q-antiderivative of `P`.
pub fn jackson_integral(p: &XPoly, a: &XPoly, b: &XPoly) -> XPoly {
    let f = q_antiderivative(p);
    &f.compose(b) - &f.compose(a)
}

pub fn classical_derivative(p: &XPoly) -> XPoly {
    XPoly::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &QRat::from_integer(k as i64))
            .collect(),
    )
}

/// Antiderivative vanishing at 0.
pub fn classical_antiderivative(p: &XPoly) -> XPoly {
    if p.is_zero() {
        return XPoly::zero();
    }
    let mut out = vec![QRat::zero()];
    out.extend(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c / &QRat::from_integer(k as i64 + 1)),
    );
    XPoly::from_coeffs(out)
}

/// `P(s(X))`.
pub fn substitute(p: &XPoly, s: &XPoly) -> XPoly {
    p.compose(s)
}
