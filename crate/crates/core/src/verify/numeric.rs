//! Floating-point check of the closed-form Jackson integral against the
//! truncated series definition.
//!
//! For `0 < q < 1`:
//!
//! ```text
//! ∫_a^b f d_q t = (1-q) b Σ q^n f(q^n b) - (1-q) a Σ q^n f(q^n a)
//! ```
//!
//! and for `q > 1`
//!
//! ```text
//! ∫_a^b f d_q t = (q-1) b Σ_{n>=1} q^-n f(q^-n b) - (q-1) a Σ_{n>=1} q^-n f(q^-n a).
//! ```
//!
//! The `q > 1` sums start at `n = 1`: telescoping `F(x) - F(x/q)` for a
//! q-antiderivative `F` produces exactly those terms.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactq::{to_f64, QRat, Rational};
use crate::xpoly::{jackson_integral, XPoly};

/// Which series formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `0 < q < 1`
    Contracting,
    /// `q > 1`
    Expanding,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericSample {
    pub q0: Rational,
    pub a: Rational,
    pub b: Rational,
    /// Number of series terms kept per endpoint.
    pub truncation: usize,
    /// Absolute error allowed between series and closed form.
    pub tolerance: f64,
}

impl NumericSample {
    pub fn new(q0: Rational, a: Rational, b: Rational, truncation: usize, tolerance: f64) -> Result<Self> {
        if !q0.is_positive() || q0.is_one() {
            return Err(Error::Usage(format!("q0 must be positive and different from 1, got {q0}")));
        }
        if truncation == 0 {
            return Err(Error::Usage("truncation must be at least 1".into()));
        }
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(Error::Usage(format!("tolerance must be positive, got {tolerance}")));
        }
        Ok(NumericSample { q0, a, b, truncation, tolerance })
    }

    pub fn branch(&self) -> Branch {
        if self.q0 < Rational::one() {
            Branch::Contracting
        } else {
            Branch::Expanding
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacksonComparison {
    pub series_value: f64,
    pub closed_form_value: f64,
    /// Upper bound on the discarded series tail.
    pub tail_bound: f64,
}

impl JacksonComparison {
    pub fn error(&self) -> f64 {
        (self.series_value - self.closed_form_value).abs()
    }

    /// Agreement within `tolerance`, with the tail bound an order of
    /// magnitude below it.
    pub fn passes(&self, tolerance: f64) -> bool {
        self.error() <= tolerance && self.tail_bound < tolerance / 10.0
    }
}

fn coefficients_at(p: &XPoly, q0: &Rational) -> Result<Vec<Rational>> {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            c.eval(q0).map_err(|_| Error::Pole {
                at: q0.clone(),
                index: Some(k),
            })
        })
        .collect()
}

fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

/// Series value and closed-form value of `∫_a^b P(t) d_q t` at `q = q0`.
pub fn numeric_jackson(p: &XPoly, sample: &NumericSample) -> Result<JacksonComparison> {
    let exact = coefficients_at(p, &sample.q0)?;
    let coeffs: Vec<f64> = exact.iter().map(to_f64).collect();
    let q = to_f64(&sample.q0);

    let (ratio, scale, first) = match sample.branch() {
        Branch::Contracting => (q, 1.0 - q, 0),
        Branch::Expanding => (1.0 / q, q - 1.0, 1),
    };
    let endpoint = |x: f64| -> f64 {
        let mut sum = 0.0;
        let mut r = ratio.powi(first);
        for _ in 0..sample.truncation {
            sum += r * horner(&coeffs, r * x);
            r *= ratio;
        }
        scale * x * sum
    };
    let (a, b) = (to_f64(&sample.a), to_f64(&sample.b));
    let series_value = endpoint(b) - endpoint(a);

    // |f| on [-R, R] is at most Σ |c_k| R^k; the tail is geometric in `ratio`.
    let radius = a.abs().max(b.abs());
    let sup = horner(&coeffs.iter().map(|c| c.abs()).collect::<Vec<_>>(), radius);
    let tail_bound =
        scale * (a.abs() + b.abs()) * sup * ratio.powi(sample.truncation as i32 + first) / (1.0 - ratio);

    let bound = |r: &Rational| XPoly::constant(QRat::from_rational(r.clone()));
    let integral = jackson_integral(p, &bound(&sample.a), &bound(&sample.b));
    let closed = integral.coeff(0).eval(&sample.q0).map_err(|_| Error::Pole {
        at: sample.q0.clone(),
        index: None,
    })?;
    let closed_form_value = if closed.is_zero() { 0.0 } else { to_f64(&closed) };

    Ok(JacksonComparison {
        series_value,
        closed_form_value,
        tail_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{integer, rational, QPoly};
    use proptest::prelude::*;

    fn sample(q0: Rational, a: Rational, b: Rational, truncation: usize) -> NumericSample {
        NumericSample::new(q0, a, b, truncation, 1e-10).unwrap()
    }

    fn t_pow(k: usize) -> XPoly {
        XPoly::monomial(QRat::one(), k)
    }

    #[test]
    fn constant_integrand_telescopes() {
        let s = sample(rational(1, 2), integer(0), integer(1), 100);
        let got = numeric_jackson(&XPoly::one(), &s).unwrap();
        assert!((got.series_value - 1.0).abs() < 1e-12);
        assert_eq!(got.closed_form_value, 1.0);
    }

    /// `(1-q) Σ q^n · q^n` summed as a geometric series is `(1-q)/(1-q^2)`,
    /// which at `q = 1/2` is `2/3`.
    #[test]
    fn linear_integrand_contracting() {
        let s = sample(rational(1, 2), integer(0), integer(1), 100);
        let got = numeric_jackson(&t_pow(1), &s).unwrap();
        assert!((got.series_value - 2.0 / 3.0).abs() < 1e-10);
        assert!((got.closed_form_value - 2.0 / 3.0).abs() < 1e-15);
        assert!(got.passes(1e-10));
    }

    /// `(q-1) Σ_{n>=1} q^-n · q^-2n = (q-1)/(q^3 - 1) = 1/[3]_q`, which at
    /// `q = 2` is `1/7`; at `q = 1/2` the other branch gives
    /// `(1-q)/(1-q^3) = 4/7`.
    #[test]
    fn quadratic_integrand_both_branches() {
        let s = sample(integer(2), integer(0), integer(1), 200);
        let got = numeric_jackson(&t_pow(2), &s).unwrap();
        let direct: f64 = (1..=200).map(|n| 0.5f64.powi(3 * n)).sum();
        assert!((direct - 1.0 / 7.0).abs() < 1e-15);
        assert!((got.series_value - 1.0 / 7.0).abs() < 1e-10, "{got:?}");
        assert!((got.closed_form_value - 1.0 / 7.0).abs() < 1e-15);
        assert_eq!(s.branch(), Branch::Expanding);

        let s = sample(rational(1, 2), integer(0), integer(1), 200);
        let got = numeric_jackson(&t_pow(2), &s).unwrap();
        assert!((got.series_value - 4.0 / 7.0).abs() < 1e-10, "{got:?}");
        assert!((got.closed_form_value - 4.0 / 7.0).abs() < 1e-15);
        assert_eq!(s.branch(), Branch::Contracting);
    }

    #[test]
    fn rejects_bad_samples() {
        assert!(NumericSample::new(integer(1), integer(0), integer(1), 10, 1e-10).is_err());
        assert!(NumericSample::new(integer(-2), integer(0), integer(1), 10, 1e-10).is_err());
        assert!(NumericSample::new(integer(2), integer(0), integer(1), 0, 1e-10).is_err());
        assert!(NumericSample::new(integer(2), integer(0), integer(1), 10, 0.0).is_err());
    }

    #[test]
    fn pole_in_coefficient() {
        let p = XPoly::constant(QRat::new(QPoly::one(), QPoly::from_ints(&[-2, 1])).unwrap());
        let s = sample(integer(2), integer(0), integer(1), 50);
        assert_eq!(
            numeric_jackson(&p, &s),
            Err(Error::Pole { at: integer(2), index: Some(0) })
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn branches_agree_with_closed_form(
            cs in prop::collection::vec(-3i64..=3, 1..=5),
            q_idx in 0usize..4,
            a_idx in 0usize..4,
            b_idx in 0usize..4,
        ) {
            let q0 = [rational(1, 3), rational(1, 2), integer(2), integer(3)][q_idx].clone();
            let bounds = [integer(0), rational(1, 2), integer(1), integer(2)];
            let p = XPoly::from_coeffs(cs.iter().map(|&c| QRat::from_integer(c)).collect());
            let s = sample(q0, bounds[a_idx].clone(), bounds[b_idx].clone(), 200);
            let got = numeric_jackson(&p, &s).unwrap();
            prop_assert!(got.error() <= 1e-10, "{:?}", got);
            prop_assert!(got.tail_bound < 1e-11);
        }
    }
}
