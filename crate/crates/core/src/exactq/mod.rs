//! Exact ground arithmetic: rationals, polynomials in `q`, and the
//! rational-function field Q(q).

mod qpoly;
mod qrat;
mod rational;

pub use qpoly::{qpoly_gcd, QPoly};
pub use qrat::{
    bracket, qrat_add, qrat_div, qrat_eval, qrat_limit_at_1, qrat_mul, qrat_neg, QRat,
};
pub use rational::{format_rational, integer, parse_rational, rational, Rational};

pub(crate) use rational::{binomial, to_f64};
