//! q-Bernoulli polynomials defined through the Jackson integral.
//!
//! `B_{n,q}(X)` is the unique polynomial with
//! `∫_X^{qX+1} B_{n,q}(t) d_q t = (q-1) X^{n+1} + X^n`. This crate builds it by
//! solving that linear condition exactly over the field Q(q), constructs
//! Carlitz's `η_{n,q}` and `β_{n,q}`, and checks the identities that tie them
//! together, symbolically and without floating point.
//!
//! Layout:
//! - [`exactq`]: rationals, polynomials in `q`, the field Q(q).
//! - [`xpoly`]: polynomials in `X` with q-derivative, Jackson integral, and
//!   classical calculus.
//! - [`qexp`]: q-polynomials in `Y = q^X`: Carlitz sequences and the
//!   substitution `t = [X]_q`.
//! - [`bernoulli`]: the linear-system construction of `B_{n,q}`, the classical
//!   oracle and the `q -> 1` limit.
//! - [`verify`]: identity reports and the floating-point Jackson series check.
//! - [`cli`]: the `qbern` command line.

pub mod bernoulli;
pub mod cli;
pub mod error;
pub mod exactq;
pub mod poly;
pub mod qexp;
pub mod render;
pub mod verify;
pub mod xpoly;

pub use bernoulli::{qbernoulli, QBernoulliResult};
pub use error::{Error, Result};
pub use exactq::{bracket, QPoly, QRat, Rational};
pub use qexp::QExpPoly;
pub use xpoly::XPoly;
