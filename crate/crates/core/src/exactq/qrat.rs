//! Elements of the rational-function field Q(q) in canonical reduced form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::qpoly::{qpoly_gcd, QPoly};
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// A reduced fraction `num / den` of polynomials in `q`.
///
/// Canonical form: `gcd(num, den) = 1`, and `den` has integer coefficients,
/// unit content and a positive leading coefficient. Zero is `0 / 1`. Every
/// constructor and operation returns canonical values, so derived equality is
/// equality in Q(q).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(QPoly::q())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(QPoly::constant(r))
    }

    pub fn from_poly(num: QPoly) -> Self {
        QRat {
            num,
            den: QPoly::one(),
        }
    }

    /// `num / den`, reduced. Fails when `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = qpoly_gcd(&num, &den)?;
        if g.is_one() {
            Ok(Self::normalize_unit(num, den))
        } else {
            Ok(Self::normalize_unit(num.exact_div(&g), den.exact_div(&g)))
        }
    }

    /// Fixes the unit: makes a coprime denominator primitive with positive lead.
    fn normalize_unit(num: QPoly, den: QPoly) -> Self {
        let (content, prim) = den.content_and_primitive();
        if content.is_one() {
            return QRat { num, den };
        }
        QRat {
            num: num.scale(&content.recip()),
            den: QPoly::from_coeffs(prim.into_iter().map(Rational::from_integer).collect()),
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(c)` when the value does not depend on `q`.
    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_unit(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        Self::normalize_unit(self.num.pow(exp), self.den.pow(exp))
    }

    /// Exact value at `q = at`; the denominator is already reduced, so a zero
    /// there is a genuine pole.
    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole {
                at: at.clone(),
                index: None,
            });
        }
        Ok(self.num.eval(at) / d)
    }

    /// Value at `q = 1` of a function regular there.
    pub fn limit_at_1(&self) -> Result<Rational> {
        self.eval(&Rational::one())
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QRat {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for QRat {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn bracket(n: usize) -> QRat {
    QRat::from_poly(QPoly::from_coeffs(vec![Rational::one(); n]))
}

pub fn qrat_add(a: &QRat, b: &QRat) -> QRat {
    a + b
}

pub fn qrat_mul(a: &QRat, b: &QRat) -> QRat {
    a * b
}

pub fn qrat_neg(a: &QRat) -> QRat {
    -a
}

pub fn qrat_div(a: &QRat, b: &QRat) -> Result<QRat> {
    a.checked_div(b)
}

pub fn qrat_eval(r: &QRat, q0: &Rational) -> Result<Rational> {
    r.eval(q0)
}

pub fn qrat_limit_at_1(r: &QRat) -> Result<Rational> {
    r.limit_at_1()
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QRat::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        let g = qpoly_gcd(&self.den, &rhs.den).expect("nonzero dens");
        if g.is_one() {
            // Coprime denominators: the sum is already reduced.
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return QRat::zero();
            }
            return QRat::normalize_unit(num, &self.den * &rhs.den);
        }
        let b = self.den.exact_div(&g);
        let d = rhs.den.exact_div(&g);
        let t = &(&self.num * &d) + &(&rhs.num * &b);
        if t.is_zero() {
            return QRat::zero();
        }
        let g2 = qpoly_gcd(&t, &g).expect("nonzero");
        let (t, g_rest) = if g2.is_one() {
            (t, g)
        } else {
            (t.exact_div(&g2), g.exact_div(&g2))
        };
        QRat::normalize_unit(t, &(&b * &d) * &g_rest)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        // Cross-cancel before multiplying.
        let g1 = qpoly_gcd(&self.num, &rhs.den).expect("nonzero");
        let g2 = qpoly_gcd(&rhs.num, &self.den).expect("nonzero");
        let cancel = |p: &QPoly, g: &QPoly| if g.is_one() { p.clone() } else { p.exact_div(g) };
        let num = &cancel(&self.num, &g1) * &cancel(&rhs.num, &g2);
        let den = &cancel(&self.den, &g2) * &cancel(&rhs.den, &g1);
        QRat::normalize_unit(num, den)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

/// Panics on a zero divisor, like integer division; see [`QRat::checked_div`].
impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

macro_rules! forward_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $method(self, rhs: &QRat) -> QRat {
                (&self).$method(rhs)
            }
        }
        impl $tr<QRat> for &QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                self.$method(&rhs)
            }
        }
    )*};
}
forward_binop!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl std::iter::Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::zero(), |acc, x| acc + x)
    }
}

impl Zero for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
}

impl One for QRat {
    fn one() -> Self {
        QRat::one()
    }
}

/// Plain text: `q + 1`, `-1/(q + 1)`, `(q^2 - q)/(q^5 + 2 q^4 + ...)`.
impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::qrat(self, crate::render::Style::plain(false)))
    }
}

#[derive(Serialize, Deserialize)]
struct QRatRepr {
    num: Vec<String>,
    den: Vec<String>,
}

fn poly_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

fn parse_poly(entries: &[String]) -> Result<QPoly> {
    entries
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()
        .map(QPoly::from_coeffs)
}

impl QRat {
    fn to_repr(&self) -> QRatRepr {
        QRatRepr {
            num: poly_strings(&self.num),
            den: poly_strings(&self.den),
        }
    }

    fn from_repr(repr: &QRatRepr) -> Result<Self> {
        QRat::new(parse_poly(&repr.num)?, parse_poly(&repr.den)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("QRat serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for QRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = QRatRepr::deserialize(deserializer)?;
        QRat::from_repr(&repr).map_err(serde::de::Error::custom)
    }
}
