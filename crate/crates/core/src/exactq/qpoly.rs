//! Dense univariate polynomials in `q` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Polynomial in `q` over Q, little-endian, with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division over Q.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv_lead = lead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv_lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of a division known to be exact. By Gauss's lemma the
    /// primitive parts divide over Z, so the work stays in integers.
    pub(crate) fn exact_div(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "exact_div by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let (ca, a) = self.content_and_primitive();
        let (cb, b) = divisor.content_and_primitive();
        let db = b.len() - 1;
        assert!(a.len() > db, "exact_div left a remainder");
        let lead = &b[db];
        let mut rem = a;
        let mut quot = vec![BigInt::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let (c, r) = rem[k + db].div_rem(lead);
            assert!(r.is_zero(), "exact_div left a remainder");
            if !c.is_zero() {
                for (j, d) in b.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        debug_assert!(rem.iter().all(Zero::is_zero), "exact_div left a remainder");
        Self::from_ints_big(quot).scale(&(ca / cb))
    }

    /// `(d, p)` with `self = p / d`, `p` integer and `d > 0` the least common
    /// denominator.
    fn integer_form(&self) -> (BigInt, Vec<BigInt>) {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| {
            if c.denom().is_one() { acc } else { acc.lcm(c.denom()) }
        });
        let ints = self
            .coeffs
            .iter()
            .map(|c| if lcm.is_one() { c.numer().clone() } else { c.numer() * (&lcm / c.denom()) })
            .collect();
        (lcm, ints)
    }

    /// Splits `self = c * p` with `p` integer, primitive, and positive leading
    /// coefficient. Zero maps to `(0, [])`.
    pub fn content_and_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let (lcm, ints) = self.integer_form();
        let mut g = int_content(&ints);
        if ints.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        (Rational::new(g, lcm), prim)
    }

    fn from_ints_big(ints: Vec<BigInt>) -> Self {
        Self::from_coeffs(ints.into_iter().map(Rational::from_integer).collect())
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }
}

/// Greatest common divisor in unit-normal (monic) form.
///
/// Runs the subresultant pseudo-remainder sequence on the integer primitive
/// parts: every division in it is exact, and no integer gcds are needed until
/// the last step.
pub fn qpoly_gcd(a: &QPoly, b: &QPoly) -> Result<QPoly> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::GcdOfZeros),
        (false, true) => return Ok(a.make_monic()),
        (true, false) => return Ok(b.make_monic()),
        _ => {}
    }
    if a.coeffs.len() == 1 || b.coeffs.len() == 1 {
        return Ok(QPoly::one());
    }
    let (_, mut x) = a.content_and_primitive();
    let (_, mut y) = b.content_and_primitive();
    if x == y {
        return Ok(QPoly::from_ints_big(y).make_monic());
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (x.len() - y.len()) as u32;
        let r = pseudo_rem(&x, &y);
        if r.is_empty() {
            return Ok(QPoly::from_ints_big(int_primitive(y)).make_monic());
        }
        if r.len() == 1 {
            return Ok(QPoly::one());
        }
        let divisor = &g * num_traits::pow(h.clone(), delta as usize);
        x = y;
        y = r.into_iter().map(|c| exact_int_div(c, &divisor)).collect();
        g = x.last().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            exact_int_div(
                num_traits::pow(g.clone(), delta as usize),
                &num_traits::pow(h, delta as usize - 1),
            )
        };
    }
}

fn exact_int_div(n: BigInt, d: &BigInt) -> BigInt {
    if d.is_one() {
        return n;
    }
    let (q, r) = n.div_rem(d);
    debug_assert!(r.is_zero(), "inexact division in subresultant sequence");
    q
}

fn int_content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn int_primitive(p: Vec<BigInt>) -> Vec<BigInt> {
    let g = int_content(&p);
    if g.is_one() {
        p
    } else {
        p.into_iter().map(|c| c / &g).collect()
    }
}

/// Pseudo-remainder `prem(a, b)`: the remainder of `lc(b)^(deg a - deg b + 1) a`
/// by `b` over Z. Requires `deg a >= deg b`; the result is trimmed.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    for top in (db..a.len()).rev() {
        let lr = r[top].clone();
        for c in r[..top].iter_mut() {
            *c *= lb;
        }
        r[top] = BigInt::zero();
        if !lr.is_zero() {
            let shift = top - db;
            for (j, bj) in b[..db].iter().enumerate() {
                r[shift + j] -= &lr * bj;
            }
        }
    }
    r.truncate(db);
    while r.last().is_some_and(Zero::is_zero) {
        r.pop();
    }
    r
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            if c.denom().is_one() && s.denom().is_one() {
                *c = Rational::from_integer(c.numer() + s.numer());
            } else {
                *c += s;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        // Convolve over Z and reduce each coefficient once.
        let (da, a) = self.integer_form();
        let (db, b) = rhs.integer_form();
        let mut ints = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    ints[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        QPoly::from_coeffs(
            ints.into_iter()
                .map(|c| if den.is_one() { Rational::from_integer(c) } else { Rational::new(c, den.clone()) })
                .collect(),
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

/// Plain text, descending powers: `q^2 + q + 1`, `-1/2 q`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            let var = match power {
                0 => String::new(),
                1 => "q".to_owned(),
                p => format!("q^{p}"),
            };
            match (abs.is_one(), power) {
                (true, 0) => f.write_str("1")?,
                (true, _) => f.write_str(&var)?,
                (false, 0) => write!(f, "{abs}")?,
                (false, _) => write!(f, "{abs} {var}")?,
            }
        }
        Ok(())
    }
}
