//! Dense univariate polynomials with coefficients in Q(q).
//!
//! [`XPoly`](crate::XPoly) and [`QExpPoly`](crate::QExpPoly) share this
//! representation; the indeterminate is a type parameter so the two cannot be
//! mixed by accident.

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactq::QRat;
use crate::render::{self, Style};

pub trait Indeterminate: Clone + fmt::Debug + Default + PartialEq + Eq + Hash + Send + Sync {
    const SYMBOL: &'static str;
    /// Optional gloss emitted next to the variable name in JSON.
    const MEANING: Option<&'static str> = None;
}

/// The ordinary indeterminate `X`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VarX;

impl Indeterminate for VarX {
    const SYMBOL: &'static str = "X";
}

/// `Y = q^X`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VarY;

impl Indeterminate for VarY {
    const SYMBOL: &'static str = "Y";
    const MEANING: Option<&'static str> = Some("q^X");
}

/// Little-endian coefficients over Q(q) with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DensePoly<V> {
    coeffs: Vec<QRat>,
    _var: PhantomData<V>,
}

impl<V: Indeterminate> Default for DensePoly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Indeterminate> DensePoly<V> {
    pub fn zero() -> Self {
        Self::from_coeffs(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(QRat::one())
    }

    pub fn constant(c: QRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(QRat::one(), 1)
    }

    pub fn monomial(c: QRat, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QRat::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<QRat>) -> Self {
        while coeffs.last().is_some_and(QRat::is_zero) {
            coeffs.pop();
        }
        DensePoly {
            coeffs,
            _var: PhantomData,
        }
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<QRat> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QRat {
        self.coeffs.get(k).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&QRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn map_coeffs(&self, f: impl FnMut(&QRat) -> QRat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn map_coeffs_indexed(&self, mut f: impl FnMut(usize, &QRat) -> QRat) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().map(|(k, c)| f(k, c)).collect())
    }

    /// Horner evaluation at a value of the indeterminate.
    pub fn eval(&self, at: &QRat) -> QRat {
        self.coeffs
            .iter()
            .rev()
            .fold(QRat::zero(), |acc, c| &(&acc * at) + c)
    }

    /// Horner evaluation into another polynomial ring over Q(q).
    pub fn eval_in<W: Indeterminate>(&self, at: &DensePoly<W>) -> DensePoly<W> {
        self.coeffs.iter().rev().fold(DensePoly::zero(), |acc, c| {
            &(&acc * at) + &DensePoly::constant(c.clone())
        })
    }

    /// `self(s)`.
    pub fn compose(&self, s: &Self) -> Self {
        self.eval_in(s)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Same coefficients, read as a polynomial in another indeterminate.
    pub fn reinterpret<W: Indeterminate>(&self) -> DensePoly<W> {
        DensePoly::from_coeffs(self.coeffs.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_latex(&self, bracket_notation: bool) -> String {
        render::poly(self.coeffs(), V::SYMBOL, Style::latex(bracket_notation))
    }

    pub fn to_plain(&self, bracket_notation: bool) -> String {
        render::poly(self.coeffs(), V::SYMBOL, Style::plain(bracket_notation))
    }
}

impl<V: Indeterminate> Add for &DensePoly<V> {
    type Output = DensePoly<V>;
    fn add(self, rhs: &DensePoly<V>) -> DensePoly<V> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::from_coeffs((0..len).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<V: Indeterminate> Sub for &DensePoly<V> {
    type Output = DensePoly<V>;
    fn sub(self, rhs: &DensePoly<V>) -> DensePoly<V> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::from_coeffs((0..len).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<V: Indeterminate> Neg for &DensePoly<V> {
    type Output = DensePoly<V>;
    fn neg(self) -> DensePoly<V> {
        DensePoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<V: Indeterminate> Mul for &DensePoly<V> {
    type Output = DensePoly<V>;
    fn mul(self, rhs: &DensePoly<V>) -> DensePoly<V> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![QRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        DensePoly::from_coeffs(out)
    }
}

macro_rules! forward_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl<V: Indeterminate> $tr for DensePoly<V> {
            type Output = DensePoly<V>;
            fn $method(self, rhs: DensePoly<V>) -> DensePoly<V> {
                (&self).$method(&rhs)
            }
        }
        impl<V: Indeterminate> $tr<&DensePoly<V>> for DensePoly<V> {
            type Output = DensePoly<V>;
            fn $method(self, rhs: &DensePoly<V>) -> DensePoly<V> {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_binop!(Add add, Sub sub, Mul mul);

impl<V: Indeterminate> Neg for DensePoly<V> {
    type Output = DensePoly<V>;
    fn neg(self) -> DensePoly<V> {
        -&self
    }
}

impl<V: Indeterminate> fmt::Display for DensePoly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain(false))
    }
}

impl<V: Indeterminate> Serialize for DensePoly<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let fields = if V::MEANING.is_some() { 3 } else { 2 };
        let mut s = serializer.serialize_struct("DensePoly", fields)?;
        s.serialize_field("variable", V::SYMBOL)?;
        if let Some(meaning) = V::MEANING {
            s.serialize_field("meaning", meaning)?;
        }
        s.serialize_field("coefficients", &self.coeffs)?;
        s.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyRepr {
    variable: String,
    #[serde(default)]
    meaning: Option<String>,
    coefficients: Vec<QRat>,
}

impl<'de, V: Indeterminate> Deserialize<'de> for DensePoly<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PolyRepr::deserialize(deserializer)?;
        if repr.variable != V::SYMBOL {
            return Err(D::Error::custom(format!(
                "expected variable {:?}, found {:?}",
                V::SYMBOL,
                repr.variable
            )));
        }
        if repr.meaning.as_deref() != V::MEANING {
            return Err(D::Error::custom("unexpected \"meaning\" field"));
        }
        Ok(DensePoly::from_coeffs(repr.coefficients))
    }
}
