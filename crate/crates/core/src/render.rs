//! Human-readable rendering of Q(q) values and polynomials over them.
//!
//! Terms appear in descending powers. A coefficient is negative when its
//! numerator has a negative leading coefficient (denominators are canonical
//! with positive lead), and the sign is pulled out as a binary minus.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactq::{bracket, QPoly, QRat, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Style {
    pub latex: bool,
    /// Show a denominator that is a product of q-brackets as `[2]_q [3]_q`.
    pub brackets: bool,
}

impl Style {
    pub fn latex(brackets: bool) -> Self {
        Style { latex: true, brackets }
    }

    pub fn plain(brackets: bool) -> Self {
        Style { latex: false, brackets }
    }
}

pub fn is_negative(c: &QRat) -> bool {
    c.num().leading().is_some_and(Signed::is_negative)
}

fn power(var: &str, k: usize, style: Style) -> String {
    match k {
        0 => String::new(),
        1 => var.to_owned(),
        k if style.latex && k >= 10 => format!("{var}^{{{k}}}"),
        k => format!("{var}^{k}"),
    }
}

/// Integer polynomial in `q`, descending, no leading sign handling needed by
/// callers (a leading minus is emitted inline).
fn int_poly(coeffs: &[BigInt], style: Style) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let abs = c.abs();
        let var = power("q", k, style);
        match (abs.is_one(), k) {
            (true, 0) => out.push('1'),
            (true, _) => out.push_str(&var),
            (false, 0) => out.push_str(&abs.to_string()),
            (false, _) => {
                out.push_str(&abs.to_string());
                if !style.latex {
                    out.push(' ');
                }
                out.push_str(&var);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Clears denominators: returns integer `(num, den)` with `num/den` equal to
/// the input and `den` positive-leading.
fn integer_parts(c: &QRat) -> (Vec<BigInt>, Vec<BigInt>) {
    let lcm = c
        .num()
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let to_ints = |p: &QPoly| -> Vec<BigInt> {
        p.coeffs()
            .iter()
            .map(|r| (r * Rational::from_integer(lcm.clone())).to_integer())
            .collect()
    };
    (to_ints(c.num()), to_ints(c.den()))
}

/// Writes `den` as a product of q-brackets `[k]_q` (k >= 2) when it is one.
pub fn bracket_factorization(den: &QPoly) -> Option<Vec<usize>> {
    let degree = den.degree()?;
    if degree == 0 {
        return None;
    }
    let mut rest = den.clone();
    let mut factors = Vec::new();
    for k in (2..=degree + 1).rev() {
        let b = bracket(k);
        loop {
            let (quot, rem) = rest.div_rem(b.num()).ok()?;
            if !rem.is_zero() {
                break;
            }
            factors.push(k);
            rest = quot;
        }
    }
    if rest.is_one() {
        factors.sort_unstable();
        Some(factors)
    } else {
        None
    }
}

fn is_multi_term(p: &[BigInt]) -> bool {
    p.iter().filter(|c| !c.is_zero()).count() > 1
}

/// Renders a coefficient whose sign callers have already stripped.
/// `wrap_sum` parenthesizes a multi-term polynomial, `wrap_fraction` a plain
/// text quotient.
fn magnitude(c: &QRat, style: Style, wrap_sum: bool, wrap_fraction: bool) -> String {
    let (num, den) = integer_parts(c);
    let num_s = int_poly(&num, style);
    let unscaled = c.num().coeffs().iter().all(|r| r.is_integer());
    let brackets = if style.brackets && unscaled && den.len() > 1 {
        bracket_factorization(c.den())
    } else {
        None
    };
    let (den_s, den_multi) = match brackets {
        Some(ks) => {
            let sep = if style.latex { " " } else { "" };
            let s = ks.iter().map(|k| format!("[{k}]_q")).collect::<Vec<_>>().join(sep);
            (s, ks.len() > 1)
        }
        None => (int_poly(&den, style), is_multi_term(&den)),
    };

    let den_is_one = den.len() == 1 && den[0].is_one();
    if style.latex {
        if den_is_one {
            return if wrap_sum && is_multi_term(&num) {
                format!("\\left({num_s}\\right)")
            } else {
                num_s
            };
        }
        return format!("\\frac{{{num_s}}}{{{den_s}}}");
    }
    let wrap = |s: String, multi: bool| if multi { format!("({s})") } else { s };
    if den_is_one {
        return wrap(num_s, wrap_sum && is_multi_term(&num));
    }
    let body = format!(
        "{}/{}",
        wrap(num_s, is_multi_term(&num)),
        wrap(den_s, den_multi)
    );
    wrap(body, wrap_fraction)
}

pub fn qrat(c: &QRat, style: Style) -> String {
    if c.is_zero() {
        return "0".to_owned();
    }
    let (num, den) = integer_parts(c);
    if den.len() == 1 && den[0].is_one() {
        return int_poly(&num, style);
    }
    if is_negative(c) {
        return format!("-{}", magnitude(&-c, style, true, false));
    }
    magnitude(c, style, true, false)
}

pub fn poly(coeffs: &[QRat], var: &str, style: Style) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = is_negative(c);
        let abs = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let x = power(var, k, style);
        if k == 0 {
            out.push_str(&magnitude(&abs, style, negative, false));
        } else if abs.is_one() {
            out.push_str(&x);
        } else {
            out.push_str(&magnitude(&abs, style, true, true));
            out.push(' ');
            out.push_str(&x);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: &[i64], d: &[i64]) -> QRat {
        QRat::new(QPoly::from_ints(n), QPoly::from_ints(d)).unwrap()
    }

    #[test]
    fn latex_first_qbernoulli_polynomial() {
        let coeffs = [frac(&[-1], &[1, 1]), QRat::one()];
        assert_eq!(poly(&coeffs, "X", Style::latex(false)), "X - \\frac{1}{q + 1}");
        assert_eq!(poly(&coeffs, "X", Style::plain(false)), "X - 1/(q + 1)");
    }

    #[test]
    fn polynomial_coefficients_are_parenthesized() {
        let coeffs = [QRat::one(), frac(&[-1, 1], &[1]), QRat::zero()];
        assert_eq!(poly(&coeffs, "X", Style::plain(false)), "(q - 1) X + 1");
        assert_eq!(
            poly(&coeffs, "X", Style::latex(false)),
            "\\left(q - 1\\right) X + 1"
        );
        assert_eq!(poly(&[], "X", Style::plain(false)), "0");
        let coeffs = [frac(&[1, -1], &[1]), QRat::one()];
        assert_eq!(poly(&coeffs, "X", Style::plain(false)), "X - (q - 1)");
        assert_eq!(qrat(&coeffs[0], Style::plain(false)), "-q + 1");
    }

    #[test]
    fn rational_constants() {
        assert_eq!(qrat(&QRat::from_rational(Rational::new(1.into(), 6.into())), Style::latex(false)), "\\frac{1}{6}");
        assert_eq!(qrat(&QRat::from_integer(-3), Style::plain(false)), "-3");
        // (q/2) / (q + 1) renders with integer parts
        let c = &QRat::from_poly(QPoly::from_coeffs(vec![Rational::zero(), Rational::new(1.into(), 2.into())]))
            / &frac(&[1, 1], &[1]);
        assert_eq!(qrat(&c, Style::latex(false)), "\\frac{q}{2q + 2}");
    }

    #[test]
    fn bracket_products() {
        // [3]_q [4]_q
        let den = (&bracket(3) * &bracket(4)).num().clone();
        assert_eq!(bracket_factorization(&den), Some(vec![3, 4]));
        let den = (&bracket(2) * &bracket(3)).num().clone();
        assert_eq!(bracket_factorization(&den), Some(vec![2, 3]));
        assert_eq!(bracket_factorization(&QPoly::from_ints(&[1, 0, 1])), None);
        let beta3 = frac(&[0, 1, -1], &[1, 1, 1]) / (&bracket(4) * &QRat::one());
        assert_eq!(
            qrat(&beta3, Style::latex(true)),
            "-\\frac{q^2 - q}{[3]_q [4]_q}"
        );
        assert_eq!(qrat(&beta3, Style::plain(true)), "-(q^2 - q)/([3]_q[4]_q)");
    }
}
