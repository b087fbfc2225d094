//! The q-Bernoulli polynomials `B_{n,q}(X)`.
//!
//! `B_{n,q}` is the unique polynomial with
//!
//! ```text
//! ∫_X^{qX+1} B_{n,q}(t) d_q t = (q-1) X^{n+1} + X^n.
//! ```
//!
//! Writing `B_{n,q} = Σ a_k X^k`, the left side is linear in the `a_k` and
//! comparing the coefficients of `X^0 .. X^n` gives a square system over Q(q).
//! The `X^{n+1}` row only involves `a_n`, with coefficient `q - 1` on both
//! sides, so it holds exactly when the solution is monic.

use crate::error::{Error, Result};
use crate::exactq::{binomial, bracket, QPoly, QRat, Rational};
use crate::qexp::{beta_number, from_xpoly, QExpPoly};
use crate::xpoly::{
    classical_antiderivative, classical_derivative, jackson_integral, q_antiderivative,
    shifted_bound, XPoly,
};

/// `B_{n,q}(X)` together with its q-antiderivative and constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QBernoulliResult {
    pub n: usize,
    /// `B_{n,q}(X)`, monic of degree `n`.
    pub poly: XPoly,
    /// `F_{n,q}(X) = ∫_0^X B_{n,q}(t) d_q t`.
    pub antiderivative: XPoly,
    /// `B_{n,q} = B_{n,q}(0)`.
    pub number: QRat,
}

/// Square linear system `matrix · x = rhs` over Q(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub matrix: Vec<Vec<QRat>>,
    pub rhs: Vec<QRat>,
}

impl LinearSystem {
    pub fn new(matrix: Vec<Vec<QRat>>, rhs: Vec<QRat>) -> Result<Self> {
        let size = rhs.len();
        if matrix.len() != size || matrix.iter().any(|row| row.len() != size) {
            return Err(Error::Usage(format!(
                "linear system must be square with {size} rows and columns"
            )));
        }
        Ok(LinearSystem { matrix, rhs })
    }

    pub fn size(&self) -> usize {
        self.rhs.len()
    }

    /// `matrix · x`.
    pub fn apply(&self, x: &[QRat]) -> Vec<QRat> {
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

/// `(q-1) X^{n+1} + X^n`.
pub fn eq1_rhs(n: usize) -> XPoly {
    let mut coeffs = vec![QRat::zero(); n + 2];
    coeffs[n] = QRat::one();
    coeffs[n + 1] = QRat::from_poly(QPoly::from_ints(&[-1, 1]));
    XPoly::from_coeffs(coeffs)
}

/// `∫_X^{qX+1} t^k d_q t` for `k = 0..=n`.
fn integral_columns(n: usize) -> Vec<XPoly> {
    let (lower, upper) = (XPoly::var(), shifted_bound());
    (0..=n)
        .map(|k| jackson_integral(&XPoly::monomial(QRat::one(), k), &lower, &upper))
        .collect()
}

/// Coefficient equations of `X^0 .. X^n` for the unknown coefficients of
/// `B_{n,q}`.
pub fn build_system(n: usize) -> LinearSystem {
    let columns = integral_columns(n);
    let target = eq1_rhs(n);

    // The dropped X^{n+1} row: only the last column reaches that degree, and
    // its entry equals the right-hand side's, so a monic solution satisfies it.
    for (k, col) in columns.iter().enumerate() {
        let top = col.coeff(n + 1);
        if k < n {
            assert!(top.is_zero(), "column {k} has degree above {n}");
        } else {
            assert_eq!(top, target.coeff(n + 1), "X^{{n+1}} row is inconsistent");
        }
    }

    let matrix = (0..=n)
        .map(|row| columns.iter().map(|col| col.coeff(row)).collect())
        .collect();
    let rhs = (0..=n).map(|row| target.coeff(row)).collect();
    LinearSystem { matrix, rhs }
}

/// Gaussian elimination over Q(q), taking the first nonzero entry of each
/// column as pivot. The residual `A x - b` is checked before returning.
pub fn solve_system(sys: &LinearSystem) -> Result<Vec<QRat>> {
    let size = sys.size();
    if sys.matrix.len() != size || sys.matrix.iter().any(|row| row.len() != size) {
        return Err(Error::Usage("linear system is not square".into()));
    }
    let mut rows: Vec<Vec<QRat>> = sys
        .matrix
        .iter()
        .zip(&sys.rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or(Error::Singular { column: col })?;
        rows.swap(col, pivot);
        let inv = rows[col][col].inv()?;
        let pivot_row: Vec<QRat> = rows[col].iter().map(|c| c * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *c = &*c - &(&factor * p);
                }
            }
        }
        rows[col] = pivot_row;
    }

    let solution: Vec<QRat> = rows.into_iter().map(|mut r| r.pop().expect("augmented")).collect();
    if sys.apply(&solution) != sys.rhs {
        return Err(Error::Contradiction("solution fails the residual check".into()));
    }
    Ok(solution)
}

/// Solves for `B_{n,q}(X)` and checks the defining integral identity exactly.
pub fn qbernoulli(n: usize) -> Result<QBernoulliResult> {
    let coeffs = solve_system(&build_system(n))?;
    if !coeffs[n].is_one() {
        return Err(Error::Contradiction(format!(
            "leading coefficient of B_{n},q is {}, expected 1",
            coeffs[n]
        )));
    }
    let poly = XPoly::from_coeffs(coeffs);
    if jackson_integral(&poly, &XPoly::var(), &shifted_bound()) != eq1_rhs(n) {
        return Err(Error::Contradiction(format!(
            "B_{n},q does not satisfy the defining integral"
        )));
    }
    let antiderivative = q_antiderivative(&poly);
    let number = poly.coeff(0);
    debug_assert_eq!(classical_derivative(&antiderivative).coeff(0), number);
    Ok(QBernoulliResult {
        n,
        poly,
        antiderivative,
        number,
    })
}

/// Classical Bernoulli polynomial from `∫_X^{X+1} P(t) dt = X^n`, solved
/// exactly over Q without reference to `q` or to tabulated values.
pub fn classical_bernoulli(n: usize) -> XPoly {
    let shift = XPoly::from_coeffs(vec![QRat::one(), QRat::one()]);
    let columns: Vec<XPoly> = (0..=n)
        .map(|k| {
            let f = classical_antiderivative(&XPoly::monomial(QRat::one(), k));
            &f.compose(&shift) - &f
        })
        .collect();
    let matrix = (0..=n)
        .map(|row| columns.iter().map(|col| col.coeff(row)).collect())
        .collect();
    let mut rhs = vec![QRat::zero(); n + 1];
    rhs[n] = QRat::one();
    let sys = LinearSystem { matrix, rhs };
    // Column k has degree k with leading coefficient 1: triangular, unit diagonal.
    let coeffs = solve_system(&sys).expect("classical system is unitriangular");
    XPoly::from_coeffs(coeffs)
}

/// Coefficientwise value at `q = 1`.
pub fn limit_q_to_1(p: &XPoly) -> Result<XPoly> {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            c.limit_at_1()
                .map(QRat::from_rational)
                .map_err(|_| Error::Pole {
                    at: Rational::from_integer(1.into()),
                    index: Some(k),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(XPoly::from_coeffs(coeffs))
}

/// `β_{n,q}(X) = (∫_0^s ((t-1)/(q-1))^n d_q t)' at s = q^X`.
pub fn beta_via_remark(n: usize) -> QExpPoly {
    let inv = QRat::from_poly(QPoly::from_ints(&[-1, 1])).inv().expect("nonzero");
    let base = XPoly::from_coeffs(vec![-&inv, inv]);
    let integrand = base.pow(n as u32);
    // A polynomial in s = q^X is already in the Y representation.
    classical_derivative(&q_antiderivative(&integrand)).reinterpret()
}

/// `β_{n,q}(X) = F'_{n,q}([X]_q)`.
pub fn beta_via_f(n: usize) -> Result<QExpPoly> {
    let result = qbernoulli(n)?;
    Ok(beta_from_antiderivative(&result.antiderivative))
}

pub(crate) fn beta_from_antiderivative(f: &XPoly) -> QExpPoly {
    from_xpoly(&classical_derivative(f))
}

/// Builds `B_{n,q}(X)` from Carlitz's numbers through the expansion
///
/// ```text
/// Σ_k Σ_{i<=k} C(n,k) C(k,i) β_{k,q} (q-1)^i [n+i-k+1]_q/(n+i-k+1) X^{n+i-k}
/// ```
///
/// This path never touches the linear system.
pub fn qbernoulli_double_sum(n: usize) -> XPoly {
    let q_minus_1 = QRat::from_poly(QPoly::from_ints(&[-1, 1]));
    let mut coeffs = vec![QRat::zero(); n + 1];
    for k in 0..=n {
        let beta_k = beta_number(k);
        let outer = &QRat::from_rational(Rational::from_integer(binomial(n, k))) * &beta_k;
        for i in 0..=k {
            let m = n + i - k;
            let weight = &bracket(m + 1) / &QRat::from_integer(m as i64 + 1);
            let term = &(&outer * &QRat::from_rational(Rational::from_integer(binomial(k, i))))
                * &(&q_minus_1.pow(i as u32) * &weight);
            coeffs[m] = &coeffs[m] + &term;
        }
    }
    XPoly::from_coeffs(coeffs)
}
