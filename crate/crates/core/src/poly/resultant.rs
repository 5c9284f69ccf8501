use super::Poly;
use crate::error::{Error, Result};

/// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
/// The empty matrix has determinant 1.
pub fn determinant(mut m: Vec<Vec<Poly>>, nvars: usize) -> Poly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return Poly::one(nvars);
    }
    let mut negate = false;
    let mut prev = Poly::one(nvars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Poly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Sylvester resultant of `f` and `g` with respect to variable `var`.
///
/// Coefficients may involve the other variables. If exactly one input is zero
/// the resultant is zero; both zero is an error.
pub fn resultant(f: &Poly, g: &Poly, var: usize) -> Result<Poly> {
    if f.nvars() != g.nvars() {
        return Err(Error::VarMismatch {
            left: f.nvars(),
            right: g.nvars(),
        });
    }
    let n = f.nvars();
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Poly::zero(n));
    }
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let df = fc.len() - 1;
    let dg = gc.len() - 1;
    let size = df + dg;
    let mut m = vec![vec![Poly::zero(n); size]; size];
    // Rows hold coefficients from the highest power down.
    for row in 0..dg {
        for (k, c) in fc.iter().rev().enumerate() {
            m[row][row + k] = c.clone();
        }
    }
    for row in 0..df {
        for (k, c) in gc.iter().rev().enumerate() {
            m[dg + row][row + k] = c.clone();
        }
    }
    Ok(determinant(m, n))
}

/// Entry `(i, j)` is the partial derivative of `coords[i]` in variable `j`.
pub fn jacobian(coords: &[Poly]) -> Result<Vec<Vec<Poly>>> {
    let Some(first) = coords.first() else {
        return Ok(Vec::new());
    };
    let n = first.nvars();
    for c in coords {
        if c.nvars() != n {
            return Err(Error::VarMismatch {
                left: n,
                right: c.nvars(),
            });
        }
    }
    Ok(coords
        .iter()
        .map(|c| (0..n).map(|j| c.derivative(j)).collect())
        .collect())
}
