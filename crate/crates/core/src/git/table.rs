//! Exponents as linear forms in block parameters.
//!
//! Under the block weights `(r, .., r, -s, .., -s, -t)` every exponent
//! `w_j - <i, w>` is an integer combination of `r`, `s` and `t`. This module
//! computes those combinations symbolically, both for the support of a given
//! Hénon map and for the generic row patterns that every Hénon map of shape
//! `(N, k, d)` draws from.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::henon::HenonSpec;
use crate::poly::Monomial;

/// `r * r + s * s + t * t` with integer coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct LinearForm {
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

impl LinearForm {
    pub const ZERO: LinearForm = LinearForm { r: 0, s: 0, t: 0 };
    pub const R: LinearForm = LinearForm { r: 1, s: 0, t: 0 };
    pub const S: LinearForm = LinearForm { r: 0, s: 1, t: 0 };
    pub const T: LinearForm = LinearForm { r: 0, s: 0, t: 1 };

    pub fn new(r: i64, s: i64, t: i64) -> Self {
        LinearForm { r, s, t }
    }

    pub fn eval(&self, r: i64, s: i64, t: i64) -> i64 {
        self.r * r + self.s * s + self.t * t
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(self, o: LinearForm) -> LinearForm {
        LinearForm::new(self.r + o.r, self.s + o.s, self.t + o.t)
    }
}

impl Sub for LinearForm {
    type Output = LinearForm;
    fn sub(self, o: LinearForm) -> LinearForm {
        self + (-o)
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        LinearForm::new(-self.r, -self.s, -self.t)
    }
}

impl Mul<LinearForm> for i64 {
    type Output = LinearForm;
    fn mul(self, f: LinearForm) -> LinearForm {
        LinearForm::new(self * f.r, self * f.s, self * f.t)
    }
}

/// Renders as e.g. `-r-s+t`, `r+s+2t`, `-s+2t` or `0`.
impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, name) in [(self.r, 'r'), (self.s, 's'), (self.t, 't')] {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Weight of each coordinate `x_1 .. x_{N+1}` as a form in `r, s, t`.
pub fn block_weight_forms(n: usize, k: usize) -> Vec<LinearForm> {
    (1..=n + 1)
        .map(|i| {
            if i < k {
                LinearForm::R
            } else if i <= n {
                -LinearForm::S
            } else {
                -LinearForm::T
            }
        })
        .collect()
}

/// `w_j - <i, w>` with symbolic weights; `j` is 0-based.
pub fn symbolic_exponent(j: usize, i: &Monomial, weights: &[LinearForm]) -> LinearForm {
    i.exponents()
        .iter()
        .zip(weights)
        .fold(weights[j], |acc, (&e, &w)| acc - i64::from(e) * w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RowLabel {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl RowLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowLabel::I => "I",
            RowLabel::II => "II",
            RowLabel::III => "III",
            RowLabel::IV => "IV",
            RowLabel::V => "V",
            RowLabel::VI => "VI",
        }
    }

    /// Coordinates (1-based) the row ranges over.
    pub fn coordinates(&self) -> &'static str {
        match self {
            RowLabel::I => "1..k-2",
            RowLabel::II => "k-1",
            RowLabel::III => "k..N-1",
            RowLabel::IV => "k..N",
            RowLabel::V => "N",
            RowLabel::VI => "N+1",
        }
    }

    pub fn pattern(&self) -> &'static str {
        match self {
            RowLabel::I | RowLabel::III => "x_{j+1}*x_{N+1}^(d-1)",
            RowLabel::II => "x_k*x_{N+1}^(d-1)",
            RowLabel::IV => "(degree m in x_k..x_N)*x_{N+1}^(d-m)",
            RowLabel::V => "x_1*x_{N+1}^(d-1)",
            RowLabel::VI => "x_{N+1}^d",
        }
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One exponent entry: coordinate `coordinate` (1-based) and monomial
/// `monomial`, whose exponent is `form`. `m` is set for row IV.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: RowLabel,
    pub coordinate: usize,
    #[serde(serialize_with = "serialize_monomial")]
    pub monomial: Monomial,
    pub m: Option<u32>,
    pub form: LinearForm,
}

fn serialize_monomial<S: serde::Serializer>(m: &Monomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.exponents())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicExponentTable {
    pub n: usize,
    pub k: usize,
    pub d: u32,
    pub rows: Vec<TableRow>,
}

impl SymbolicExponentTable {
    pub fn rows_labeled(&self, label: RowLabel) -> impl Iterator<Item = &TableRow> {
        self.rows.iter().filter(move |r| r.label == label)
    }
}

/// Classifies a support term of a homogenized Hénon map of shape `(n, k, d)`.
/// `j` is 1-based.
fn classify(n: usize, k: usize, d: u32, j: usize, i: &Monomial) -> (RowLabel, Option<u32>) {
    let e = i.exponents();
    let last = e[n];
    let is_shift = |idx: usize| e[idx] == 1 && last == d - 1;
    if j <= k.saturating_sub(2) {
        (RowLabel::I, None)
    } else if j == k - 1 {
        (RowLabel::II, None)
    } else if j <= n {
        let target = if j < n { j } else { 0 };
        if is_shift(target) {
            if j < n {
                (RowLabel::III, None)
            } else {
                (RowLabel::V, None)
            }
        } else {
            (RowLabel::IV, Some(d - last))
        }
    } else {
        (RowLabel::VI, None)
    }
}

/// Every support term of the homogenized map of `spec`, labeled by row.
pub fn symbolic_table(spec: &HenonSpec) -> SymbolicExponentTable {
    let (n, k, d) = (spec.n(), spec.k(), spec.d());
    let weights = block_weight_forms(n, k);
    let map = spec.homogenize_map();
    let rows = map
        .support()
        .into_iter()
        .map(|(j, i)| {
            let (label, m) = classify(n, k, d, j + 1, &i);
            TableRow {
                label,
                coordinate: j + 1,
                form: symbolic_exponent(j, &i, &weights),
                monomial: i,
                m,
            }
        })
        .collect();
    SymbolicExponentTable { n, k, d, rows }
}

/// The row patterns available to Hénon maps of shape `(n, k, d)`, each with a
/// representative coordinate and monomial. Row IV appears once per `m`.
pub fn generic_table(n: usize, k: usize, d: u32) -> Result<SymbolicExponentTable> {
    if !(2..=n).contains(&k) || d < 2 {
        return Err(Error::OutOfRange(format!(
            "need N >= k >= 2 and d >= 2, got N={n}, k={k}, d={d}"
        )));
    }
    let weights = block_weight_forms(n, k);
    let mono = |pairs: &[(usize, u32)]| {
        let mut e = vec![0u32; n + 1];
        for &(idx, p) in pairs {
            e[idx] += p;
        }
        Monomial::new(e)
    };
    let h = n; // 0-based index of x_{N+1}
    let mut specs: Vec<(RowLabel, usize, Monomial, Option<u32>)> = Vec::new();
    if k >= 3 {
        specs.push((RowLabel::I, 1, mono(&[(1, 1), (h, d - 1)]), None));
    }
    specs.push((RowLabel::II, k - 1, mono(&[(k - 1, 1), (h, d - 1)]), None));
    if k < n {
        specs.push((RowLabel::III, k, mono(&[(k, 1), (h, d - 1)]), None));
    }
    for m in 0..=d {
        specs.push((RowLabel::IV, n, mono(&[(k - 1, m), (h, d - m)]), Some(m)));
    }
    specs.push((RowLabel::V, n, mono(&[(0, 1), (h, d - 1)]), None));
    specs.push((RowLabel::VI, n + 1, mono(&[(h, d)]), None));

    let rows = specs
        .into_iter()
        .map(|(label, coordinate, monomial, m)| TableRow {
            label,
            coordinate,
            form: symbolic_exponent(coordinate - 1, &monomial, &weights),
            monomial,
            m,
        })
        .collect();
    Ok(SymbolicExponentTable { n, k, d, rows })
}

/// The 18 exponent forms of a generic quadratic map of `P^2` under the
/// weights `(r, s - r, -s)`, in coordinate-major order with monomials
/// `x^2, y^2, z^2, xy, yz, xz`. Only the `r` and `s` fields are used.
pub fn plane_quadratic_table() -> Vec<(usize, Monomial, LinearForm)> {
    let weights = [LinearForm::R, LinearForm::S - LinearForm::R, -LinearForm::S];
    let monomials = [
        [2, 0, 0],
        [0, 2, 0],
        [0, 0, 2],
        [1, 1, 0],
        [0, 1, 1],
        [1, 0, 1],
    ];
    let mut out = Vec::with_capacity(18);
    for j in 0..3 {
        for e in monomials {
            let m = Monomial::new(e.to_vec());
            let form = symbolic_exponent(j, &m, &weights);
            out.push((j, m, form));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(LinearForm::new(-1, -1, 1).to_string(), "-r-s+t");
        assert_eq!(LinearForm::new(0, -1, 2).to_string(), "-s+2t");
        assert_eq!(LinearForm::new(1, 1, 2).to_string(), "r+s+2t");
        assert_eq!(LinearForm::ZERO.to_string(), "0");
    }

    #[test]
    fn generic_rows_match_closed_forms() {
        for n in 2..=5usize {
            for k in 2..=n {
                for d in 2..=4u32 {
                    let table = generic_table(n, k, d).unwrap();
                    let dm1 = i64::from(d) - 1;
                    for row in &table.rows {
                        let expected = match row.label {
                            RowLabel::I | RowLabel::III | RowLabel::VI => LinearForm::new(0, 0, dm1),
                            RowLabel::II => LinearForm::new(1, 1, dm1),
                            RowLabel::IV => {
                                let m = i64::from(row.m.unwrap());
                                LinearForm::new(0, m - 1, i64::from(d) - m)
                            }
                            RowLabel::V => LinearForm::new(-1, -1, dm1),
                        };
                        assert_eq!(row.form, expected, "{n} {k} {d} {:?}", row.label);
                    }
                    assert_eq!(table.rows_labeled(RowLabel::I).count(), usize::from(k >= 3));
                    assert_eq!(table.rows_labeled(RowLabel::III).count(), usize::from(k < n));
                }
            }
        }
    }

    #[test]
    fn plane_table_spot_checks() {
        let t = plane_quadratic_table();
        let find = |j: usize, e: [u32; 3]| {
            t.iter()
                .find(|(jj, m, _)| *jj == j && m.exponents() == e)
                .unwrap()
                .2
        };
        assert_eq!(find(1, [1, 0, 1]), LinearForm::new(-2, 2, 0));
        assert_eq!(find(0, [0, 1, 1]), LinearForm::new(2, 0, 0));
        assert_eq!(find(2, [0, 0, 2]), LinearForm::new(0, 1, 0));
    }
}
