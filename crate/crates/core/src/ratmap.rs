//! Rational self-maps of projective space given by homogeneous coordinates.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::poly::{self, default_var_names, gcd_many, int, Monomial, Poly, Rat};

/// A point of projective space, scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(Vec<Rat>);

impl ProjPoint {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        let Some(first) = coords.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::InvalidMap("projective point with all coordinates zero".into()));
        };
        Ok(ProjPoint(coords.into_iter().map(|c| c / &first).collect()))
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        parts.serialize(s)
    }
}

/// The line `u x + v y + w z = 0` in the plane, first nonzero coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineP2([Rat; 3]);

impl LineP2 {
    pub fn new(u: Rat, v: Rat, w: Rat) -> Result<Self> {
        let p = ProjPoint::new(vec![u, v, w])
            .map_err(|_| Error::InvalidMap("line with all coefficients zero".into()))?;
        let [u, v, w]: [Rat; 3] = p.0.try_into().expect("three coefficients");
        Ok(LineP2([u, v, w]))
    }

    /// From a linear form in three variables.
    pub fn from_poly(p: &Poly) -> Result<Self> {
        if p.nvars() != 3 || p.degree() != poly::Degree::Finite(1) || !p.is_homogeneous() {
            return Err(Error::InvalidMap(format!("not a linear form in x, y, z: {p}")));
        }
        let c = |i| p.coeff(&Monomial::var(3, i));
        Self::new(c(0), c(1), c(2))
    }

    pub fn coeffs(&self) -> &[Rat; 3] {
        &self.0
    }

    pub fn to_poly(&self) -> Poly {
        let terms = (0..3).map(|i| (Monomial::var(3, i), self.0[i].clone()));
        Poly::from_terms(3, terms)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.0.iter().zip(p.coords()).map(|(a, b)| a * b).sum::<Rat>().is_zero()
    }
}

impl fmt::Display for LineP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} = 0}}", self.to_poly())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImageKind {
    Point,
    Line,
    IrreducibleConic,
    ReducibleOrDegenerate,
}

/// Closure of the image of a line under a quadratic map of the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaneCurveImage {
    Point(ProjPoint),
    Line(LineP2),
    IrreducibleConic(Poly),
    /// Degree-2 equation with a singular symmetric matrix, e.g. a line
    /// covered twice.
    ReducibleOrDegenerate(Poly),
}

impl PlaneCurveImage {
    pub fn kind(&self) -> ImageKind {
        match self {
            PlaneCurveImage::Point(_) => ImageKind::Point,
            PlaneCurveImage::Line(_) => ImageKind::Line,
            PlaneCurveImage::IrreducibleConic(_) => ImageKind::IrreducibleConic,
            PlaneCurveImage::ReducibleOrDegenerate(_) => ImageKind::ReducibleOrDegenerate,
        }
    }

    /// Defining equation; `None` for a point.
    pub fn equation(&self) -> Option<Poly> {
        match self {
            PlaneCurveImage::Point(_) => None,
            PlaneCurveImage::Line(l) => Some(l.to_poly()),
            PlaneCurveImage::IrreducibleConic(q) | PlaneCurveImage::ReducibleOrDegenerate(q) => {
                Some(q.clone())
            }
        }
    }
}

/// A degree-`d` rational self-map of `P^N`: `N + 1` homogeneous coordinate
/// polynomials of degree `d` in `N + 1` variables, not all zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjMap {
    n: usize,
    degree: u32,
    coords: Vec<Poly>,
}

impl ProjMap {
    /// Validates shape and homogeneity; does not normalize.
    pub fn new(coords: Vec<Poly>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidMap("need at least two coordinates".into()));
        }
        let nvars = coords.len();
        for c in &coords {
            if c.nvars() != nvars {
                return Err(Error::VarMismatch {
                    left: nvars,
                    right: c.nvars(),
                });
            }
        }
        let mut degree = None;
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(Error::CoordinateNotHomogeneous { coordinate: i + 1 });
            }
            let d = c.degree_or_zero();
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(Error::CoordinateDegree {
                        coordinate: i + 1,
                        expected: e,
                        found: d,
                    })
                }
                _ => {}
            }
        }
        let degree = degree.ok_or(Error::AllZeroMap)?;
        if degree == 0 {
            return Err(Error::InvalidMap("constant map".into()));
        }
        Ok(ProjMap {
            n: nvars - 1,
            degree,
            coords,
        })
    }

    pub fn identity(n: usize) -> Self {
        ProjMap {
            n,
            degree: 1,
            coords: (0..=n).map(|i| Poly::var(n + 1, i)).collect(),
        }
    }

    /// The linear map `x -> A x`.
    pub fn linear(a: &Matrix) -> Result<Self> {
        let nv = a.len();
        let coords = a
            .iter()
            .map(|row| Poly::from_terms(nv, row.iter().enumerate().map(|(j, c)| (Monomial::var(nv, j), c.clone()))))
            .collect();
        ProjMap::new(coords)
    }

    /// Dimension `N` of the projective space.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    /// Every `(coordinate index, monomial)` with a nonzero coefficient.
    pub fn support(&self) -> Vec<(usize, Monomial)> {
        self.coords
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.support().map(move |m| (j, m.clone())))
            .collect()
    }

    /// `self ∘ inner`, without normalization.
    pub fn compose(&self, inner: &ProjMap) -> Result<ProjMap> {
        if inner.nvars() != self.nvars() {
            return Err(Error::VarMismatch {
                left: self.nvars(),
                right: inner.nvars(),
            });
        }
        let coords = self
            .coords
            .iter()
            .map(|c| c.compose(&inner.coords))
            .collect::<Result<Vec<_>>>()?;
        ProjMap::new(coords)
    }

    pub fn coordinate_gcd(&self) -> Poly {
        gcd_many(&self.coords).expect("at least two coordinates")
    }

    /// True when the coordinates share no nonconstant factor.
    pub fn is_normalized(&self) -> bool {
        self.coordinate_gcd().is_constant()
    }

    /// Divides out the common factor of the coordinates, then rescales so the
    /// coefficients are coprime integers and the leading coefficient of the
    /// first nonzero coordinate is positive.
    pub fn normalize(&self) -> Result<ProjMap> {
        let g = self.coordinate_gcd();
        let coords: Vec<Poly> = if g.is_constant() {
            self.coords.clone()
        } else {
            self.coords
                .iter()
                .map(|c| c.div_exact(&g).expect("gcd divides every coordinate"))
                .collect()
        };
        let scale = poly::content_scalar(coords.iter().flat_map(|c| c.terms().map(|(_, a)| a)));
        let mut factor = scale.recip();
        let first = coords.iter().find(|c| !c.is_zero()).ok_or(Error::AllZeroMap)?;
        if first.leading_coeff().is_some_and(|c| c.is_negative()) {
            factor = -factor;
        }
        ProjMap::new(coords.iter().map(|c| c.scale(&factor)).collect())
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Vec<Rat>> {
        self.coords.iter().map(|c| c.evaluate(point)).collect()
    }

    /// Equality as points of projective coefficient space (up to one scalar).
    pub fn projectively_eq(&self, other: &ProjMap) -> bool {
        if self.nvars() != other.nvars() || self.degree != other.degree {
            return false;
        }
        let Some((j, c)) = self.coords.iter().enumerate().find(|(_, c)| !c.is_zero()) else {
            return false;
        };
        let (m, a) = c.leading_term().expect("nonzero");
        let b = other.coords[j].coeff(m);
        if b.is_zero() {
            return false;
        }
        let ratio = b / a;
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(p, q)| p.scale(&ratio) == *q)
    }

    /// `A ∘ self ∘ A^{-1}` for an invertible matrix `A`.
    pub fn conjugate(&self, a: &Matrix) -> Result<ProjMap> {
        let inv = linalg::inverse(a).ok_or_else(|| Error::InvalidMap("singular matrix".into()))?;
        let outer = ProjMap::linear(a)?;
        let inner = ProjMap::linear(&inv)?;
        outer.compose(&self.compose(&inner)?)
    }

    /// Canonical text form `map N=.. d=.. vars=(..): [ .. : .. ]`.
    pub fn to_text(&self, names: &[String]) -> String {
        let coords: Vec<String> = self.coords.iter().map(|c| c.to_string_with(names)).collect();
        format!(
            "map N={} d={} vars=({}): [{}]",
            self.n,
            self.degree,
            names.join(","),
            coords.join(" : ")
        )
    }
}

impl fmt::Display for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&default_var_names(self.nvars())))
    }
}

/// `[deg F, deg F^2, ..., deg F^n]`, each iterate normalized before the next
/// composition.
pub fn iterate_degrees(m: &ProjMap, n: usize) -> Result<Vec<u32>> {
    let mut current = m.normalize()?;
    let mut degrees = Vec::with_capacity(n);
    if n == 0 {
        return Ok(degrees);
    }
    degrees.push(current.degree());
    for k in 2..=n {
        let raw = m
            .compose(&current)
            .map_err(|e| match e {
                Error::AllZeroMap | Error::InvalidMap(_) => Error::DegenerateComposition { iterate: k },
                other => other,
            })?;
        current = raw.normalize().map_err(|e| match e {
            Error::AllZeroMap | Error::InvalidMap(_) => Error::DegenerateComposition { iterate: k },
            other => other,
        })?;
        degrees.push(current.degree());
    }
    Ok(degrees)
}

/// Whether `deg F^k = (deg F)^k` for every `k <= n`. Only a finite prefix is
/// checked.
pub fn is_algebraically_stable_upto(m: &ProjMap, n: usize) -> Result<bool> {
    let degs = iterate_degrees(m, n)?;
    let d = u64::from(degs.first().copied().unwrap_or(1));
    Ok(degs
        .iter()
        .enumerate()
        .all(|(k, &e)| u64::from(e) == d.pow(k as u32 + 1)))
}

/// Dominance via a Jacobian determinant that is not identically zero.
pub fn is_dominant(m: &ProjMap) -> bool {
    let jac = poly::jacobian(m.coords()).expect("coordinates share a ring");
    // A nonzero value at any point settles it without symbolic expansion.
    let nv = m.nvars();
    for k in 0..3i64 {
        let point: Vec<Rat> = (0..nv as i64).map(|i| int(2 + 3 * i + 7 * k + i * i * (k + 1))).collect();
        let numeric: Matrix = jac
            .iter()
            .map(|row| row.iter().map(|e| e.evaluate(&point).expect("arity")).collect())
            .collect();
        if !linalg::determinant(&numeric).is_zero() {
            return true;
        }
    }
    !poly::determinant(jac, nv).is_zero()
}

pub(crate) fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(prefix, left - 1, d - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), nvars, d, &mut out);
    out
}

/// Whether a map of the plane has no base points.
///
/// Three ternary forms of degree `d` have no common zero over the algebraic
/// closure exactly when the ideal they generate contains every form of degree
/// `3d - 2`, i.e. when the degree-`(3d - 2)` Macaulay matrix has full column
/// rank. The rank is computed over the rationals, which decides the question
/// over the algebraic closure as well.
pub fn is_morphism_p2(m: &ProjMap) -> Result<bool> {
    if m.n() != 2 {
        return Err(Error::WrongShape {
            expected_n: 2,
            expected_d: m.degree(),
            n: m.n(),
            d: m.degree(),
        });
    }
    if !m.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let d = m.degree();
    Ok(generates_all_forms(m.coords(), 3 * d - 2))
}

/// Whether the homogeneous `forms` (in a common ring) span every form of
/// degree `target` after multiplication by monomials.
pub(crate) fn generates_all_forms(forms: &[Poly], target: u32) -> bool {
    let nv = forms[0].nvars();
    let columns = monomials_of_degree(nv, target);
    let index: std::collections::HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, mono)| (mono, i)).collect();
    let mut rows: Matrix = Vec::new();
    for f in forms {
        if f.is_zero() {
            continue;
        }
        let d = f.degree_or_zero();
        if d > target {
            continue;
        }
        for mult in monomials_of_degree(nv, target - d) {
            let mut row = vec![Rat::zero(); columns.len()];
            for (mono, c) in f.mul_monomial(&mult).terms() {
                row[index[mono]] = c.clone();
            }
            rows.push(row);
        }
    }
    linalg::rank(&rows) == columns.len()
}

/// Image of a line under a dominant quadratic map of the plane.
///
/// The line is parametrized linearly by `P^1`, the three resulting binary
/// forms lose their common factor, and the reduced forms decide the result:
/// constants give a point, linear forms a line, and quadratic forms a conic
/// found as the kernel of the map sending a ternary quadric to its pullback.
pub fn line_image(m: &ProjMap, line: &LineP2) -> Result<PlaneCurveImage> {
    if m.n() != 2 || m.degree() != 2 {
        return Err(Error::WrongShape {
            expected_n: 2,
            expected_d: 2,
            n: m.n(),
            d: m.degree(),
        });
    }
    if !is_dominant(m) {
        return Err(Error::NotDominant);
    }
    let basis = linalg::kernel(&vec![line.coeffs().to_vec()], 3);
    let (p, q) = (&basis[0], &basis[1]);
    // x_i = p_i s + q_i t
    let param: Vec<Poly> = (0..3)
        .map(|i| {
            Poly::from_terms(
                2,
                [
                    (Monomial::new(vec![1, 0]), p[i].clone()),
                    (Monomial::new(vec![0, 1]), q[i].clone()),
                ],
            )
        })
        .collect();
    let forms: Vec<Poly> = m
        .coords()
        .iter()
        .map(|c| c.compose(&param))
        .collect::<Result<_>>()?;
    if forms.iter().all(Poly::is_zero) {
        return Err(Error::NotNormalized);
    }
    let g = gcd_many(&forms).expect("three forms");
    let reduced: Vec<Poly> = forms
        .iter()
        .map(|f| f.div_exact(&g).expect("gcd divides"))
        .collect();
    let e = reduced
        .iter()
        .find(|f| !f.is_zero())
        .map(Poly::degree_or_zero)
        .expect("some form is nonzero");
    let coeff_rows = |deg: u32| -> Matrix {
        let monos = monomials_of_degree(2, deg);
        reduced
            .iter()
            .map(|f| monos.iter().map(|mono| f.coeff(mono)).collect())
            .collect()
    };
    match e {
        0 => Ok(PlaneCurveImage::Point(ProjPoint::new(
            reduced.iter().map(|f| f.constant_value().expect("constant")).collect(),
        )?)),
        1 => {
            // The image line passes through the images of (1:0) and (0:1).
            let c = coeff_rows(1);
            let (a, b): (Vec<Rat>, Vec<Rat>) = c.iter().map(|r| (r[0].clone(), r[1].clone())).unzip();
            let cross = [
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ];
            let [u, v, w] = cross;
            Ok(PlaneCurveImage::Line(LineP2::new(u, v, w)?))
        }
        2 => {
            let quadrics = monomials_of_degree(3, 2);
            let quartics = monomials_of_degree(2, 4);
            let pulled: Vec<Poly> = quadrics
                .iter()
                .map(|q| Poly::term(q.clone(), Rat::one()).compose(&reduced))
                .collect::<Result<_>>()?;
            let system: Matrix = quartics
                .iter()
                .map(|mono| pulled.iter().map(|p| p.coeff(mono)).collect())
                .collect();
            let kernel = linalg::kernel(&system, quadrics.len());
            let equation = if kernel.len() == 1 {
                Poly::from_terms(3, quadrics.iter().cloned().zip(kernel[0].iter().cloned())).primitive()
            } else {
                // The reduced forms span only a plane of binary quadrics: the
                // image is a line traversed twice.
                let left = linalg::kernel(&transpose(&coeff_rows(2)), 3);
                let l = LineP2::new(left[0][0].clone(), left[0][1].clone(), left[0][2].clone())?;
                l.to_poly().pow(2).primitive()
            };
            if conic_rank(&equation) == 3 {
                Ok(PlaneCurveImage::IrreducibleConic(equation))
            } else {
                Ok(PlaneCurveImage::ReducibleOrDegenerate(equation))
            }
        }
        _ => Err(Error::Internal(format!("line image of degree {e} for a quadratic map"))),
    }
}

fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Rank of the symmetric matrix of a ternary quadratic form.
pub fn conic_rank(q: &Poly) -> usize {
    let two = int(2);
    let mut s = vec![vec![Rat::zero(); 3]; 3];
    for (mono, c) in q.terms() {
        let e = mono.exponents();
        let idx: Vec<usize> = (0..3).flat_map(|i| std::iter::repeat_n(i, e[i] as usize)).collect();
        if idx.len() != 2 {
            continue;
        }
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            s[i][i] = c.clone();
        } else {
            s[i][j] = c / &two;
            s[j][i] = c / &two;
        }
    }
    linalg::rank(&s)
}
