//! Quadratic rational maps of the plane: linear fibering, degree drop of the
//! second iterate, and the resulting semistability verdict.
//!
//! A point `p` is a *center* of `F` when every quadric `ℓ ∘ F` with `ℓ(p) = 0`
//! is singular at `p`. Equivalently, for the two linear forms `L_1, L_2`
//! vanishing at `p`, both `L_a ∘ F` are quadratic forms in `L_1, L_2`, so the
//! projection `π = [L_1 : L_2]` satisfies `π ∘ F = G ∘ π` for a pair of binary
//! quadrics `G`. In coordinates with `p = (1:0:0)` this is the shape
//! `[F_1(x, y, z) : F_2(y, z) : F_3(y, z)]`.
//!
//! An unstable dominant quadratic map has a center or satisfies
//! `deg F^2 <= 2`. [`rat22_verdict`] applies the contrapositive: with neither,
//! the map is semistable.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::henon::HenonSpec;
use crate::linalg::{self, Matrix};
use crate::poly::{gcd_many, rational_roots, resultant, Monomial, Poly, Rat};
use crate::ratmap::{
    self, generates_all_forms, is_dominant, line_image, ImageKind, LineP2, PlaneCurveImage,
    ProjMap, ProjPoint,
};

fn check_shape(f: &ProjMap) -> Result<()> {
    if f.n() != 2 || f.degree() != 2 {
        return Err(Error::WrongShape {
            expected_n: 2,
            expected_d: 2,
            n: f.n(),
            d: f.degree(),
        });
    }
    Ok(())
}

fn check_input(f: &ProjMap) -> Result<()> {
    check_shape(f)?;
    if !f.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if !is_dominant(f) {
        return Err(Error::NotDominant);
    }
    Ok(())
}

/// The nine quadrics `p_j ∇F_i(p) - p_i ∇F_j(p)` whose common zeros are the
/// centers, as polynomials in the coordinates of `p`.
pub fn center_equations(f: &ProjMap) -> Vec<Poly> {
    let c = f.coords();
    let mut out = Vec::with_capacity(9);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (pi, pj) = (Poly::var(3, i), Poly::var(3, j));
        for v in 0..3 {
            out.push(&(&pj * &c[i].derivative(v)) - &(&pi * &c[j].derivative(v)));
        }
    }
    out
}

/// Part of the center locus that was not reduced to rational points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Unresolved {
    /// Affine chart, e.g. `x = 1`.
    pub chart: String,
    pub description: String,
    /// Degree of the leftover curve or of the polynomial with no rational roots.
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterSearch {
    /// All rational centers, sorted.
    pub centers: Vec<ProjPoint>,
    /// Whether any center exists over the algebraic closure. Decided exactly:
    /// the nine quadrics have no common zero iff they generate every quartic.
    pub exist_over_closure: bool,
    pub unresolved: Vec<Unresolved>,
}

impl CenterSearch {
    /// Centers exist but none of them is rational.
    pub fn only_nonrational(&self) -> bool {
        self.exist_over_closure && self.centers.is_empty()
    }
}

/// Every rational center of a dominant normalized quadratic map of the plane.
///
/// The nine equations are solved chart by chart: `x = 1` by elimination with
/// resultants and back-substitution, `x = 0, y = 1` as a univariate problem,
/// and the point `(0:0:1)` directly. Every candidate is checked against all
/// nine equations. Content that does not reduce to rational points is listed
/// in `unresolved`.
pub fn fibering_centers(f: &ProjMap) -> Result<CenterSearch> {
    check_input(f)?;
    let eqs: Vec<Poly> = center_equations(f)
        .into_iter()
        .filter(|e| !e.is_zero())
        .map(|e| e.primitive())
        .collect();
    let exist_over_closure = eqs.is_empty() || !generates_all_forms(&eqs, 4);

    let mut centers = Vec::new();
    let mut unresolved = Vec::new();
    let on_all = |pt: &[Rat]| eqs.iter().all(|e| e.evaluate(pt).expect("arity").is_zero());

    // x = 1
    let chart: Vec<Poly> = eqs.iter().map(|e| e.substitute(0, &Rat::one())).collect();
    let (pairs, mut open) = solve_two_vars(&chart, 1, 2, "x = 1");
    unresolved.append(&mut open);
    for (y, z) in pairs {
        let pt = vec![Rat::one(), y, z];
        if on_all(&pt) {
            centers.push(ProjPoint::new(pt)?);
        }
    }

    // x = 0, y = 1
    let line: Vec<Poly> = eqs
        .iter()
        .map(|e| e.substitute(0, &Rat::zero()).substitute(1, &Rat::one()))
        .filter(|e| !e.is_zero())
        .collect();
    match gcd_many(&line) {
        None => unresolved.push(Unresolved {
            chart: "x = 0, y = 1".into(),
            description: "every point of the line {x = 0} satisfies the equations".into(),
            degree: 1,
        }),
        Some(g) => {
            let r = rational_roots(&g)?;
            if r.cofactor_degree > 0 {
                unresolved.push(Unresolved {
                    chart: "x = 0, y = 1".into(),
                    description: format!("z is a root of a factor of {g} with no rational roots"),
                    degree: r.cofactor_degree,
                });
            }
            let mut roots = r.roots;
            roots.dedup();
            for z in roots {
                let pt = vec![Rat::zero(), Rat::one(), z];
                if on_all(&pt) {
                    centers.push(ProjPoint::new(pt)?);
                }
            }
        }
    }

    let corner = vec![Rat::zero(), Rat::zero(), Rat::one()];
    if on_all(&corner) {
        centers.push(ProjPoint::new(corner)?);
    }

    centers.sort();
    centers.dedup();
    if !exist_over_closure {
        debug_assert!(centers.is_empty());
        // Leftover factors cannot carry solutions when none exist at all.
        unresolved.clear();
    }
    Ok(CenterSearch {
        centers,
        exist_over_closure,
        unresolved,
    })
}

/// Rational common zeros of polynomials involving only variables `a` and `b`.
fn solve_two_vars(eqs: &[Poly], a: usize, b: usize, chart: &str) -> (Vec<(Rat, Rat)>, Vec<Unresolved>) {
    let mut unresolved = Vec::new();
    let mut eqs: Vec<Poly> = eqs.iter().filter(|e| !e.is_zero()).map(Poly::primitive).collect();
    eqs.sort_by_key(Poly::num_terms);
    eqs.dedup();
    if eqs.is_empty() {
        unresolved.push(Unresolved {
            chart: chart.into(),
            description: "the whole chart satisfies the equations".into(),
            degree: 0,
        });
        return (Vec::new(), unresolved);
    }
    let g = gcd_many(&eqs).expect("nonempty");
    if !g.is_constant() {
        unresolved.push(Unresolved {
            chart: chart.into(),
            description: format!("curve {g} = 0"),
            degree: g.degree_or_zero(),
        });
        eqs = eqs.iter().map(|e| e.div_exact(&g).expect("gcd divides")).collect();
    }
    if eqs.iter().any(Poly::is_constant) {
        return (Vec::new(), unresolved);
    }

    // Univariate eliminant in `a`: gcd of the equations free of `b` and of
    // resultants with respect to `b` of pairs and of two fixed combinations.
    let mut eliminants: Vec<Poly> = eqs.iter().filter(|e| !e.involves(b)).cloned().collect();
    let with_b: Vec<&Poly> = eqs.iter().filter(|e| e.involves(b)).collect();
    let combo = |weights: &dyn Fn(usize) -> i64| {
        eqs.iter()
            .enumerate()
            .fold(Poly::zero(eqs[0].nvars()), |acc, (i, e)| &acc + &e.scale(&Rat::from_integer(weights(i).into())))
    };
    let c1 = combo(&|i| 1 + i as i64);
    let c2 = combo(&|i| if i % 2 == 0 { 3 - i as i64 } else { 2 * i as i64 + 5 });
    let mut candidates: Vec<(&Poly, &Poly)> = Vec::new();
    for i in 0..with_b.len() {
        for j in i + 1..with_b.len() {
            candidates.push((with_b[i], with_b[j]));
        }
    }
    if c1.involves(b) && c2.involves(b) {
        candidates.push((&c1, &c2));
    }
    let mut current: Option<Poly> = gcd_many(&eliminants);
    for (p, q) in candidates {
        if current.as_ref().is_some_and(|c| c.is_constant()) {
            break;
        }
        let r = resultant(p, q, b).expect("nonzero inputs");
        if r.is_zero() {
            continue;
        }
        eliminants.push(r);
        current = gcd_many(&eliminants);
    }
    let Some(u) = current else {
        unresolved.push(Unresolved {
            chart: chart.into(),
            description: "elimination produced no nonzero eliminant".into(),
            degree: 0,
        });
        return (Vec::new(), unresolved);
    };
    let ra = match rational_roots(&u) {
        Ok(r) => r,
        Err(_) => {
            unresolved.push(Unresolved {
                chart: chart.into(),
                description: format!("eliminant {u} is not univariate"),
                degree: u.degree_or_zero(),
            });
            return (Vec::new(), unresolved);
        }
    };
    if ra.cofactor_degree > 0 {
        unresolved.push(Unresolved {
            chart: chart.into(),
            description: "projection has a factor with no rational roots".into(),
            degree: ra.cofactor_degree,
        });
    }
    let mut a_values = ra.roots;
    a_values.dedup();

    let mut out = Vec::new();
    for a0 in a_values {
        let sub: Vec<Poly> = eqs
            .iter()
            .map(|e| e.substitute(a, &a0))
            .filter(|e| !e.is_zero())
            .collect();
        let Some(w) = gcd_many(&sub) else {
            unresolved.push(Unresolved {
                chart: chart.into(),
                description: format!("whole fiber over {a0}"),
                degree: 1,
            });
            continue;
        };
        let Ok(rb) = rational_roots(&w) else { continue };
        if rb.cofactor_degree > 0 {
            unresolved.push(Unresolved {
                chart: chart.into(),
                description: format!("fiber over {a0} has a factor with no rational roots"),
                degree: rb.cofactor_degree,
            });
        }
        let mut b_values = rb.roots;
        b_values.dedup();
        out.extend(b_values.into_iter().map(|b0| (a0.clone(), b0)));
    }
    (out, unresolved)
}

/// `π = [L_1 : L_2]` with `π ∘ F = G ∘ π`, where `G = (G_1, G_2)` are binary
/// quadrics in the fiber coordinates `(v, w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberingWitness {
    pub center: ProjPoint,
    /// Rows are the coefficient vectors of `L_1` and `L_2`.
    pub pi: Matrix,
    pub g: [Poly; 2],
    /// `G_1` and `G_2` share a factor, so `G` has degree below 2 once reduced.
    pub g_has_common_factor: bool,
}

impl FiberingWitness {
    pub fn linear_forms(&self) -> [Poly; 2] {
        let form = |row: &[Rat]| {
            Poly::from_terms(3, row.iter().enumerate().map(|(i, c)| (Monomial::var(3, i), c.clone())))
        };
        [form(&self.pi[0]), form(&self.pi[1])]
    }

    /// Checks `L_a ∘ F = G_a(L_1, L_2)` by expansion.
    pub fn verify(&self, f: &ProjMap) -> bool {
        let ls = self.linear_forms();
        let subs = [ls[0].clone(), ls[1].clone()];
        (0..2).all(|a| {
            let lhs = ls[a].compose(f.coords());
            let rhs = self.g[a].compose(&subs);
            matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
        })
    }
}

impl Serialize for FiberingWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let xyz: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
        let vw: Vec<String> = ["v", "w"].map(String::from).to_vec();
        let ls = self.linear_forms();
        let mut st = s.serialize_struct("FiberingWitness", 4)?;
        st.serialize_field("center", &self.center)?;
        st.serialize_field("pi", &[ls[0].to_string_with(&xyz), ls[1].to_string_with(&xyz)])?;
        st.serialize_field("g", &[self.g[0].to_string_with(&vw), self.g[1].to_string_with(&vw)])?;
        st.serialize_field("g_has_common_factor", &self.g_has_common_factor)?;
        st.end()
    }
}

/// Linear forms `e_j - p_j e_{i0}` (`j != i0`) spanning those that vanish at
/// `p`, where `i0` is the first nonzero coordinate of `p` (which is 1).
fn vanishing_basis(p: &ProjPoint) -> Matrix {
    let c = p.coords();
    let i0 = c.iter().position(|x| !x.is_zero()).expect("nonzero point");
    (0..3)
        .filter(|&j| j != i0)
        .map(|j| {
            let mut row = vec![Rat::zero(); 3];
            row[j] = Rat::one();
            row[i0] = -c[j].clone();
            row
        })
        .collect()
}

/// The fibering through `p`, when `p` is a center of `F`.
pub fn check_fibering(f: &ProjMap, p: &ProjPoint) -> Result<Option<FiberingWitness>> {
    check_shape(f)?;
    if p.coords().len() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            got: p.coords().len(),
        });
    }
    let pi = vanishing_basis(p);
    let ls: Vec<Poly> = pi
        .iter()
        .map(|row| Poly::from_terms(3, row.iter().enumerate().map(|(i, c)| (Monomial::var(3, i), c.clone()))))
        .collect();
    let basis = [ls[0].pow(2), &ls[0] * &ls[1], ls[1].pow(2)];
    let monos = ratmap::monomials_of_degree(3, 2);
    let system: Matrix = monos
        .iter()
        .map(|m| basis.iter().map(|q| q.coeff(m)).collect())
        .collect();
    let mut g = Vec::with_capacity(2);
    for l in &ls {
        let target = l.compose(f.coords())?;
        let rhs: Vec<Rat> = monos.iter().map(|m| target.coeff(m)).collect();
        let Some(c) = linalg::solve(&system, &rhs) else {
            return Ok(None);
        };
        g.push(Poly::from_terms(
            2,
            [
                (Monomial::new(vec![2, 0]), c[0].clone()),
                (Monomial::new(vec![1, 1]), c[1].clone()),
                (Monomial::new(vec![0, 2]), c[2].clone()),
            ],
        ));
    }
    let g: [Poly; 2] = g.try_into().expect("two forms");
    let common = gcd_many(&g).is_some_and(|h| !h.is_constant());
    Ok(Some(FiberingWitness {
        center: p.clone(),
        pi,
        g_has_common_factor: common || g.iter().any(Poly::is_zero),
        g,
    }))
}

/// `deg F^2` after normalization and whether it is at most 2.
pub fn degree_drop_22(f: &ProjMap) -> Result<(u32, bool)> {
    check_shape(f)?;
    let degs = ratmap::iterate_degrees(f, 2)?;
    Ok((degs[1], degs[1] <= 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Fibered,
    DegreeDrop,
    Both,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    Semistable,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub fibering: Vec<FiberingWitness>,
    pub centers_over_closure: bool,
    pub nonrational_centers_only: bool,
    pub unresolved: Vec<Unresolved>,
    pub iterate_degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rat22Verdict {
    pub branch: Branch,
    pub semistable_conclusion: Conclusion,
    pub centers: Vec<ProjPoint>,
    #[serde(rename = "deg_F2")]
    pub deg_f2: u32,
    pub evidence: Evidence,
}

/// Runs both detectors. A map is fibered when it has a center over the
/// algebraic closure, whether or not a rational one was found; the
/// conclusion is `semistable` only for branch `neither`.
pub fn rat22_verdict(f: &ProjMap) -> Result<Rat22Verdict> {
    check_input(f)?;
    let search = fibering_centers(f)?;
    let (deg_f2, drop) = degree_drop_22(f)?;
    let fibering = search
        .centers
        .iter()
        .map(|p| check_fibering(f, p))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .map(|w| w.ok_or_else(|| Error::Internal("center without fibering".into())))
        .collect::<Result<Vec<_>>>()?;
    let fibered = search.exist_over_closure;
    let branch = match (fibered, drop) {
        (true, true) => Branch::Both,
        (true, false) => Branch::Fibered,
        (false, true) => Branch::DegreeDrop,
        (false, false) => Branch::Neither,
    };
    let semistable_conclusion = if branch == Branch::Neither && search.unresolved.is_empty() {
        Conclusion::Semistable
    } else {
        Conclusion::Unknown
    };
    Ok(Rat22Verdict {
        branch,
        semistable_conclusion,
        deg_f2,
        evidence: Evidence {
            fibering,
            centers_over_closure: search.exist_over_closure,
            nonrational_centers_only: search.only_nonrational(),
            unresolved: search.unresolved,
            iterate_degrees: vec![2, deg_f2],
        },
        centers: search.centers,
    })
}

/// One check of the line-image audit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineCheck {
    pub class: &'static str,
    pub line: String,
    pub expected: String,
    pub observed: String,
    pub kind: ImageKind,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineAudit {
    pub map: String,
    pub checks: Vec<LineCheck>,
    pub all_pass: bool,
}

/// Images of sample lines under a quadratic planar Hénon map
/// `(a y, b x + P(y))`: the line at infinity goes to `[0:1:0]`, a horizontal
/// line `y = B z` to `x = a B z`, and any line `x = λ y + μ z` to the conic
/// `y z = b λ a^{-1} x z + b μ z^2 + P̄(a^{-1} x, z)`.
///
/// `horizontal` lists values of `B`; `slanted` lists pairs `(λ, μ)`.
pub fn henon_line_audit(
    spec: &HenonSpec,
    horizontal: &[Rat],
    slanted: &[(Rat, Rat)],
) -> Result<LineAudit> {
    if spec.n() != 2 || spec.k() != 2 || spec.d() != 2 {
        return Err(Error::InvalidHenon(format!(
            "line audit needs N = k = d = 2, got N={}, k={}, d={}",
            spec.n(),
            spec.k(),
            spec.d()
        )));
    }
    let f = spec.homogenize_map();
    let (b, a) = (spec.b()[0].clone(), spec.b()[1].clone());
    let p = spec.p(2).expect("P_3");
    let z = Rat::zero;
    let one = Rat::one;
    let mut checks = Vec::new();

    let infinity = LineP2::new(z(), z(), one())?;
    let image = line_image(&f, &infinity)?;
    let target = ProjPoint::new(vec![z(), one(), z()])?;
    checks.push(check("infinity", &infinity, target.to_string(), &image, |im| {
        matches!(im, PlaneCurveImage::Point(q) if *q == target)
    }));

    for beta in horizontal {
        let line = LineP2::new(z(), one(), -beta.clone())?;
        let expected = LineP2::new(one(), z(), -(&a * beta))?;
        let image = line_image(&f, &line)?;
        checks.push(check("horizontal", &line, expected.to_string(), &image, |im| {
            matches!(im, PlaneCurveImage::Line(l) if *l == expected)
        }));
    }

    // P̄(a^{-1} x, z) as a ternary quadric.
    let vars: Vec<Poly> = (0..3).map(|i| Poly::var(3, i)).collect();
    let pbar = p
        .homogenize(2)?
        .compose(&[Poly::zero(3), vars[0].scale(&a.recip()), vars[2].clone()])?;
    for (lambda, mu) in slanted {
        let line = LineP2::new(one(), -lambda.clone(), -mu.clone())?;
        let conic = &(&(&vars[1] * &vars[2]) - &(&vars[0] * &vars[2]).scale(&(&b * lambda / &a)))
            - &(&vars[2].pow(2).scale(&(&b * mu)) + &pbar);
        let expected = conic.primitive();
        let image = line_image(&f, &line)?;
        checks.push(check("slanted", &line, format!("{{{expected} = 0}}"), &image, |im| {
            matches!(im, PlaneCurveImage::IrreducibleConic(q) if q.primitive() == expected)
                && ratmap::conic_rank(&expected) == 3
        }));
    }

    let all_pass = checks.iter().all(|c| c.pass);
    Ok(LineAudit {
        map: f.to_string(),
        checks,
        all_pass,
    })
}

fn check(
    class: &'static str,
    line: &LineP2,
    expected: String,
    image: &PlaneCurveImage,
    ok: impl Fn(&PlaneCurveImage) -> bool,
) -> LineCheck {
    let observed = match image {
        PlaneCurveImage::Point(p) => p.to_string(),
        PlaneCurveImage::Line(l) => l.to_string(),
        PlaneCurveImage::IrreducibleConic(q) | PlaneCurveImage::ReducibleOrDegenerate(q) => {
            format!("{{{} = 0}}", q.primitive())
        }
    };
    LineCheck {
        class,
        line: line.to_string(),
        expected,
        observed,
        kind: image.kind(),
        pass: ok(image),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, parse_poly};

    fn map(coords: &[&str]) -> ProjMap {
        let names = ["x", "y", "z"];
        ProjMap::new(coords.iter().map(|c| parse_poly(c, &names).unwrap()).collect()).unwrap()
    }

    fn pt(c: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(c).unwrap()
    }

    #[test]
    fn fibered_map_has_one_center() {
        let phi = map(&["x*z", "y*z + x^2", "z^2"]);
        let s = fibering_centers(&phi).unwrap();
        assert_eq!(s.centers, vec![pt(&[0, 1, 0])]);
        assert!(s.exist_over_closure);
        let w = check_fibering(&phi, &pt(&[0, 1, 0])).unwrap().unwrap();
        assert_eq!(w.linear_forms()[0], parse_poly("x", &["x", "y", "z"]).unwrap());
        assert_eq!(w.linear_forms()[1], parse_poly("z", &["x", "y", "z"]).unwrap());
        // x∘F = xz = L1 L2, z∘F = z^2 = L2^2
        assert_eq!(w.g[0], parse_poly("v*w", &["v", "w"]).unwrap());
        assert_eq!(w.g[1], parse_poly("w^2", &["v", "w"]).unwrap());
        assert!(w.verify(&phi));
        assert!(w.g_has_common_factor);
    }

    #[test]
    fn morphism_and_henon_have_no_centers() {
        for f in [
            map(&["x^2 + y*z", "x*z + y^2", "z^2"]),
            map(&["y*z", "x*z + y^2", "z^2"]),
            map(&["2*y*z", "-3*x*z + y^2 - 5*y*z + 7*z^2", "z^2"]),
        ] {
            let s = fibering_centers(&f).unwrap();
            assert!(s.centers.is_empty());
            assert!(!s.exist_over_closure);
            assert!(s.unresolved.is_empty());
        }
    }

    #[test]
    fn case_one_shape() {
        let f = map(&["x^2 + x*y + z^2", "y^2 + y*z", "z^2 - y*z"]);
        let s = fibering_centers(&f).unwrap();
        assert!(s.centers.contains(&pt(&[1, 0, 0])));
        let w = check_fibering(&f, &pt(&[1, 0, 0])).unwrap().unwrap();
        assert!(w.verify(&f));

        let squares = map(&["x^2", "y^2", "z^2"]);
        let w = check_fibering(&squares, &pt(&[1, 0, 0])).unwrap().unwrap();
        assert_eq!(w.g[0], parse_poly("v^2", &["v", "w"]).unwrap());
        assert_eq!(w.g[1], parse_poly("w^2", &["v", "w"]).unwrap());
        assert!(!w.g_has_common_factor);
        assert!(check_fibering(&squares, &pt(&[1, 1, 0])).unwrap().is_none());
    }

    #[test]
    fn degree_drop() {
        assert_eq!(degree_drop_22(&map(&["y^2", "z*x", "z^2"])).unwrap(), (2, true));
        assert_eq!(degree_drop_22(&map(&["y*z", "x*z + y^2", "z^2"])).unwrap(), (4, false));
        assert_eq!(degree_drop_22(&map(&["x^2 + y*z", "x*z + y^2", "z^2"])).unwrap(), (4, false));
    }

    #[test]
    fn verdicts() {
        let v = rat22_verdict(&map(&["y*z", "x*z + y^2", "z^2"])).unwrap();
        assert_eq!(v.branch, Branch::Neither);
        assert_eq!(v.semistable_conclusion, Conclusion::Semistable);
        assert_eq!(v.deg_f2, 4);

        // phi^2 = (x, y + 2x^2) also has degree 2.
        let v = rat22_verdict(&map(&["x*z", "y*z + x^2", "z^2"])).unwrap();
        assert_eq!(v.branch, Branch::Both);
        assert_eq!(v.centers, vec![pt(&[0, 1, 0])]);
        assert_eq!(v.semistable_conclusion, Conclusion::Unknown);

        let v = rat22_verdict(&map(&["y^2", "z*x", "z^2"])).unwrap();
        assert!(matches!(v.branch, Branch::DegreeDrop | Branch::Both));
        assert_eq!(v.semistable_conclusion, Conclusion::Unknown);

        assert_eq!(rat22_verdict(&map(&["x^2", "x*y", "y^2"])), Err(Error::NotDominant));
        assert!(matches!(
            rat22_verdict(&map(&["x^3", "y^3", "z^3"])),
            Err(Error::WrongShape { .. })
        ));
    }

    #[test]
    fn nonrational_centers_are_not_hidden() {
        // With u = x - √2 y: u∘F = u^2 + u z and z∘F = z^2, so (±√2 : 1 : 0)
        // are centers and neither is rational.
        let f = map(&["x^2 + 2*y^2 + x*z", "2*x*y + y*z", "z^2"]);
        let s = fibering_centers(&f).unwrap();
        assert!(s.centers.is_empty());
        assert!(s.only_nonrational());
        let v = rat22_verdict(&f).unwrap();
        assert!(matches!(v.branch, Branch::Fibered | Branch::Both));
        assert_eq!(v.semistable_conclusion, Conclusion::Unknown);
        assert!(v.evidence.nonrational_centers_only);
    }

    #[test]
    fn line_audit_examples() {
        let xy = ["x", "y"];
        let spec = HenonSpec::classic(int(2), int(1), parse_poly("y^2", &xy).unwrap()).unwrap();
        let audit = henon_line_audit(&spec, &[int(3)], &[(int(1), int(0))]).unwrap();
        assert!(audit.all_pass, "{audit:?}");
        assert_eq!(audit.checks[1].observed, "{x - 6*z = 0}");

        let one = HenonSpec::classic(int(1), int(1), parse_poly("y^2", &xy).unwrap()).unwrap();
        let audit = henon_line_audit(&one, &[], &[(int(1), int(0))]).unwrap();
        assert!(audit.all_pass);
        // y = x + x^2, homogenized
        let expected = parse_poly("y*z - x*z - x^2", &["x", "y", "z"]).unwrap().primitive();
        assert_eq!(audit.checks[1].expected, format!("{{{expected} = 0}}"));
    }
}
