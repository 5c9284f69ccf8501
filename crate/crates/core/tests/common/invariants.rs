//! Module invariants as seeded checks. Each check draws one random instance.

use gitstab::classify2::{self, Branch, Conclusion};
use gitstab::cli::{self, AnalysisRequest, Command};
use gitstab::git::{exponent, henon_block_weights, mu, block_certificate, symbolic_table, LinearForm, RowLabel, WeightVector};
use gitstab::henon::HenonSpec;
use gitstab::linalg;
use gitstab::poly::{default_var_names, gcd, int, parse_poly, resultant, Poly, Rat};
use gitstab::ratmap::{self, LineP2, PlaneCurveImage, ProjPoint};
use gitstab::ProjMap;
use num_traits::{One, Zero};
use rand::Rng;

use super::*;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn random_int_point<R: Rng>(rng: &mut R, len: usize) -> Vec<Rat> {
    (0..len).map(|_| int(rng.gen_range(-6..=6))).collect()
}

pub fn ring_axioms<R: Rng>(r: &mut R) -> Check {
    let p = random_poly(r, 3, 3, 4);
    let q = random_poly(r, 3, 3, 4);
    let h = random_poly(r, 3, 2, 3);
    ensure!(&p * &q == &q * &p, "pq != qp for p={p} q={q}");
    ensure!(&(&p + &q) + &h == &p + &(&q + &h), "addition not associative");
    ensure!(&(&p * &q) * &h == &p * &(&q * &h), "multiplication not associative");
    ensure!(&(&p + &q) * &h == &(&p * &h) + &(&q * &h), "not distributive");
    Ok(())
}

pub fn gcd_multiplicative<R: Rng>(r: &mut R) -> Check {
    let nv = r.gen_range(1..=3);
    let p = random_poly(r, nv, 2, 3);
    let q = random_poly(r, nv, 2, 3);
    let h = random_poly(r, nv, 2, 2);
    if p.is_zero() || q.is_zero() || h.is_zero() {
        return Ok(());
    }
    let g = gcd(&p, &q);
    ensure!(p.div_exact(&g).is_some() && q.div_exact(&g).is_some(), "gcd {g} does not divide");
    let lhs = gcd(&(&p * &h), &(&q * &h));
    let rhs = (&h * &g).primitive();
    ensure!(lhs == rhs, "gcd(ph, qh) = {lhs}, h gcd(p, q) = {rhs} for p={p} q={q} h={h}");
    Ok(())
}

pub fn compose_chain<R: Rng>(r: &mut R) -> Check {
    let p = random_poly(r, 2, 3, 4);
    let f: Vec<Poly> = (0..2).map(|_| random_poly(r, 2, 2, 3)).collect();
    let g: Vec<Poly> = (0..2).map(|_| random_poly(r, 2, 2, 3)).collect();
    let lhs = ok(ok(p.compose(&f))?.compose(&g))?;
    let fg = compose_all(&f, &g);
    ensure!(lhs == ok(p.compose(&fg))?, "compose chain differs for p={p}");
    Ok(())
}

pub fn homogenize_round_trip<R: Rng>(r: &mut R) -> Check {
    let p = random_poly(r, 3, 3, 5);
    let d = r.gen_range(3..=5);
    let h = ok(p.homogenize(d))?;
    ensure!(p.is_zero() || (h.is_homogeneous() && h.degree().finite() == Some(d)), "not homogeneous of degree {d}");
    ensure!(ok(h.dehomogenize())? == p, "dehomogenize(homogenize({p})) differs");
    Ok(())
}

pub fn resultant_detects_common_factor<R: Rng>(r: &mut R) -> Check {
    let mut p = random_poly(r, 1, 3, 3);
    let mut q = random_poly(r, 1, 3, 3);
    if r.gen_bool(0.5) {
        let h = random_poly(r, 1, 2, 2);
        p = &p * &h;
        q = &q * &h;
    }
    if !p.involves(0) || !q.involves(0) {
        return Ok(());
    }
    let res = ok(resultant(&p, &q, 0))?;
    ensure!(res.is_zero() == !gcd(&p, &q).is_constant(), "Res({p}, {q}) = {res}");
    Ok(())
}

pub fn normalize_idempotent<R: Rng>(r: &mut R) -> Check {
    let n = r.gen_range(1..=3);
    let d = r.gen_range(1..=2);
    let m = random_map(r, n, d, 3);
    let e = r.gen_range(0..=2);
    let h = random_form(r, n + 1, e, 2);
    let padded = ok(ProjMap::new(m.coords().iter().map(|c| c * &h).collect()))?;
    let once = ok(padded.normalize())?;
    ensure!(ok(once.normalize())? == once, "normalize not idempotent on {padded}");
    for _ in 0..4 {
        let pt = random_int_point(r, n + 1);
        let a = ok(once.evaluate(&pt))?;
        let b = ok(padded.evaluate(&pt))?;
        for i in 0..=n {
            for j in 0..i {
                ensure!(&a[i] * &b[j] == &a[j] * &b[i], "normalize changed {padded} at a point");
            }
        }
    }
    Ok(())
}

pub fn degree_submultiplicative<R: Rng>(r: &mut R) -> Check {
    let f = if r.gen_bool(0.5) { random_map(r, 2, 2, 2) } else { fibered_map(r).0 };
    let Ok(degs) = ratmap::iterate_degrees(&f, 3) else {
        return Ok(());
    };
    for a in 1..=degs.len() {
        for b in 1..=degs.len() - a {
            ensure!(degs[a + b - 1] <= degs[a - 1] * degs[b - 1], "{f}: degrees {degs:?}");
        }
    }
    Ok(())
}

pub fn line_image_kind_matches_rank<R: Rng>(r: &mut R) -> Check {
    let f = random_map(r, 2, 2, 3);
    if !ratmap::is_dominant(&f) {
        return Ok(());
    }
    let line = loop {
        if let Ok(l) = LineP2::new(small_rat(r), small_rat(r), small_rat(r)) {
            break l;
        }
    };
    match ok(ratmap::line_image(&f, &line))? {
        PlaneCurveImage::IrreducibleConic(q) => ensure!(ratmap::conic_rank(&q) == 3, "irreducible conic {q} of low rank"),
        PlaneCurveImage::ReducibleOrDegenerate(q) => ensure!(ratmap::conic_rank(&q) < 3, "degenerate conic {q} of rank 3"),
        _ => {}
    }
    Ok(())
}

pub fn iterate_degrees_conjugation<R: Rng>(r: &mut R) -> Check {
    let (f, iterates) = match r.gen_range(0..3) {
        0 => (random_quadratic_henon(r).homogenize_map(), 3),
        1 => (fibered_map(r).0, 3),
        _ => (random_map(r, 2, 2, 2), 2),
    };
    let a = random_invertible(r, 3);
    let g = ok(f.conjugate(&a))?;
    let (Ok(x), Ok(y)) = (ratmap::iterate_degrees(&f, iterates), ratmap::iterate_degrees(&g, iterates)) else {
        return Ok(());
    };
    ensure!(x == y, "{f}: {x:?} vs conjugate {y:?}");
    Ok(())
}

pub fn exponent_linear<R: Rng>(r: &mut R) -> Check {
    let n = r.gen_range(1..=4);
    let deg = r.gen_range(0..=4);
    let mono = random_monomial(r, n + 1, deg);
    let j = r.gen_range(0..=n);
    let w1 = random_weights(r, n + 1, 7);
    let w2 = random_weights(r, n + 1, 7);
    let (a, b) = (r.gen_range(-5i64..=5), r.gen_range(-5i64..=5));
    let combo: Vec<i64> = w1.weights().iter().zip(w2.weights()).map(|(x, y)| a * x + b * y).collect();
    let Ok(w) = WeightVector::new(combo) else {
        return Ok(());
    };
    let lhs = ok(exponent(j, &mono, &w))?;
    let rhs = a * ok(exponent(j, &mono, &w1))? + b * ok(exponent(j, &mono, &w2))?;
    ensure!(lhs == rhs, "exponent not linear: {lhs} vs {rhs}");
    Ok(())
}

pub fn mu_scaling<R: Rng>(r: &mut R) -> Check {
    let n = r.gen_range(1..=3);
    let d = r_deg(r);
    let m = random_map(r, n, d, 4);
    let w = random_weights(r, n + 1, 6);
    let c = r.gen_range(1..=6);
    ensure!(ok(mu(&m, &ok(w.scaled(c))?))? == c * ok(mu(&m, &w))?, "mu({m}, {c}w) != {c} mu");
    Ok(())
}

fn r_deg<R: Rng>(r: &mut R) -> u32 {
    r.gen_range(1..=3)
}

pub fn mu_permutation<R: Rng>(r: &mut R) -> Check {
    let n = r.gen_range(1..=4);
    let d = r_deg(r);
    let m = random_map(r, n, d, 3);
    let w = random_weights(r, n + 1, 6);
    let sigma = random_permutation(r, n + 1);
    let lhs = ok(mu(&permute_map(&m, &sigma), &permute_weights(&w, &sigma)))?;
    ensure!(lhs == ok(mu(&m, &w))?, "{m}: permutation {sigma:?} changed mu");
    Ok(())
}

pub fn mu_support_only<R: Rng>(r: &mut R) -> Check {
    let n = r.gen_range(1..=3);
    let d = r_deg(r);
    let m = random_map(r, n, d, 4);
    let w = random_weights(r, n + 1, 6);
    let rescaled: Vec<Poly> = m
        .coords()
        .iter()
        .map(|p| {
            let terms: Vec<_> = p.terms().map(|(mono, c)| (mono.clone(), c.clone())).collect();
            Poly::from_terms(m.nvars(), terms.into_iter().map(|(mono, c)| (mono, c * small_rat(r))))
        })
        .collect();
    let m2 = ok(ProjMap::new(rescaled))?;
    ensure!(ok(mu(&m2, &w))? == ok(mu(&m, &w))?, "{m}: mu depends on coefficients");
    Ok(())
}

pub fn mu_brute_force<R: Rng>(r: &mut R) -> Check {
    let n = r.gen_range(1..=3);
    let d = r_deg(r);
    let m = random_map(r, n, d, 4);
    let w = random_weights(r, n + 1, 8);
    let (fast, slow) = (ok(mu(&m, &w))?, brute_force_mu(&m, &w));
    ensure!(fast == slow, "{m} {w}: {fast} vs {slow}");
    Ok(())
}

fn random_shape<R: Rng>(r: &mut R) -> (usize, usize, u32) {
    let n = r.gen_range(2..=5);
    let k = r.gen_range(2..=n);
    (n, k, r.gen_range(2..=4))
}

pub fn table_rows_match_exponents<R: Rng>(r: &mut R) -> Check {
    let (n, k, d) = random_shape(r);
    let spec = ok(HenonSpec::random(r, n, k, d))?;
    let s = r.gen_range(0..=4i64);
    let rr = s * (n - k + 1) as i64 + r.gen_range(1..=6);
    let t = rr * (k as i64 - 1) - s * (n - k + 1) as i64;
    let w = ok(henon_block_weights(n, k, rr, s, t))?;
    let table = symbolic_table(&spec);
    ensure!(table.rows.len() == spec.homogenize_map().support().len(), "{spec}: table misses terms");
    for row in &table.rows {
        let e = ok(exponent(row.coordinate - 1, &row.monomial, &w))?;
        ensure!(row.form.eval(rr, s, t) == e, "{spec}: row {} {} gives {} not {e}", row.label, row.form, row.form.eval(rr, s, t));
    }
    Ok(())
}

pub fn certificate_rows_positive<R: Rng>(r: &mut R) -> Check {
    let (n, k, d) = loop {
        let shape = random_shape(r);
        if shape.1 >= 3 || shape.2 >= 3 {
            break shape;
        }
    };
    let spec = ok(HenonSpec::random(r, n, k, d))?;
    let cert = ok(block_certificate(n, k, d))?;
    let (nn, kk, dd) = (n as i64, k as i64, i64::from(d));
    ensure!(dd * cert.t - cert.s == (kk - 1) * (dd * (nn + 1) - 1), "dt - s identity at {n},{k},{d}");
    ensure!(
        -cert.r - cert.s + (dd - 1) * cert.t == ((dd - 1) * (kk - 1) - 2) * (nn + 1) + 1,
        "-r-s+(d-1)t identity at {n},{k},{d}"
    );
    for row in &symbolic_table(&spec).rows {
        ensure!(row.form.eval(cert.r, cert.s, cert.t) > 0, "{spec}: row {} not positive", row.label);
    }
    Ok(())
}

/// Row for a homogenized Hénon term, classified from the monomial shape
/// alone. `j` is 1-based; `None` if the term fits no row.
pub fn expected_row(n: usize, k: usize, d: u32, j: usize, e: &[u32]) -> Option<(RowLabel, LinearForm)> {
    let dm1 = i64::from(d) - 1;
    let last = e[n];
    let is = |idx: usize| e[idx] == 1 && last == d - 1 && e.iter().sum::<u32>() == d;
    let row_iv = || {
        let free = e[..k - 1].iter().all(|&x| x == 0) && e[j.min(n)..n].iter().all(|&x| x == 0);
        let m = i64::from(d - last);
        free.then(|| (RowLabel::IV, LinearForm::new(0, m - 1, i64::from(d) - m)))
    };
    if j + 1 < k {
        is(j).then(|| (RowLabel::I, LinearForm::new(0, 0, dm1)))
    } else if j + 1 == k {
        is(j).then(|| (RowLabel::II, LinearForm::new(1, 1, dm1)))
    } else if j < n {
        if is(j) {
            Some((RowLabel::III, LinearForm::new(0, 0, dm1)))
        } else {
            row_iv()
        }
    } else if j == n {
        if is(0) {
            Some((RowLabel::V, LinearForm::new(-1, -1, dm1)))
        } else {
            row_iv()
        }
    } else {
        (e[n] == d).then(|| (RowLabel::VI, LinearForm::new(0, 0, dm1)))
    }
}

pub fn henon_inverse<R: Rng>(r: &mut R) -> Check {
    let n = r.gen_range(2..=4);
    let k = r.gen_range(2..=n);
    let d = r.gen_range(2..=3);
    let spec = ok(HenonSpec::random(r, n, k, d))?;
    let f = spec.build_affine();
    let g = spec.inverse_affine();
    ensure!(compose_all(&g, &f) == identity_polys(n), "{spec}: g o f != id");
    ensure!(compose_all(&f, &g) == identity_polys(n), "{spec}: f o g != id");
    Ok(())
}

pub fn henon_support_patterns<R: Rng>(r: &mut R) -> Check {
    let (n, k, d) = random_shape(r);
    let spec = ok(HenonSpec::random(r, n, k, d))?;
    let m = spec.homogenize_map();
    for (j, c) in m.coords().iter().enumerate() {
        if j + 1 < k {
            ensure!(c.num_terms() == 1, "{spec}: coordinate {} has {} terms", j + 1, c.num_terms());
        }
        for mono in c.support() {
            ensure!(expected_row(n, k, d, j + 1, mono.exponents()).is_some(), "{spec}: stray term {:?}", mono.exponents());
        }
    }
    Ok(())
}

pub fn henon_homogenization<R: Rng>(r: &mut R) -> Check {
    let (n, k, d) = random_shape(r);
    let spec = ok(HenonSpec::random(r, n, k, d))?;
    let m = spec.homogenize_map();
    ensure!(m.degree() == d, "{spec}: degree {}", m.degree());
    ensure!(m.is_normalized(), "{spec}: not normalized");
    ensure!(ratmap::is_dominant(&m), "{spec}: not dominant");
    Ok(())
}

fn conjugated_fibered<R: Rng>(r: &mut R) -> Result<(ProjMap, Vec<Vec<Rat>>), String> {
    let (f, _) = fibered_map(r);
    let a = random_invertible(r, 3);
    Ok((ok(ok(f.conjugate(&a))?.normalize())?, a))
}

fn moved_center(a: &[Vec<Rat>]) -> Result<ProjPoint, String> {
    ok(ProjPoint::new(linalg::mat_vec(&a.to_vec(), &[Rat::zero(), Rat::one(), Rat::zero()])))
}

/// `π ∘ F = c · G ∘ π` for a single nonzero scalar `c`, by expansion.
fn commutes(f: &ProjMap, w: &classify2::FiberingWitness) -> Result<bool, String> {
    let ls = w.linear_forms();
    let lhs: Vec<Poly> = ls.iter().map(|l| l.compose(f.coords())).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let rhs: Vec<Poly> = w.g.iter().map(|g| g.compose(&ls)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let Some((mono, c)) = lhs.iter().flat_map(|p| p.leading_term()).next() else {
        return Ok(false);
    };
    let idx = lhs.iter().position(|p| !p.is_zero()).unwrap();
    let other = rhs[idx].coeff(mono);
    if other.is_zero() {
        return Ok(false);
    }
    let scale = c / other;
    Ok(lhs.iter().zip(&rhs).all(|(a, b)| *a == b.scale(&scale)))
}

pub fn fibering_witness_commutes<R: Rng>(r: &mut R) -> Check {
    let (f, a) = conjugated_fibered(r)?;
    let p = moved_center(&a)?;
    let w = ok(classify2::check_fibering(&f, &p))?.ok_or_else(|| format!("{f}: no witness at {p}"))?;
    ensure!(w.verify(&f), "{f}: witness does not verify");
    ensure!(commutes(&f, &w)?, "{f}: expansion does not commute");
    Ok(())
}

pub fn centers_equivariant<R: Rng>(r: &mut R) -> Check {
    let (f, _) = fibered_map(r);
    let a = random_invertible(r, 3);
    let g = ok(ok(f.conjugate(&a))?.normalize())?;
    let before = ok(classify2::fibering_centers(&f))?;
    let after = ok(classify2::fibering_centers(&g))?;
    let mut moved: Vec<ProjPoint> = before
        .centers
        .iter()
        .map(|p| ok(ProjPoint::new(linalg::mat_vec(&a, p.coords()))))
        .collect::<Result<_, _>>()?;
    moved.sort();
    ensure!(moved == after.centers, "{f}: centers {:?} moved to {:?}, found {:?}", before.centers, moved, after.centers);
    ensure!(before.exist_over_closure == after.exist_over_closure, "{f}: closure flag changed");
    Ok(())
}

pub fn quadratic_henon_semistable<R: Rng>(r: &mut R) -> Check {
    let spec = random_quadratic_henon(r);
    let v = ok(classify2::rat22_verdict(&spec.homogenize_map()))?;
    ensure!(v.semistable_conclusion == Conclusion::Semistable, "{spec}: {:?}", v.semistable_conclusion);
    Ok(())
}

pub fn degree_drop_unstable_sequence<R: Rng>(r: &mut R) -> Check {
    let v = |i| Poly::var(3, i);
    let base = match r.gen_range(0..3) {
        0 => ok(ProjMap::new(vec![v(1).pow(2), &v(2) * &v(0), v(2).pow(2)]))?,
        1 => fibered_map(r).0,
        _ => random_map(r, 2, 2, 2),
    };
    if !ratmap::is_dominant(&base) {
        return Ok(());
    }
    let a = random_invertible(r, 3);
    let f = ok(ok(base.conjugate(&a))?.normalize())?;
    let verdict = ok(classify2::rat22_verdict(&f))?;
    if matches!(verdict.branch, Branch::DegreeDrop | Branch::Both) {
        ensure!(!ok(ratmap::is_algebraically_stable_upto(&f, 2))?, "{f}: degree drop yet stable");
    }
    Ok(())
}

pub fn check_fibering_matches_centers<R: Rng>(r: &mut R) -> Check {
    let f = if r.gen_bool(0.6) { conjugated_fibered(r)?.0 } else { random_map(r, 2, 2, 3) };
    if !ratmap::is_dominant(&f) {
        return Ok(());
    }
    let search = ok(classify2::fibering_centers(&f))?;
    let mut probes = search.centers.clone();
    for _ in 0..3 {
        if let Ok(p) = ProjPoint::new(random_int_point(r, 3)) {
            probes.push(p);
        }
    }
    for p in probes {
        let found = ok(classify2::check_fibering(&f, &p))?.is_some();
        ensure!(found == search.centers.contains(&p), "{f}: check_fibering at {p} = {found}");
    }
    Ok(())
}

pub fn map_print_parse<R: Rng>(r: &mut R) -> Check {
    let n = r.gen_range(1..=3);
    let d = r_deg(r);
    let m = random_map(r, n, d, 3);
    let text = m.to_text(&default_var_names(n + 1));
    ensure!(ok(cli::parse_map(&text))? == m, "round trip failed for {text}");
    let p = random_poly(r, 3, 3, 4);
    let names = default_var_names(3);
    ensure!(ok(parse_poly(&p.to_string_with(&names), &names))? == p, "round trip failed for {p}");
    Ok(())
}

pub fn seeded_reports_identical<R: Rng>(r: &mut R) -> Check {
    let seed = r.gen();
    let req = AnalysisRequest {
        command: Command::AuditHenon22 { spec: None, samples: 2 },
        seed,
    };
    let a = ok(cli::run(&req))?.to_json();
    let b = ok(cli::run(&req))?.to_json();
    ensure!(a == b, "seed {seed}: reports differ");
    Ok(())
}

pub type Invariant = fn(&mut rand_chacha::ChaCha8Rng) -> Check;

pub const ALL: &[(&str, Invariant)] = &[
    ("ring axioms", ring_axioms),
    ("gcd multiplicativity", gcd_multiplicative),
    ("composition chains", compose_chain),
    ("dehomogenize o homogenize", homogenize_round_trip),
    ("resultant vs gcd", resultant_detects_common_factor),
    ("normalize idempotence", normalize_idempotent),
    ("degree submultiplicativity", degree_submultiplicative),
    ("line image kind vs conic rank", line_image_kind_matches_rank),
    ("iterate degrees under conjugation", iterate_degrees_conjugation),
    ("exponent linearity", exponent_linear),
    ("mu scaling", mu_scaling),
    ("mu permutation equivariance", mu_permutation),
    ("mu support only", mu_support_only),
    ("mu brute force", mu_brute_force),
    ("table rows at block weights", table_rows_match_exponents),
    ("certificate rows positive", certificate_rows_positive),
    ("inverse composition", henon_inverse),
    ("homogenized support patterns", henon_support_patterns),
    ("homogenization degree and dominance", henon_homogenization),
    ("fibering witness commutes", fibering_witness_commutes),
    ("centers under conjugation", centers_equivariant),
    ("quadratic Henon semistable", quadratic_henon_semistable),
    ("degree drop breaks stability", degree_drop_unstable_sequence),
    ("check_fibering vs centers", check_fibering_matches_centers),
    ("print/parse round trip", map_print_parse),
    ("seeded reports", seeded_reports_identical),
];
