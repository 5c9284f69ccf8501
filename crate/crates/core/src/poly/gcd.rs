//! Multivariate gcd by content/primitive-part recursion on the highest
//! occurring variable, with a subresultant pseudo-remainder sequence for the
//! primitive parts.

use super::{Monomial, Poly};

/// Greatest common divisor, normalized to integer content 1 with a positive
/// graded-lex leading coefficient. `gcd(p, 0)` is `p` normalized and
/// `gcd(0, 0)` is zero.
pub fn gcd(p: &Poly, q: &Poly) -> Poly {
    assert_eq!(p.nvars(), q.nvars(), "variable count mismatch");
    raw_gcd(p, q).primitive()
}

/// Gcd of a list, folding smallest polynomials first.
pub fn gcd_many<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Option<Poly> {
    let mut items: Vec<&Poly> = polys.into_iter().collect();
    let first = items.first()?;
    let nvars = first.nvars();
    items.sort_by_key(|p| p.num_terms());
    let mut acc = Poly::zero(nvars);
    for p in items {
        if p.is_zero() {
            continue;
        }
        acc = raw_gcd(&acc, p);
        if acc.is_constant() {
            return Some(Poly::one(nvars));
        }
    }
    Some(acc.primitive())
}

fn raw_gcd(p: &Poly, q: &Poly) -> Poly {
    let n = p.nvars();
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return Poly::one(n);
    }
    if p.num_terms() == 1 {
        return monomial_gcd(p, q);
    }
    if q.num_terms() == 1 {
        return monomial_gcd(q, p);
    }
    let main = (0..n)
        .rev()
        .find(|&v| p.involves(v) || q.involves(v))
        .expect("nonconstant polynomial has a variable");
    match (p.involves(main), q.involves(main)) {
        (true, false) => raw_gcd(&content_in(p, main), q),
        (false, true) => raw_gcd(p, &content_in(q, main)),
        _ => {
            if coprime_by_specialization(p, q) {
                return Poly::one(n);
            }
            let cp = content_in(p, main);
            let cq = content_in(q, main);
            let c = raw_gcd(&cp, &cq);
            let pp = p.div_exact(&cp).expect("content divides");
            let qq = q.div_exact(&cq).expect("content divides");
            let g = subresultant_gcd(pp, qq, main);
            &c * &g
        }
    }
}

/// Sufficient test for `gcd(p, q) = 1`. A common factor `h` involves some
/// variable `v` shared by `p` and `q`; fixing the other variables at a point
/// where the leading coefficient of `p` in `v` survives keeps `deg_v h`, so a
/// constant univariate gcd there rules out every such `h`.
fn coprime_by_specialization(p: &Poly, q: &Poly) -> bool {
    let n = p.nvars();
    let shared: Vec<usize> = (0..n).filter(|&v| p.involves(v) && q.involves(v)).collect();
    if shared.len() < 2 {
        return false;
    }
    shared.iter().all(|&v| {
        (0..3i64).any(|attempt| {
            let (mut pa, mut qa) = (p.clone(), q.clone());
            for u in (0..n).filter(|&u| u != v) {
                let value = super::int((u as i64 + 2) * (attempt + 1) + attempt * attempt - 1);
                pa = pa.substitute(u, &value);
                qa = qa.substitute(u, &value);
            }
            pa.degree_in(v) == p.degree_in(v) && qa.involves(v) && raw_gcd(&pa, &qa).is_constant()
        })
    })
}

/// Gcd of a monomial with an arbitrary polynomial: the monomial's divisors
/// are monomials, so only the minimal exponents of `q` matter.
fn monomial_gcd(mono: &Poly, q: &Poly) -> Poly {
    let (m, _) = mono.leading_term().expect("nonzero");
    let mut exps = m.exponents().to_vec();
    for t in q.support() {
        for (e, &f) in exps.iter_mut().zip(t.exponents()) {
            *e = (*e).min(f);
        }
    }
    Poly::term(Monomial::new(exps), num_traits::One::one())
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub(crate) fn content_in(p: &Poly, var: usize) -> Poly {
    let mut acc = Poly::zero(p.nvars());
    let mut coeffs = p.coeffs_in(var);
    coeffs.sort_by_key(Poly::num_terms);
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        acc = raw_gcd(&acc, c);
        if acc.is_constant() {
            return Poly::one(p.nvars());
        }
    }
    acc.primitive()
}

fn primitive_in(p: &Poly, var: usize) -> Poly {
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` with respect to `var`:
/// `lc(b)^(deg a - deg b + 1) * a mod b`.
pub(crate) fn pseudo_rem(a: &Poly, b: &Poly, var: usize) -> Poly {
    let db = b.degree_in(var).expect("nonzero divisor");
    let lcb = b.leading_coeff_in(var);
    let da = match a.degree_in(var) {
        None => return a.clone(),
        Some(d) => d,
    };
    if da < db {
        return a.clone();
    }
    let n = a.nvars();
    let mut r = a.clone();
    let mut e = da - db + 1;
    while let Some(dr) = r.degree_in(var) {
        if dr < db {
            break;
        }
        let lcr = r.leading_coeff_in(var);
        let mut shift = vec![0; n];
        shift[var] = dr - db;
        r = &(&lcb * &r) - &(&lcr * &b.mul_monomial(&Monomial::new(shift)));
        e -= 1;
    }
    &r * &lcb.pow(e)
}

fn subresultant_gcd(a: Poly, b: Poly, var: usize) -> Poly {
    let n = a.nvars();
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    let mut g = Poly::one(n);
    let mut h = Poly::one(n);
    loop {
        let delta = a.degree_in(var).unwrap() - b.degree_in(var).unwrap();
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            return primitive_in(&b, var);
        }
        if r.degree_in(var) == Some(0) {
            return Poly::one(n);
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = r.div_exact(&divisor).expect("subresultant division is exact");
        g = a.leading_coeff_in(var);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h update is exact"),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p("x^2-y^2"), &p("x^2+2x*y+y^2")), p("x+y"));
        assert_eq!(gcd(&p("x^2"), &p("y^2")), p("1"));
        assert_eq!(gcd(&p("z^2*x^2"), &p("z^2*y^2")), p("z^2"));
    }

    #[test]
    fn gcd_with_zero_is_normalized_input() {
        assert_eq!(gcd(&p("-2x - 4y"), &Poly::zero(3)), p("x + 2y"));
        assert!(gcd(&Poly::zero(3), &Poly::zero(3)).is_zero());
    }

    #[test]
    fn specialization_never_hides_a_common_factor() {
        // Leading coefficient in x vanishes at the first trial point y = 2.
        let h = p("(y - 2)*x + z");
        let a = &h * &p("x + y + z");
        let b = &h * &p("x*y - z^2");
        assert!(!coprime_by_specialization(&a, &b));
        assert_eq!(gcd(&a, &b), h.primitive());
        assert!(coprime_by_specialization(&p("x^2 + y*z"), &p("x*y + z^2 + y^2")));
    }

    #[test]
    fn gcd_multivariate_nontrivial() {
        let h = p("x*z + y^2 - 3z^2");
        let a = &h * &p("x - y + 2z");
        let b = &h * &p("x*y + z^2");
        assert_eq!(gcd(&a, &b), h.primitive());
    }

    #[test]
    fn gcd_rational_coefficients() {
        let a = p("1/2*x^2 - 1/2*y^2");
        let b = p("3/7*x + 3/7*y");
        assert_eq!(gcd(&a, &b), p("x + y"));
    }

    #[test]
    fn pseudo_remainder_univariate() {
        // prem(x^2 + 1, 2x + 1) = 4(x^2+1) mod (2x+1) = 5
        let r = pseudo_rem(&p("x^2 + 1"), &p("2x + 1"), 0);
        assert_eq!(r, p("5"));
    }

    #[test]
    fn gcd_many_folds() {
        let g = gcd_many([&p("x^2*z"), &p("x*y*z"), &p("x*z^2 + x^2*z")]).unwrap();
        assert_eq!(g, p("x*z"));
    }
}
