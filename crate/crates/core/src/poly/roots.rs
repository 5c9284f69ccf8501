//! Rational roots of univariate polynomials.
//!
//! Roots are isolated with Sturm sequences on the squarefree part. A rational
//! root of a primitive integer polynomial with leading coefficient `a_n` has
//! the form `m / a_n` for an integer `m`, so once an isolating interval is
//! narrower than `1 / a_n` a single exact evaluation decides it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{content_scalar, Poly, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    /// Rational roots with multiplicity, in ascending order.
    pub roots: Vec<Rat>,
    /// Degree of what is left after dividing out every rational root.
    pub cofactor_degree: u32,
}

/// All rational roots of a univariate polynomial (any single variable of the
/// ring may be the one that occurs). Constants have no roots.
pub fn rational_roots(p: &Poly) -> Result<RationalRoots> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars = p.variables();
    if vars.len() > 1 {
        return Err(Error::NotUnivariate);
    }
    let Some(&var) = vars.first() else {
        return Ok(RationalRoots {
            roots: Vec::new(),
            cofactor_degree: 0,
        });
    };
    let coeffs: Vec<Rat> = p
        .coeffs_in(var)
        .into_iter()
        .map(|c| c.constant_value().expect("univariate coefficient"))
        .collect();
    Ok(dense_rational_roots(coeffs))
}

pub(crate) fn dense_rational_roots(coeffs: Vec<Rat>) -> RationalRoots {
    let mut poly = trim(coeffs);
    let total = degree(&poly);
    let mut roots = Vec::new();
    // Zero roots first so the squarefree part has a nonzero constant term.
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        roots.push(Rat::zero());
    }
    let sf = squarefree(&poly);
    for r in squarefree_rational_roots(sf) {
        while eval(&poly, &r).is_zero() {
            poly = deflate(&poly, &r);
            roots.push(r.clone());
        }
    }
    roots.sort();
    let cofactor_degree = total - roots.len() as u32;
    RationalRoots {
        roots,
        cofactor_degree,
    }
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &[Rat]) -> u32 {
    p.len().saturating_sub(1) as u32
}

fn eval(p: &[Rat], x: &Rat) -> Rat {
    p.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[Rat]) -> Vec<Rat> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
        .collect()
}

/// Remainder of `a` by nonzero `b`.
fn rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let f = &r[k] / lb;
        for (i, c) in b.iter().enumerate() {
            let idx = k - db + i;
            r[idx] = &r[idx] - &f * c;
        }
        r = trim(r);
    }
    r
}

fn div(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() <= db {
        return Vec::new();
    }
    let mut q = vec![Rat::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1;
        let f = &r[k] / lb;
        for (i, c) in b.iter().enumerate() {
            let idx = k - db + i;
            r[idx] = &r[idx] - &f * c;
        }
        q[k - db] = f;
        r.pop();
    }
    q
}

fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn squarefree(p: &[Rat]) -> Vec<Rat> {
    let g = gcd(p, &derivative(p));
    if g.len() <= 1 {
        p.to_vec()
    } else {
        div(p, &g)
    }
}

/// Divides by `(x - r)`, assuming `r` is a root.
fn deflate(p: &[Rat], r: &Rat) -> Vec<Rat> {
    div(p, &[-r, Rat::one()])
}

fn sturm_sequence(p: &[Rat]) -> Vec<Vec<Rat>> {
    let mut seq = vec![p.to_vec(), derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let r: Vec<Rat> = rem(&seq[n - 2], &seq[n - 1]).into_iter().map(|c| -c).collect();
        if r.is_empty() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn sign_changes(seq: &[Vec<Rat>], x: &Rat) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in seq {
        let v = eval(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

enum Isolation {
    HitMidpoint(Rat),
    Done(Vec<Rat>),
}

fn squarefree_rational_roots(mut sf: Vec<Rat>) -> Vec<Rat> {
    let mut found = Vec::new();
    while sf.len() > 1 {
        match isolate(&sf) {
            Isolation::HitMidpoint(r) => {
                sf = deflate(&sf, &r);
                found.push(r);
            }
            Isolation::Done(rs) => {
                found.extend(rs);
                break;
            }
        }
    }
    found
}

fn isolate(sf: &[Rat]) -> Isolation {
    let n = sf.len() - 1;
    let lead = &sf[n];
    // Cauchy bound; strictly exceeds every root's absolute value.
    let bound = sf[..n]
        .iter()
        .map(|c| (c / lead).abs())
        .max()
        .unwrap_or_else(Rat::zero)
        + Rat::from_integer(BigInt::from(2));
    let scale = content_scalar(sf.iter());
    let lead_int: BigInt = (lead / &scale).to_integer().abs();
    let width = Rat::new(BigInt::one(), lead_int.clone());

    let seq = sturm_sequence(sf);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&seq, &lo) - sign_changes(&seq, &hi);
        if count == 0 {
            continue;
        }
        if &hi - &lo < width {
            // At most one m with lo < m / lead < hi.
            let m_lo: BigInt = (&lo * Rat::from_integer(lead_int.clone())).floor().to_integer() + 1;
            let m_hi: BigInt = (&hi * Rat::from_integer(lead_int.clone())).ceil().to_integer() - 1;
            let mut m = m_lo;
            while m <= m_hi {
                let cand = Rat::new(m.clone(), lead_int.clone());
                if eval(sf, &cand).is_zero() {
                    out.push(cand);
                }
                m += 1;
            }
            continue;
        }
        let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
        if eval(sf, &mid).is_zero() {
            return Isolation::HitMidpoint(mid);
        }
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    out.dedup();
    Isolation::Done(out)
}
