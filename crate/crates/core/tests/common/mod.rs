//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod invariants;

use gitstab::git::WeightVector;
use gitstab::henon::HenonSpec;
use gitstab::linalg::{self, Matrix};
use gitstab::poly::{int, rat, Monomial, Poly, Rat};
use gitstab::ProjMap;
use num_traits::Zero;
use rand::Rng;

pub fn small_rat<R: Rng>(rng: &mut R) -> Rat {
    let mut n = rng.gen_range(-9i64..=8);
    if n >= 0 {
        n += 1;
    }
    rat(n, rng.gen_range(1i64..=4))
}

/// Sparse polynomial with up to `terms` terms of total degree `<= max_deg`.
pub fn random_poly<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32, terms: usize) -> Poly {
    let pairs: Vec<(Monomial, Rat)> = (0..terms)
        .map(|_| {
            let total = rng.gen_range(0..=max_deg);
            (random_monomial(rng, nvars, total), small_rat(rng))
        })
        .collect();
    Poly::from_terms(nvars, pairs)
}

pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, degree: u32) -> Monomial {
    let mut e = vec![0u32; nvars];
    for _ in 0..degree {
        e[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(e)
}

/// Homogeneous polynomial of exact degree `d` with up to `terms` terms.
pub fn random_form<R: Rng>(rng: &mut R, nvars: usize, d: u32, terms: usize) -> Poly {
    loop {
        let pairs: Vec<(Monomial, Rat)> = (0..terms)
            .map(|_| (random_monomial(rng, nvars, d), small_rat(rng)))
            .collect();
        let p = Poly::from_terms(nvars, pairs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A normalized map of `P^n` of degree `d` with sparse random coordinates.
pub fn random_map<R: Rng>(rng: &mut R, n: usize, d: u32, terms: usize) -> ProjMap {
    loop {
        let coords: Vec<Poly> = (0..=n)
            .map(|_| {
                if rng.gen_bool(0.1) {
                    Poly::zero(n + 1)
                } else {
                    random_form(rng, n + 1, d, terms)
                }
            })
            .collect();
        if let Ok(m) = ProjMap::new(coords) {
            if let Ok(m) = m.normalize() {
                if m.degree() == d {
                    return m;
                }
            }
        }
    }
}

/// Random integer weights in `[-bound, bound]` summing to zero, not all zero.
pub fn random_weights<R: Rng>(rng: &mut R, len: usize, bound: i64) -> WeightVector {
    loop {
        let mut w: Vec<i64> = (0..len - 1).map(|_| rng.gen_range(-bound..=bound)).collect();
        w.push(-w.iter().sum::<i64>());
        if let Ok(v) = WeightVector::new(w) {
            return v;
        }
    }
}

pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m: Matrix = (0..n)
            .map(|_| (0..n).map(|_| int(rng.gen_range(-3i64..=3))).collect())
            .collect();
        if !linalg::determinant(&m).is_zero() {
            return m;
        }
    }
}

pub fn random_quadratic_henon<R: Rng>(rng: &mut R) -> HenonSpec {
    HenonSpec::random(rng, 2, 2, 2).expect("valid shape")
}

/// `[x z : y z + P̄(x, z) : z^2]` for a random quadratic `P`.
pub fn fibered_map<R: Rng>(rng: &mut R) -> (ProjMap, Poly) {
    let v = |i| Poly::var(3, i);
    let (x, y, z) = (v(0), v(1), v(2));
    let p_bar = &(&x.pow(2).scale(&small_rat(rng)) + &(&x * &z).scale(&rat(rng.gen_range(-5..=5), 1)))
        + &z.pow(2).scale(&rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
    let f = ProjMap::new(vec![&x * &z, &(&y * &z) + &p_bar, z.pow(2)]).unwrap();
    (f, p_bar)
}

/// `mu` by explicit conjugation with the parameter adjoined as an extra
/// variable `α`. Each `x_m` is replaced by `α^(W - w_m) x_m` with
/// `W = max w`, coordinate `j` is multiplied by `α^(w_j - min w)`, and the
/// exponent of `α` on every resulting term is shifted back by
/// `d W - min w`.
pub fn brute_force_mu(m: &ProjMap, w: &WeightVector) -> i64 {
    let nv = m.nvars();
    let ws = w.weights();
    let top = *ws.iter().max().unwrap();
    let bottom = *ws.iter().min().unwrap();
    let alpha = |e: i64| Poly::var(nv + 1, nv).pow(u32::try_from(e).unwrap());
    let subs: Vec<Poly> = (0..nv)
        .map(|i| &alpha(top - ws[i]) * &Poly::var(nv + 1, i))
        .collect();
    let d = i64::from(m.degree());
    let mut best: Option<i64> = None;
    for (j, c) in m.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let conj = &c.compose(&subs).unwrap() * &alpha(ws[j] - bottom);
        for (mono, _) in conj.terms() {
            let e = i64::from(mono.exponents()[nv]) - d * top + bottom;
            best = Some(best.map_or(e, |b: i64| b.min(e)));
        }
    }
    best.unwrap()
}

/// Every composite `f_i ∘ g` as a list.
pub fn compose_all(f: &[Poly], g: &[Poly]) -> Vec<Poly> {
    f.iter().map(|p| p.compose(g).unwrap()).collect()
}

pub fn identity_polys(n: usize) -> Vec<Poly> {
    (0..n).map(|i| Poly::var(n, i)).collect()
}

/// Permutes variables and coordinates of a map by `sigma`, i.e. returns
/// `σ ∘ m ∘ σ^{-1}` where `σ` sends coordinate `i` to `sigma[i]`.
pub fn permute_map(m: &ProjMap, sigma: &[usize]) -> ProjMap {
    let nv = m.nvars();
    let mut coords = vec![Poly::zero(nv); nv];
    for (i, c) in m.coords().iter().enumerate() {
        coords[sigma[i]] = c.remap_vars(nv, sigma);
    }
    ProjMap::new(coords).unwrap()
}

pub fn permute_weights(w: &WeightVector, sigma: &[usize]) -> WeightVector {
    let mut out = vec![0; w.len()];
    for (i, &x) in w.weights().iter().enumerate() {
        out[sigma[i]] = x;
    }
    WeightVector::new(out).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
