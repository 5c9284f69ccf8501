//! Generalized Hénon maps of `A^N` and their homogenizations.
//!
//! For `N >= k >= 2`, nonzero `b_1 .. b_N` and polynomials `P_{i+1}` in
//! `x_k .. x_i` (`k <= i <= N`), the map is
//!
//! ```text
//! (b_2 x_2, .., b_k x_k, b_{k+1} x_{k+1} + P_{k+1}, .., b_N x_N + P_N, b_1 x_1 + P_{N+1})
//! ```
//!
//! with `d = max deg P_{i+1} >= 2`. The classic planar map `(a y, b x + P(y))`
//! is the case `N = k = 2`, `b = (b, a)`.

use std::fmt;

use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Rat};
use crate::ratmap::ProjMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HenonSpec {
    n: usize,
    k: usize,
    d: u32,
    b: Vec<Rat>,
    p: Vec<Poly>,
}

impl HenonSpec {
    /// `b` holds `b_1 .. b_N`; `p` holds `P_{k+1} .. P_{N+1}` as polynomials in
    /// the `N` affine variables.
    pub fn new(n: usize, k: usize, d: u32, b: Vec<Rat>, p: Vec<Poly>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidHenon(m));
        if n < 2 {
            return bad(format!("need N >= 2, got {n}"));
        }
        if !(2..=n).contains(&k) {
            return bad(format!("need 2 <= k <= N, got k={k}, N={n}"));
        }
        if d < 2 {
            return bad(format!("need d >= 2, got {d}"));
        }
        if b.len() != n {
            return bad(format!("expected {n} coefficients b_i, got {}", b.len()));
        }
        if let Some(i) = b.iter().position(Zero::is_zero) {
            return bad(format!("b_{} is zero", i + 1));
        }
        if p.len() != n - k + 1 {
            return bad(format!("expected {} polynomials P_{}..P_{}, got {}", n - k + 1, k + 1, n + 1, p.len()));
        }
        let mut max_deg = 0;
        for (offset, poly) in p.iter().enumerate() {
            let i = k + offset;
            if poly.nvars() != n {
                return bad(format!("P_{} has {} variables, expected {n}", i + 1, poly.nvars()));
            }
            if let Some(v) = poly.variables().into_iter().find(|&v| v + 1 < k || v + 1 > i) {
                return bad(format!("P_{} involves x{}, allowed x{k}..x{i}", i + 1, v + 1));
            }
            let deg = poly.degree().finite().unwrap_or(0);
            if deg > d {
                return bad(format!("deg P_{} = {deg} exceeds d = {d}", i + 1));
            }
            max_deg = max_deg.max(deg);
        }
        if max_deg != d {
            return bad(format!("max deg P_i = {max_deg}, expected d = {d}"));
        }
        Ok(HenonSpec { n, k, d, b, p })
    }

    /// `(a y, b x + P(y))`; `p` is a polynomial in `(x, y)` involving only `y`.
    pub fn classic(a: Rat, b: Rat, p: Poly) -> Result<Self> {
        let d = p.degree().finite().unwrap_or(0);
        HenonSpec::new(2, 2, d, vec![b, a], vec![p])
    }

    /// The case `k = N`: `(b_2 x_2, .., b_N x_N, b_1 x_1 + P(x_N))`.
    pub fn chain(b: Vec<Rat>, p: Poly) -> Result<Self> {
        let n = b.len();
        let d = p.degree().finite().unwrap_or(0);
        HenonSpec::new(n, n, d, b, vec![p])
    }

    /// A random spec: coefficients are `c / q` with `c` in `{-9..9} \ {0}` and
    /// `q` in `{1..4}`; every admissible monomial of degree `<= d` appears with
    /// probability 1/2, and one top-degree monomial is always present.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize, d: u32) -> Result<Self> {
        if n < 2 || !(2..=n).contains(&k) || d < 2 {
            return Err(Error::InvalidHenon(format!("bad shape N={n}, k={k}, d={d}")));
        }
        let b = (0..n).map(|_| random_coefficient(rng)).collect();
        let mut p: Vec<Poly> = (k..=n)
            .map(|i| {
                let mut terms = Vec::new();
                for m in admissible_monomials(n, k, i, d) {
                    if rng.gen_bool(0.5) {
                        terms.push((m, random_coefficient(rng)));
                    }
                }
                Poly::from_terms(n, terms)
            })
            .collect();
        if p.iter().all(|q| q.degree().finite().unwrap_or(0) < d) {
            let offset = rng.gen_range(0..p.len());
            let tops: Vec<Monomial> = admissible_monomials(n, k, k + offset, d)
                .into_iter()
                .filter(|m| m.degree() == d)
                .collect();
            let m = tops[rng.gen_range(0..tops.len())].clone();
            let c = random_coefficient(rng);
            p[offset] = &p[offset] + &Poly::term(m, c);
        }
        HenonSpec::new(n, k, d, b, p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// `b_1 .. b_N`.
    pub fn b(&self) -> &[Rat] {
        &self.b
    }

    /// `P_{i+1}` for `k <= i <= N`.
    pub fn p(&self, i: usize) -> Option<&Poly> {
        i.checked_sub(self.k).and_then(|o| self.p.get(o))
    }

    pub fn polys(&self) -> &[Poly] {
        &self.p
    }

    /// Names `x1 .. xN` used by the spec text format.
    pub fn var_names(&self) -> Vec<String> {
        (1..=self.n).map(|i| format!("x{i}")).collect()
    }

    /// The `N` coordinate polynomials of the affine map.
    pub fn build_affine(&self) -> Vec<Poly> {
        let n = self.n;
        (1..=n)
            .map(|i| {
                let next = i % n; // 0-based index of x_{i+1}, wrapping to x_1
                let linear = Poly::var(n, next).scale(&self.b[next]);
                match self.p(i) {
                    Some(p) => &linear + p,
                    None => linear,
                }
            })
            .collect()
    }

    /// The degree-`d` extension to `P^N` with `x_{N+1}` as the new variable.
    pub fn homogenize_map(&self) -> ProjMap {
        let n = self.n;
        let mut coords: Vec<Poly> = self
            .build_affine()
            .iter()
            .map(|c| c.homogenize(self.d).expect("degree at most d"))
            .collect();
        coords.push(Poly::var(n + 1, n).pow(self.d));
        ProjMap::new(coords).expect("valid homogenization")
    }

    /// The inverse automorphism, by back-substitution.
    pub fn inverse_affine(&self) -> Vec<Poly> {
        let n = self.n;
        let y = |i: usize| Poly::var(n, i - 1);
        // x[v] is x_{v+1} as a polynomial in y
        let mut x = vec![Poly::zero(n); n];
        for i in 1..self.k {
            x[i] = y(i).scale(&self.b[i].recip());
        }
        for i in self.k..=n {
            let p = self.p(i).expect("k <= i <= N");
            let shifted = &y(i) - &p.compose(&x).expect("same variable count");
            let target = i % n;
            x[target] = shifted.scale(&self.b[target].recip());
        }
        x
    }
}

/// Spec text: `henon N=3 k=2 d=2 b=(1,2,3) P3=(x2^2) P4=(x2*x3 + 1/2*x3^2)`.
impl fmt::Display for HenonSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.var_names();
        let b: Vec<String> = self.b.iter().map(ToString::to_string).collect();
        write!(f, "henon N={} k={} d={} b=({})", self.n, self.k, self.d, b.join(","))?;
        for (offset, p) in self.p.iter().enumerate() {
            write!(f, " P{}=({})", self.k + offset + 1, p.to_string_with(&names))?;
        }
        Ok(())
    }
}

/// `[t x^d + y z^(d-1) : x z^(d-1) + y^d : z^d]`.
pub fn family_fdt(d: u32, t: &Rat) -> Result<ProjMap> {
    if d < 2 {
        return Err(Error::OutOfRange(format!("need d >= 2, got {d}")));
    }
    let v = |i| Poly::var(3, i);
    let (x, y, z) = (v(0), v(1), v(2));
    let zd1 = z.pow(d - 1);
    ProjMap::new(vec![
        &x.pow(d).scale(t) + &(&y * &zd1),
        &(&x * &zd1) + &y.pow(d),
        z.pow(d),
    ])
}

fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    let mut num = rng.gen_range(-9i64..=8);
    if num >= 0 {
        num += 1;
    }
    let den = rng.gen_range(1i64..=4);
    crate::poly::rat(num, den)
}

/// Monomials of degree `<= d` in `x_k .. x_i` (1-based), ascending.
fn admissible_monomials(n: usize, k: usize, i: usize, d: u32) -> Vec<Monomial> {
    let vars: Vec<usize> = (k - 1..i).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; vars.len()];
    fn rec(pos: usize, left: u32, vars: &[usize], exps: &mut Vec<u32>, n: usize, out: &mut Vec<Monomial>) {
        if pos == vars.len() {
            let mut e = vec![0; n];
            for (v, x) in vars.iter().zip(exps.iter()) {
                e[*v] = *x;
            }
            out.push(Monomial::new(e));
            return;
        }
        for x in 0..=left {
            exps[pos] = x;
            rec(pos + 1, left - x, vars, exps, n, out);
        }
        exps[pos] = 0;
    }
    rec(0, d, &vars, &mut exps, n, &mut out);
    out.sort();
    out
}
