//! Diagonal one-parameter subgroups and the numerical invariant `mu`.
//!
//! A diagonal 1-PS `L(a) = diag(a^w_1, ..., a^w_{N+1})` with `sum w = 0`
//! conjugates a map `f` to `L ∘ f ∘ L^{-1}`, multiplying the term
//! `c X^i` of coordinate `j` by `a^(w_j - <i, w>)`. `mu(f, L)` is the minimum of
//! that exponent over the support of `f`; `mu > 0` for some `L` means `f` is
//! unstable, `mu >= 0` means `f` is not stable.

mod fm;
pub mod table;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Rat};
use crate::ratmap::ProjMap;

pub use table::{
    block_weight_forms, generic_table, plane_quadratic_table, symbolic_exponent, symbolic_table,
    LinearForm, RowLabel, SymbolicExponentTable, TableRow,
};

/// Integer weights of a diagonal 1-PS: not all zero, summing to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidWeights("need at least two weights".into()));
        }
        if weights.iter().all(|&w| w == 0) {
            return Err(Error::InvalidWeights("all weights are zero".into()));
        }
        let sum: i64 = weights.iter().sum();
        if sum != 0 {
            return Err(Error::InvalidWeights(format!("weights sum to {sum}, not 0")));
        }
        Ok(WeightVector(weights))
    }

    /// Parses comma-separated integers such as `1,0,-1`.
    pub fn parse(text: &str) -> Result<Self> {
        let weights = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidWeights(format!("not an integer: '{}'", s.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights)
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Scales by a positive integer.
    pub fn scaled(&self, c: i64) -> Result<Self> {
        if c <= 0 {
            return Err(Error::InvalidWeights("scale factor must be positive".into()));
        }
        Self::new(self.0.iter().map(|w| w * c).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The linear functional `w -> w_j - <i, w>` attached to one term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentFunctional {
    covector: Vec<i64>,
}

impl ExponentFunctional {
    pub fn new(j: usize, i: &Monomial) -> Result<Self> {
        let n = i.nvars();
        if j >= n {
            return Err(Error::OutOfRange(format!("coordinate {j} with {n} variables")));
        }
        let mut covector: Vec<i64> = i.exponents().iter().map(|&e| -i64::from(e)).collect();
        covector[j] += 1;
        Ok(ExponentFunctional { covector })
    }

    pub fn covector(&self) -> &[i64] {
        &self.covector
    }

    pub fn eval(&self, w: &WeightVector) -> Result<i64> {
        if w.len() != self.covector.len() {
            return Err(Error::InvalidWeights(format!(
                "expected {} weights, got {}",
                self.covector.len(),
                w.len()
            )));
        }
        Ok(self.covector.iter().zip(w.weights()).map(|(c, x)| c * x).sum())
    }
}

/// Exponent of the conjugation parameter on the term `X^i` of coordinate `j`.
pub fn exponent(j: usize, i: &Monomial, w: &WeightVector) -> Result<i64> {
    ExponentFunctional::new(j, i)?.eval(w)
}

/// Minimum exponent over the support of `m`.
pub fn mu(m: &ProjMap, w: &WeightVector) -> Result<i64> {
    if w.len() != m.nvars() {
        return Err(Error::InvalidWeights(format!(
            "expected {} weights, got {}",
            m.nvars(),
            w.len()
        )));
    }
    m.support()
        .iter()
        .map(|(j, i)| exponent(*j, i, w))
        .try_fold(None, |acc: Option<i64>, e| {
            let e = e?;
            Ok(Some(acc.map_or(e, |a| a.min(e))))
        })?
        .ok_or(Error::AllZeroMap)
}

/// Weights `(r, .., r, -s, .., -s, -t)` with `k - 1` copies of `r` and
/// `N - k + 1` copies of `-s`.
pub fn henon_block_weights(n: usize, k: usize, r: i64, s: i64, t: i64) -> Result<WeightVector> {
    if !(2..=n).contains(&k) {
        return Err(Error::OutOfRange(format!("need 2 <= k <= N, got N={n}, k={k}")));
    }
    if r < 0 || s < 0 || t < 0 {
        return Err(Error::InvalidWeights("r, s, t must be non-negative".into()));
    }
    let balance = r * (k as i64 - 1) - s * (n as i64 - k as i64 + 1) - t;
    if balance != 0 {
        return Err(Error::InvalidWeights(format!(
            "r(k-1) - s(N-k+1) - t = {balance}, not 0"
        )));
    }
    let mut w = vec![r; k - 1];
    w.extend(std::iter::repeat_n(-s, n - k + 1));
    w.push(-t);
    WeightVector::new(w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// `mu > 0`: the map is unstable.
    StrictlyDestabilizing,
    /// `mu >= 0`: the map is not stable.
    NonStableWitness,
}

impl CertificateKind {
    fn for_mu(mu: i64) -> Self {
        if mu > 0 {
            CertificateKind::StrictlyDestabilizing
        } else {
            CertificateKind::NonStableWitness
        }
    }
}

/// The block parameters and weights used for generalized Hénon maps, together
/// with the sign of `mu` they are meant to certify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HenonCertificate {
    pub r: i64,
    pub s: i64,
    pub t: i64,
    pub weights: WeightVector,
    pub expected: CertificateKind,
}

/// `(r, s, t) = (2N + 2 - k, k - 1, (k - 1)(N + 1))` when `d >= 3` or `k >= 3`,
/// and `(1, 0, k - 1)` when `d = k = 2`.
pub fn block_certificate(n: usize, k: usize, d: u32) -> Result<HenonCertificate> {
    if !(2..=n).contains(&k) || d < 2 {
        return Err(Error::OutOfRange(format!(
            "need N >= k >= 2 and d >= 2, got N={n}, k={k}, d={d}"
        )));
    }
    let (n_, k_) = (n as i64, k as i64);
    let (r, s, t, expected) = if d >= 3 || k >= 3 {
        (
            2 * n_ + 2 - k_,
            k_ - 1,
            (k_ - 1) * (n_ + 1),
            CertificateKind::StrictlyDestabilizing,
        )
    } else {
        (1, 0, k_ - 1, CertificateKind::NonStableWitness)
    };
    Ok(HenonCertificate {
        r,
        s,
        t,
        weights: henon_block_weights(n, k, r, s, t)?,
        expected,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuCertificate {
    pub weights: WeightVector,
    pub mu: i64,
    pub kind: CertificateKind,
    pub support_size: usize,
}

impl MuCertificate {
    fn build(m: &ProjMap, w: WeightVector) -> Result<Self> {
        let mu = mu(m, &w)?;
        Ok(MuCertificate {
            weights: w,
            mu,
            kind: CertificateKind::for_mu(mu),
            support_size: m.support().len(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Positive,
    NonNegative,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::Positive => f.write_str("mu > 0"),
            Expectation::NonNegative => f.write_str("mu >= 0"),
        }
    }
}

/// Recomputes `mu` and checks its sign.
pub fn verify_certificate(m: &ProjMap, w: &WeightVector, expect: Expectation) -> Result<MuCertificate> {
    let cert = MuCertificate::build(m, w.clone())?;
    let ok = match expect {
        Expectation::Positive => cert.mu > 0,
        Expectation::NonNegative => cert.mu >= 0,
    };
    if !ok {
        return Err(Error::VerificationFailed {
            mu: cert.mu,
            expected: expect.to_string(),
        });
    }
    Ok(cert)
}

/// Searches the diagonal 1-PS in the given coordinates for one with every
/// support exponent `> 0` (`strict`) or `>= 0` (otherwise).
///
/// The conditions form a rational polyhedral cone in weight space, decided by
/// exact Fourier–Motzkin elimination after eliminating the last weight with
/// `sum w = 0`. For the non-strict case the trivial solution is excluded by
/// fixing `w_u = ±1` for each coordinate `u` in turn. The returned weights are
/// the primitive integer multiple of the point found by back-substitution.
pub fn find_destabilizing_diag(m: &ProjMap, strict: bool) -> Option<MuCertificate> {
    let n = m.n();
    // w_N = -(w_0 + ... + w_{N-1})
    let base: Vec<fm::Constraint> = m
        .support()
        .iter()
        .map(|(j, i)| {
            let c = ExponentFunctional::new(*j, i).expect("valid support").covector;
            let coeffs = (0..n).map(|u| Rat::from_integer(BigInt::from(c[u] - c[n]))).collect();
            fm::Constraint::new(coeffs, Rat::zero(), strict)
        })
        .collect();

    let point = if strict {
        fm::feasible_point(n, base)?
    } else {
        let mut found = None;
        'search: for u in 0..=n {
            for sigma in [1i64, -1] {
                let mut sys = base.clone();
                let (coeffs, constant) = if u < n {
                    let mut c = vec![Rat::zero(); n];
                    c[u] = Rat::one();
                    (c, Rat::from_integer(BigInt::from(-sigma)))
                } else {
                    (vec![-Rat::one(); n], Rat::from_integer(BigInt::from(-sigma)))
                };
                let negated: Vec<Rat> = coeffs.iter().map(|c| -c).collect();
                sys.push(fm::Constraint::new(coeffs, constant.clone(), false));
                sys.push(fm::Constraint::new(negated, -constant, false));
                if let Some(p) = fm::feasible_point(n, sys) {
                    found = Some(p);
                    break 'search;
                }
            }
        }
        found?
    };

    let mut full = point;
    let last: Rat = -full.iter().sum::<Rat>();
    full.push(last);
    let weights = WeightVector::new(primitive_integer_vector(&full)).ok()?;
    MuCertificate::build(m, weights).ok()
}

fn primitive_integer_vector(v: &[Rat]) -> Vec<i64> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g.abs() };
    ints.iter()
        .map(|x| (x / &g).to_i64().expect("certificate weights fit in i64"))
        .collect()
}
