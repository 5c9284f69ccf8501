//! Fourier–Motzkin elimination over the rationals with strict and non-strict
//! inequalities.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rat;

/// `coeffs · x + constant > 0` (strict) or `>= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Constraint {
    coeffs: Vec<Rat>,
    constant: Rat,
    strict: bool,
}

impl Constraint {
    pub(crate) fn new(coeffs: Vec<Rat>, constant: Rat, strict: bool) -> Self {
        Constraint {
            coeffs,
            constant,
            strict,
        }
    }

    /// Scales by a positive rational so that all entries are coprime integers.
    fn normalized(mut self) -> Self {
        let entries = self.coeffs.iter().chain(std::iter::once(&self.constant));
        let lcm = entries.clone().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let g = entries.fold(BigInt::zero(), |acc, x| acc.gcd(x.numer()));
        if g.is_zero() {
            return self;
        }
        let f = Rat::new(lcm, g.abs());
        for c in self.coeffs.iter_mut() {
            *c *= &f;
        }
        self.constant *= &f;
        self
    }

    fn holds_trivially(&self) -> bool {
        if self.strict {
            self.constant.is_positive()
        } else {
            !self.constant.is_negative()
        }
    }

    fn partial_value(&self, x: &[Rat], upto: usize) -> Rat {
        self.coeffs[..upto]
            .iter()
            .zip(x)
            .map(|(c, v)| c * v)
            .sum::<Rat>()
            + &self.constant
    }
}

fn dedup(system: Vec<Constraint>) -> Vec<Constraint> {
    let mut seen: BTreeMap<(Vec<Rat>, Rat), bool> = BTreeMap::new();
    for c in system {
        let c = c.normalized();
        let strict = seen.entry((c.coeffs, c.constant)).or_insert(false);
        *strict |= c.strict;
    }
    seen.into_iter()
        .map(|((coeffs, constant), strict)| Constraint::new(coeffs, constant, strict))
        .collect()
}

fn eliminate(system: &[Constraint], v: usize) -> Vec<Constraint> {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut out = Vec::new();
    for c in system {
        if c.coeffs[v].is_positive() {
            lower.push(c);
        } else if c.coeffs[v].is_negative() {
            upper.push(c);
        } else {
            out.push(c.clone());
        }
    }
    for l in &lower {
        for u in &upper {
            let a = &l.coeffs[v];
            let b = -&u.coeffs[v];
            let coeffs = l
                .coeffs
                .iter()
                .zip(&u.coeffs)
                .map(|(x, y)| &b * x + a * y)
                .collect();
            let constant = &b * &l.constant + a * &u.constant;
            out.push(Constraint::new(coeffs, constant, l.strict || u.strict));
        }
    }
    dedup(out)
}

/// A point satisfying every constraint, or `None` if the system is infeasible.
pub(crate) fn feasible_point(nvars: usize, system: Vec<Constraint>) -> Option<Vec<Rat>> {
    let mut stages = vec![Vec::new(); nvars];
    let mut sys = dedup(system);
    for v in (0..nvars).rev() {
        let next = eliminate(&sys, v);
        stages[v] = sys;
        sys = next;
    }
    if !sys.iter().all(Constraint::holds_trivially) {
        return None;
    }

    let mut x: Vec<Rat> = Vec::with_capacity(nvars);
    for (v, stage) in stages.iter().enumerate() {
        let mut lo: Option<(Rat, bool)> = None;
        let mut hi: Option<(Rat, bool)> = None;
        for c in stage {
            let a = &c.coeffs[v];
            if a.is_zero() {
                continue;
            }
            let bound = -c.partial_value(&x, v) / a;
            if a.is_positive() {
                let tighter = match &lo {
                    None => true,
                    Some((b, s)) => bound > *b || (bound == *b && c.strict && !s),
                };
                if tighter {
                    lo = Some((bound, c.strict));
                }
            } else {
                let tighter = match &hi {
                    None => true,
                    Some((b, s)) => bound < *b || (bound == *b && c.strict && !s),
                };
                if tighter {
                    hi = Some((bound, c.strict));
                }
            }
        }
        let value = match (lo, hi) {
            (Some((l, _)), Some((h, _))) => (l + h) / Rat::from_integer(BigInt::from(2)),
            (Some((l, strict)), None) => {
                if strict {
                    l + Rat::one()
                } else {
                    l
                }
            }
            (None, Some((h, strict))) => {
                if strict {
                    h - Rat::one()
                } else {
                    h
                }
            }
            (None, None) => Rat::zero(),
        };
        x.push(value);
    }
    debug_assert!(stages
        .first()
        .is_none_or(|s| s.iter().all(|c| satisfied(c, &x))));
    Some(x)
}

fn satisfied(c: &Constraint, x: &[Rat]) -> bool {
    let v = c.partial_value(x, x.len());
    if c.strict {
        v.is_positive()
    } else {
        !v.is_negative()
    }
}
