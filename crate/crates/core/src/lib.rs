//! Exact Hilbert–Mumford stability analysis for rational self-maps of
//! projective space, with generalized Hénon maps as the main family.
//!
//! All arithmetic is over the rationals with arbitrary precision. The crate is
//! organized bottom-up:
//!
//! - [`poly`]: sparse multivariate polynomials, gcd, resultants, rational roots
//! - [`ratmap`]: rational self-maps of `P^N`, iterates, dominance, morphisms,
//!   images of lines
//! - [`git`]: diagonal one-parameter subgroups, the invariant `mu`, explicit
//!   certificates, symbolic exponent tables, exact destabilizing-weight search
//! - [`henon`]: generalized Hénon maps and their homogenizations
//! - [`classify2`]: linear fibering and degree drop for quadratic maps of `P^2`
//! - [`cli`]: text formats, request dispatch and JSON reports

pub mod classify2;
pub mod cli;
pub mod error;
pub mod git;
pub mod henon;
pub mod linalg;
pub mod poly;
pub mod ratmap;

pub use error::{Error, Result};
pub use poly::{Poly, Rat};
pub use ratmap::ProjMap;
