//! Bivariate polynomials and the combinatorics of their singularity links:
//! `(p,q)`-invariance, the `f(x^p, y^p)` construction, torus-link criteria
//! and Puiseux pair rewriting.
//!
//! Irreducibility over `C` is never checked. Callers that need "irreducible
//! or a product of distinct irreducibles" must ensure it themselves.

mod parse;
mod poly;
mod puiseux;

pub use parse::parse_poly;
pub use poly::SupportPoly;
pub use puiseux::{puiseux_pairs, CableSequence, PuiseuxData};

use num_integer::gcd;

use crate::error::{invalid, Result};
use crate::scalar::Ring;

pub(crate) fn check_action(p: u64, q: u64) -> Result<()> {
    if p == 0 {
        return Err(invalid("p must be positive"));
    }
    if gcd(p, q) != 1 {
        return Err(invalid(format!("p = {p} and q = {q} are not coprime")));
    }
    Ok(())
}

/// `x^a + y^b`, whose singularity link is the torus link `T(a,b)`.
pub fn torus_poly<C: Ring>(a: u32, b: u32) -> Result<SupportPoly<C>> {
    if a == 0 || b == 0 {
        return Err(invalid("torus exponents must be positive"));
    }
    Ok(SupportPoly::from_terms([((a, 0), C::one()), ((0, b), C::one())]))
}

/// Whether `T(a,b)` lifts an algebraic link in `L(p,q)`, i.e.
/// `a = q b (mod p)`. Returns the invariance class `k = a mod p` when it does.
pub fn torus_lift_criterion(a: u64, b: u64, p: u64, q: u64) -> Result<Option<u64>> {
    if a == 0 || b == 0 {
        return Err(invalid("torus exponents must be positive"));
    }
    check_action(p, q)?;
    let (a, b, p, q) = (a as u128, b as u128, p as u128, q as u128);
    let k = a % p;
    Ok(((q * b) % p == k).then_some(k as u64))
}

/// Whether `T(a,b)` lifts an algebraic knot in a lens space of order `p`,
/// i.e. `gcd(a,b) = p`.
pub fn torus_knot_in_lens_criterion(a: u64, b: u64, p: u64) -> bool {
    gcd(a, b) == p
}
