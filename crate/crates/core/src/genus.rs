//! Euler characteristic and genus arithmetic for fiber surfaces and their
//! quotients under the cyclic action.

use num_integer::gcd;

use crate::braid::BraidWord;
use crate::error::{invalid, Error, Result};
use crate::invariants::torus_braid;

/// Euler characteristic, boundary count and genus of a compact connected
/// orientable surface, tied by `euler = 2 - 2 genus - boundary_components`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiberData {
    euler: i64,
    boundary_components: u64,
    genus: u64,
}

impl FiberData {
    pub fn new(euler: i64, boundary_components: u64, genus: u64) -> Result<Self> {
        if boundary_components == 0 {
            return Err(invalid("a fiber surface has at least one boundary component"));
        }
        if euler != 2 - 2 * genus as i64 - boundary_components as i64 {
            return Err(Error::Inconsistency(format!(
                "euler characteristic {euler} does not match genus {genus} with {boundary_components} boundary components"
            )));
        }
        Ok(Self { euler, boundary_components, genus })
    }

    /// Solves the identity for the genus.
    pub fn from_euler(euler: i64, boundary_components: u64) -> Result<Self> {
        let twice = 2 - euler - boundary_components as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::Inconsistency(format!(
                "no surface has euler characteristic {euler} and {boundary_components} boundary components"
            )));
        }
        Self::new(euler, boundary_components, (twice / 2) as u64)
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    pub fn boundary_components(&self) -> u64 {
        self.boundary_components
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }
}

/// Seifert's algorithm on a positive braid closure: one disk per strand and
/// one band per crossing, so `euler = strands - letters`.
pub fn bennequin_fiber(word: &BraidWord) -> Result<FiberData> {
    if !word.is_positive() {
        return Err(invalid("the Bennequin surface is a fiber only for positive braids"));
    }
    // A generator missing from the word splits the closure and the surface.
    if !connects_all_strands(word) {
        return Err(invalid("the braid closure is split; its Seifert surface is disconnected"));
    }
    let euler = word.strands() as i64 - word.len() as i64;
    let r = word.closure_components().len() as u64;
    FiberData::from_euler(euler, r)
}

fn connects_all_strands(word: &BraidWord) -> bool {
    let n = word.strands();
    let mut used = vec![false; n.saturating_sub(1)];
    for &l in word.letters() {
        used[l.unsigned_abs() as usize - 1] = true;
    }
    used.into_iter().all(|u| u)
}

/// `p / gcd(k, p)`, the number of fibers of the covering map composing one
/// fiber of the quotient fibration.
pub fn fiber_multiplicity(p: u64, k: u64) -> Result<u64> {
    if p == 0 {
        return Err(invalid("p must be positive"));
    }
    if k >= p {
        return Err(invalid(format!("invariance class k = {k} must satisfy 0 <= k < p = {p}")));
    }
    Ok(p / gcd(k, p))
}

/// Seifert genus of an algebraic knot in `L(p,q)` whose lift has genus
/// `lift_genus`: `(2 g~ + p + gcd(p,k) - 2) / (2 gcd(p,k))`.
///
/// Non-integral or negative values mean the inputs cannot come from an
/// algebraic knot and are reported as [`Error::Inconsistency`].
pub fn quotient_genus(p: u64, k: u64, lift_genus: u64) -> Result<u64> {
    fiber_multiplicity(p, k)?;
    let d = i128::from(gcd(p, k));
    let num = 2 * i128::from(lift_genus) + i128::from(p) + d - 2;
    let den = 2 * d;
    if num < 0 || num % den != 0 {
        return Err(Error::Inconsistency(format!(
            "genus formula gives {num}/{den} for p = {p}, k = {k}, lift genus {lift_genus}"
        )));
    }
    Ok((num / den) as u64)
}

/// Result of [`torus_quotient_genus`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusQuotient {
    /// `gcd(a, b)`, the order of the lens space.
    pub p: u64,
    /// Fiber surface of `T(a,b)` from the positive torus braid.
    pub lift: FiberData,
    pub quotient_genus: u64,
}

/// Genus of the algebraic knot in `L(p,q)`, `p = gcd(a,b)`, lifting to
/// `T(a,b)`: `(g~ + p - 1) / p` with `g~` read off the Bennequin surface.
pub fn torus_quotient_genus(a: u64, b: u64) -> Result<TorusQuotient> {
    if a == 0 || b == 0 {
        return Err(invalid("torus parameters must be positive"));
    }
    let p = gcd(a, b);
    let word = torus_braid(a as usize, b as usize)?;
    let lift = bennequin_fiber(&word)?;
    let num = lift.genus() + p - 1;
    if !num.is_multiple_of(p) {
        return Err(Error::Inconsistency(format!(
            "({} + {p} - 1) / {p} is not an integer",
            lift.genus()
        )));
    }
    Ok(TorusQuotient { p, lift, quotient_genus: num / p })
}
