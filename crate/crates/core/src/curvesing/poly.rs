use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::Signed;

use crate::curvesing::check_action;
use crate::error::{invalid, Result};
use crate::scalar::Ring;

/// A polynomial in `x, y` stored by its support: exponent pair `(i, j)` for
/// `x^i y^j` mapped to a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportPoly<C> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Ring> SupportPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), C)>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> C {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.terms.keys().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn vanishes_at_origin(&self) -> bool {
        !self.terms.contains_key(&(0, 0))
    }

    pub(crate) fn add_term(&mut self, exponent: (u32, u32), c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exponent) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exponent, sum);
                }
            }
            None => {
                self.terms.insert(exponent, c);
            }
        }
    }

    /// The `k` in `f(zeta x, zeta^q y) = zeta^k f(x, y)` for a primitive
    /// `p`-th root of unity `zeta`, or `None` when `f` is not
    /// `(p,q)`-invariant. Monomial `x^i y^j` scales by `zeta^(i + q j)`, so
    /// this is the common residue of `i + q j mod p` over the support.
    pub fn invariance_class(&self, p: u64, q: u64) -> Result<Option<u64>> {
        check_action(p, q)?;
        if self.is_zero() {
            return Err(invalid("the zero polynomial has no invariance class"));
        }
        let (p, q) = (u128::from(p), u128::from(q));
        let mut residues = self
            .support()
            .map(|(i, j)| (u128::from(i) + q * u128::from(j)) % p);
        let k = residues.next().expect("nonzero polynomial has a term");
        Ok(residues.all(|r| r == k).then_some(k as u64))
    }

    /// `f(x^p, y^p)`.
    pub fn substitute_powers(&self, p: u32) -> Result<Self> {
        if p == 0 {
            return Err(invalid("p must be positive"));
        }
        if !self.vanishes_at_origin() {
            return Err(invalid("the polynomial must vanish at the origin"));
        }
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            let e = i
                .checked_mul(p)
                .zip(j.checked_mul(p))
                .ok_or_else(|| invalid("exponent overflow"))?;
            out.add_term(e, c.clone());
        }
        Ok(out)
    }
}

impl<C: Ring> Add<&SupportPoly<C>> for &SupportPoly<C> {
    type Output = SupportPoly<C>;

    fn add(self, rhs: &SupportPoly<C>) -> SupportPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Ring> Mul<&SupportPoly<C>> for &SupportPoly<C> {
    type Output = SupportPoly<C>;

    /// Exact convolution of supports.
    fn mul(self, rhs: &SupportPoly<C>) -> SupportPoly<C> {
        let mut out = SupportPoly::zero();
        for ((ia, ja), ca) in &self.terms {
            for ((ib, jb), cb) in &rhs.terms {
                let e = (
                    ia.checked_add(*ib).expect("exponent overflow"),
                    ja.checked_add(*jb).expect("exponent overflow"),
                );
                out.add_term(e, ca.clone() * cb);
            }
        }
        out
    }
}

/// Renders in the input grammar, e.g. `x^8 + y^2` or `-3*x^2*y + 1/2*y`.
impl<C: Ring + Signed + fmt::Display> fmt::Display for SupportPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Descending total degree reads more naturally.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|((ia, ja), _), ((ib, jb), _)| (ib + jb, ib).cmp(&(ia + ja, ia)));
        for (n, ((i, j), c)) in terms.into_iter().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            let mag = c.abs();
            if !mag.is_one() || (*i == 0 && *j == 0) {
                factors.push(mag.to_string());
            }
            for (var, e) in [("x", *i), ("y", *j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
