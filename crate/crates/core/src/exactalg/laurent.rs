use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{exact_quotient, IntegerRing, Ring};

/// A Laurent polynomial `sum c_e t^e` with coefficients in `R`.
///
/// Only nonzero coefficients are stored, so the zero polynomial is the empty
/// map and structural equality is ring equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<i64, R>,
}

impl<R: Ring> LaurentPoly<R> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(R::one(), 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: R, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, R)>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Coefficients listed from exponent `lowest` upwards.
    pub fn from_coeffs(lowest: i64, coeffs: impl IntoIterator<Item = R>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (lowest + i as i64, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> R {
        self.terms.get(&exponent).cloned().unwrap_or_else(R::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `t -> t^-1`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x.clone() * c)))
    }

    fn add_term(&mut self, exponent: i64, c: R) {
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
}

impl<R: IntegerRing> LaurentPoly<R> {
    /// The quotient `q` with `q * den == self`.
    ///
    /// Fails with [`Error::Divisibility`] when `den` is zero or does not
    /// divide `self` in `R[t, t^-1]`.
    pub fn divide_exact(&self, den: &Self) -> Result<Self> {
        let (den_top, den_lead) = match den.terms.iter().next_back() {
            Some((e, c)) => (*e, c.clone()),
            None => return Err(Error::Divisibility("division by zero polynomial".into())),
        };
        let den_span = den_top - den.min_exponent().unwrap_or(den_top);

        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let (Some(lo), Some(hi)) = (rem.min_exponent(), rem.max_exponent()) {
            if hi - lo < den_span {
                return Err(Error::Divisibility(format!("{self:?} by {den:?}")));
            }
            let c = exact_quotient(&rem.terms[&hi], &den_lead)
                .ok_or_else(|| Error::Divisibility(format!("{self:?} by {den:?}")))?;
            let term = Self::monomial(c, hi - den_top);
            rem = rem - &(&term * den);
            quotient = quotient + term;
        }
        Ok(quotient)
    }
}

impl<R: Ring> Zero for LaurentPoly<R> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Ring> One for LaurentPoly<R> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<R: Ring> Add<&LaurentPoly<R>> for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;

    fn add(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<R: Ring> Sub<&LaurentPoly<R>> for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;

    fn sub(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<R: Ring> Mul<&LaurentPoly<R>> for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;

    fn mul(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb);
            }
        }
        out
    }
}

impl<R: Ring> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;

    fn neg(self) -> LaurentPoly<R> {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<R: Ring> $tr<LaurentPoly<R>> for LaurentPoly<R> {
            type Output = LaurentPoly<R>;

            fn $method(self, rhs: LaurentPoly<R>) -> LaurentPoly<R> {
                (&self).$method(&rhs)
            }
        }

        impl<R: Ring> $tr<&LaurentPoly<R>> for LaurentPoly<R> {
            type Output = LaurentPoly<R>;

            fn $method(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<R: Ring> Neg for LaurentPoly<R> {
    type Output = LaurentPoly<R>;

    fn neg(self) -> LaurentPoly<R> {
        -&self
    }
}

/// Canonical rendering: increasing exponents, e.g. `-1 + 3*t - t^2` or
/// `t^-1 + t`. The zero polynomial renders as `0`.
impl<R: Ring + Signed + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("t")?,
                1 => write!(f, "{mag}*t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}
