//! Reduced Burau representation and the one-variable Alexander polynomial
//! of a closed braid.
//!
//! Convention (fixed throughout): on `n` strands `sigma_i` acts on the
//! `(n-1)`-dimensional space by the block
//!
//! ```text
//!     [ 1   t   0 ]
//!     [ 0  -t   0 ]      rows/cols i-1, i, i+1 (1-based),
//!     [ 0   1   1 ]      truncated at the matrix boundary
//! ```
//!
//! and `sigma_i^-1` by the inverse block `[1 1 0; 0 -t^-1 0; 0 t^-1 1]`.
//! A word maps to the product of its letter matrices in word order. The
//! Alexander polynomial of the closure is
//! `det(B(w) - I) * (1 - t) / (1 - t^n)`, normalized up to `+-t^k`.

use std::fmt;

use num_traits::Signed;

use crate::braid::BraidWord;
use crate::error::{invalid, Result};
use crate::exactalg::{LaurentMatrix, LaurentPoly};
use crate::scalar::{IntegerRing, Ring};

/// Reduced Burau matrix of a single letter.
pub fn burau_generator<R: Ring>(strands: usize, letter: i32) -> Result<LaurentMatrix<R>> {
    // Validates the letter range as a side effect.
    BraidWord::new(strands, vec![letter])?;
    if strands < 2 {
        return Err(invalid("the reduced Burau representation needs n >= 2"));
    }
    let one = || LaurentPoly::<R>::one();
    let t = LaurentPoly::<R>::t;
    let t_inv = || LaurentPoly::<R>::monomial(R::one(), -1);
    let block: [[LaurentPoly<R>; 3]; 3] = if letter > 0 {
        [
            [one(), t(), LaurentPoly::zero()],
            [LaurentPoly::zero(), -t(), LaurentPoly::zero()],
            [LaurentPoly::zero(), one(), one()],
        ]
    } else {
        [
            [one(), one(), LaurentPoly::zero()],
            [LaurentPoly::zero(), -t_inv(), LaurentPoly::zero()],
            [LaurentPoly::zero(), t_inv(), one()],
        ]
    };
    let d = strands - 1;
    let i = letter.unsigned_abs() as isize; // block centre, 1-based == 0-based index + 1
    let mut m = LaurentMatrix::identity(d);
    for (bi, row) in block.iter().enumerate() {
        for (bj, entry) in row.iter().enumerate() {
            let r = i - 2 + bi as isize;
            let c = i - 2 + bj as isize;
            if (0..d as isize).contains(&r) && (0..d as isize).contains(&c) {
                m.set(r as usize, c as usize, entry.clone());
            }
        }
    }
    Ok(m)
}

/// Product of the letter matrices in word order; `(n-1) x (n-1)`.
pub fn burau_reduced<R: Ring>(word: &BraidWord) -> Result<LaurentMatrix<R>> {
    let n = word.strands();
    if n < 2 {
        return Err(invalid("the reduced Burau representation needs n >= 2"));
    }
    let gens: Vec<LaurentMatrix<R>> = (1..n as i32)
        .flat_map(|i| [i, -i])
        .map(|l| burau_generator(n, l))
        .collect::<Result<_>>()?;
    let index = |l: i32| 2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0);
    word.letters()
        .iter()
        .try_fold(LaurentMatrix::identity(n - 1), |acc, &l| acc.mul(&gens[index(l)]))
}

/// An Alexander polynomial scaled by a unit `+-t^k` so that its lowest term
/// has exponent 0 and a positive coefficient (or the zero polynomial).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderPoly<R> {
    poly: LaurentPoly<R>,
}

impl<R: IntegerRing> AlexanderPoly<R> {
    pub fn normalize(poly: &LaurentPoly<R>) -> Self {
        let Some(lo) = poly.min_exponent() else {
            return Self { poly: LaurentPoly::zero() };
        };
        let shifted = poly.shift(-lo);
        let poly = if shifted.coeff(0).is_negative() { -shifted } else { shifted };
        Self { poly }
    }

    pub fn poly(&self) -> &LaurentPoly<R> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `a == +-t^k b`. With both sides normalized this is plain equality.
    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl<R: Ring + Signed + fmt::Display> fmt::Display for AlexanderPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Alexander polynomial of the closure of `word`.
///
/// One-strand closures are the unknot and give `1`.
pub fn alexander_of_closure<R: IntegerRing>(word: &BraidWord) -> Result<AlexanderPoly<R>> {
    let n = word.strands();
    if n == 1 {
        return Ok(AlexanderPoly::normalize(&LaurentPoly::one()));
    }
    let burau = burau_reduced::<R>(word)?;
    let det = burau.sub(&LaurentMatrix::identity(n - 1))?.det();
    if det.is_zero() {
        return Ok(AlexanderPoly::normalize(&det));
    }
    let one_minus_t = LaurentPoly::from_coeffs(0, [R::one(), -R::one()]);
    let one_minus_tn = LaurentPoly::from_terms([(0, R::one()), (n as i64, -R::one())]);
    let poly = (det * one_minus_t).divide_exact(&one_minus_tn)?;
    Ok(AlexanderPoly::normalize(&poly))
}

/// `(sigma_{b-1} .. sigma_1)^a` on `b` strands; its closure is `T(a,b)`.
pub fn torus_braid(a: usize, b: usize) -> Result<BraidWord> {
    if a == 0 || b == 0 {
        return Err(invalid("torus braid parameters must be positive"));
    }
    let cycle: Vec<i32> = (1..b as i32).rev().collect();
    Ok(BraidWord::new(b, cycle)?.power(a))
}
