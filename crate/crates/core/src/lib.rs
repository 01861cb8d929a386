//! Exact computations for algebraic links in lens spaces.
//!
//! A `(p,q)`-invariant polynomial `f(x,y)` cuts out a link in the 3-sphere
//! that is preserved by `(x,y) -> (zeta x, zeta^q y)` and so descends to a
//! link in `L(p,q)`. This crate works with the combinatorial side of that
//! picture:
//!
//! - [`braid`]: braid words, Garside elements, permutations and closures;
//! - [`exactalg`]: Laurent polynomials and matrices over them;
//! - [`invariants`]: reduced Burau matrices and Alexander polynomials;
//! - [`lenslink`]: band diagrams in `L(p,q)`, their lifts and homology;
//! - [`curvesing`]: invariant polynomials, torus criteria, Puiseux pairs;
//! - [`genus`]: fiber surfaces and quotient genus formulas.
//!
//! Polynomial and matrix types are generic over the coefficient ring. The
//! aliases below fix the exact coefficient types used by the CLI.

pub mod braid;
pub mod curvesing;
mod error;
pub mod exactalg;
pub mod genus;
pub mod invariants;
pub mod lenslink;
pub mod scalar;

pub use braid::{garside, BraidWord, StrandPermutation};
pub use curvesing::{
    parse_poly, puiseux_pairs, torus_knot_in_lens_criterion, torus_lift_criterion, torus_poly,
    CableSequence, PuiseuxData, SupportPoly,
};
pub use error::{Error, Result};
pub use exactalg::{LaurentMatrix, LaurentPoly};
pub use genus::{
    bennequin_fiber, fiber_multiplicity, quotient_genus, torus_quotient_genus, FiberData,
    TorusQuotient,
};
pub use invariants::{alexander_of_closure, burau_reduced, torus_braid, AlexanderPoly};
pub use lenslink::{BandDiagram, HomologyClass, LensSpace, Orientation};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Laurent polynomial over arbitrary-precision integers.
pub type Laurent = LaurentPoly<BigInt>;
/// Reduced Burau matrix with arbitrary-precision coefficients.
pub type BurauMatrix = LaurentMatrix<BigInt>;
/// Normalized Alexander polynomial over arbitrary-precision integers.
pub type Alexander = AlexanderPoly<BigInt>;
/// Bivariate polynomial with exact rational coefficients.
pub type RationalPoly = SupportPoly<BigRational>;
