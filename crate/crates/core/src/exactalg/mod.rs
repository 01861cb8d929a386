//! Exact arithmetic over `R[t, t^-1]`: Laurent polynomials in one variable
//! and small square matrices of them.

mod laurent;
mod matrix;

pub use laurent::LaurentPoly;
pub use matrix::LaurentMatrix;
