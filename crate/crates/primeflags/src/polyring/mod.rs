//! Exact polynomial arithmetic: sparse multivariate and Laurent polynomials,
//! rational functions, polynomial matrices and univariate utilities.

mod discriminant;
mod gcd;
mod matrix;
mod parse;
mod poly;
mod rational;
mod univariate;

pub use discriminant::{discriminant_bivariate, MAX_DISCRIMINANT_DEGREE};
pub use gcd::poly_gcd;
pub use matrix::{det_bareiss, int_char_poly, PolynomialMatrix, NUMERIC_BLOCK_LIMIT, SYMBOLIC_BLOCK_LIMIT};
pub use poly::{LaurentPolynomial, Monomial, PolyRing, SparsePolynomial};
pub use rational::RationalFunction;
pub use univariate::{
    interpolate, interpolate_consecutive, is_squarefree_univariate, newton_forward_polynomial, sylvester_resultant,
    IntPoly, NewtonReport, RatPoly,
};

/// det(var·Id − m).
pub fn char_poly(m: &PolynomialMatrix, var: &str) -> crate::Result<SparsePolynomial> {
    m.char_poly(var)
}
