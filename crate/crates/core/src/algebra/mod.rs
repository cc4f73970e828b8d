//! Exact rational arithmetic, graded pieces of the polynomial ring, dense
//! exact matrices and the random-line gcd oracle.

mod binary;
mod gcd;
mod matrix;
mod monomial;
mod poly;
pub mod random;
pub(crate) mod rational;

pub use binary::{BinaryForm, UniPoly};
pub use gcd::{binary_gcd_degree, gcd_degree};
pub use matrix::ExactMatrix;
pub use monomial::{binomial, monomial_basis, Monomial, MonomialIndex};
pub use poly::{poly_mul, restrict_to_line, HomogeneousPolynomial};
pub use rational::{parse_rational, Rational};
