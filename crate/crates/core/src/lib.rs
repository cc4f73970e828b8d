//! Exact computation of splitting types of Verlinde bundles restricted to
//! lines in the linear system of degree-`d` hypersurfaces in `P^n`, together
//! with the two-row Schubert calculus needed to compute the class of the
//! locus of jumping lines of `V_{d+1}`.
//!
//! Everything here is pure and allocation-only; file formats, the CLI and the
//! verification suites live in the `verlinde` crate.

#![no_std]
#![warn(rust_2018_idioms, unused_qualifications)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod error;
pub mod family;
pub mod jumping;
pub mod pencil;
pub mod schubert;

pub use algebra::{
    monomial_basis, ExactMatrix, HomogeneousPolynomial, Monomial, Rational,
};
pub use error::{Error, Result};
pub use family::{LineInSystem, SampleMode, VerlindeContext};
pub use pencil::{Pencil, SplittingType};
pub use schubert::{BidegreeClass, GrContext, SchubertClass};



