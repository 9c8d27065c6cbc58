//! Exact computer algebra for indices of one-dimensional holomorphic
//! foliations along invariant complete intersections.
//!
//! The polynomial and local-ring layers are generic over an exact
//! coefficient [`Field`]; the aliases below fix the rationals used
//! throughout the rest of the crate.

pub mod cherncalc;
pub mod combinat;
pub mod error;
pub mod indices;
pub mod localring;
pub mod polycore;
pub mod projective;
pub mod scalar;

pub use error::{Error, ParseError, Result};
pub use scalar::Field;

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers.
pub type Integer = num_bigint::BigInt;
/// Polynomials with rational coefficients.
pub type QPolynomial = polycore::Polynomial<Rational>;
pub type QIdeal = localring::IdealGens<Rational>;
/// Truncated graded elements with integer coefficients.
pub type IntGraded = cherncalc::GradedElement<Integer>;
