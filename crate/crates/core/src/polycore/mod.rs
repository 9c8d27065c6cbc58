//! Exact sparse multivariate polynomials.

pub mod jacobian;
pub mod monomial;
pub mod parse;
pub mod polynomial;

pub use jacobian::{determinant, jacobian_matrix, jacobian_minors};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{numbered_variables, variables, Polynomial, Variables};
