//! Formal Chern-class calculus in truncated graded rings over the integers.

pub mod classes;
pub mod ring;

pub use classes::{
    chern_difference_expansion, chern_difference_recursion, chern_integral_projective, compositions,
    elementary_symmetric, inverse_total_class, projective_tangent_class, ChernVector, Composition,
};
pub use ring::{GradedElement, GradedRing, IntegerRing};
