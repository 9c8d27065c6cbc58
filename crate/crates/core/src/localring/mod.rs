//! Computations in the local ring `O_{m,0}` of germs at the origin.

pub mod basis;
pub mod ideal;
pub mod macaulay;
pub mod mora;
pub mod quotient;

pub use basis::{standard_basis, standard_basis_with, StandardBasis};
pub use ideal::{IdealGens, ReductionOptions};
pub use macaulay::{macaulay_quotient_dim, truncated_quotient_dim};
pub use mora::{
    membership_in, membership_with_cofactors, mora_normal_form, mora_normal_form_with, DivisionResult, Membership,
};
pub use quotient::{count_standard_monomials, quotient_dim, quotient_dim_with, standard_monomials, QuotientDim};
