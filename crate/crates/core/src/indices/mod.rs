//! Singularity invariants of curve germs and local indices of foliations
//! along them.

pub mod bounds;
pub mod germ;
pub mod invariants;
pub mod local;

pub use bounds::{bound_constants, gsv_bounds_nondegenerate, gsv_from_rho, BoundConstants, GsvInterval, RhoEvaluation};
pub use germ::{invariance_certificate, CurveGerm, HMatrix, HRow, VectorFieldGerm};
pub use invariants::{
    greuel_tjurina, is_quasihomogeneous, milnor_chain, milnor_curve, milnor_curve_auto, milnor_step_generators,
    tjurina_generators,
};
pub use local::{
    local_gsv_curve, local_gsv_with_certificate, local_ideals, schwartz_curve, LocalIdeals, LocalIndexReport,
};
