//! Foliations and complete intersections on projective space: charts,
//! closed-form total GSV index, and degree inequalities.

pub mod certified;
pub mod data;
pub mod formulas;

pub use certified::{total_gsv_certified, validate_points, TotalGSVReport};
pub use data::{
    chart_variables, dehomogenize_ci, dehomogenize_foliation, localize, PointOnChart, ProjectiveCI, ProjectiveFoliation,
};
pub use formulas::{
    closed_form_gsv, euler_characteristic_curve, milnor_degree_bound, plane_curve_degree_bound, poincare_sign_check,
    DegreeBoundReport, EulerReport, PlaneCurveBoundReport, PoincareReport,
};
