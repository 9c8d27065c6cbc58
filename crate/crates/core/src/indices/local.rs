use super::germ::{check_pair, invariance_certificate, CurveGerm, HMatrix, VectorFieldGerm};
use super::invariants::{finite_dim, greuel_tjurina, milnor_curve_auto, tjurina_generators};
use crate::error::Result;
use crate::localring::{quotient_dim, IdealGens, QuotientDim};
use crate::polycore::Polynomial;
use crate::scalar::Field;

/// Local indices of a foliation germ along an invariant curve germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIndexReport {
    pub tau: u64,
    /// `dim O/<v, f>`.
    pub dim_vf: u64,
    /// `dim O/<v>`.
    pub dim_v: QuotientDim,
    pub gsv: i64,
    pub milnor: Option<u64>,
    pub schwartz: Option<i64>,
    /// Generator order in which the Lê–Greuel chain succeeded.
    pub milnor_order: Option<Vec<usize>>,
    pub quasi_homogeneous: Option<bool>,
    /// Flagged violations of expected theorems (never silently dropped).
    pub anomalies: Vec<String>,
}

/// The three ideals whose quotient dimensions feed a local report.
#[derive(Clone, Debug)]
pub struct LocalIdeals<C> {
    pub tjurina: Vec<Polynomial<C>>,
    pub vf: Vec<Polynomial<C>>,
    pub v: Vec<Polynomial<C>>,
}

pub fn local_ideals<C: Field>(germ: &CurveGerm<C>, v: &VectorFieldGerm<C>) -> Result<LocalIdeals<C>> {
    check_pair(germ, v)?;
    let mut vf = v.components().to_vec();
    vf.extend(germ.equations().iter().cloned());
    Ok(LocalIdeals { tjurina: tjurina_generators(germ)?, vf, v: v.components().to_vec() })
}

/// `GSV = -τ + dim O/<v, f>` after certifying invariance.
pub fn local_gsv_curve<C: Field>(germ: &CurveGerm<C>, v: &VectorFieldGerm<C>) -> Result<LocalIndexReport> {
    local_gsv_with_certificate(germ, v).map(|(report, _)| report)
}

pub fn local_gsv_with_certificate<C: Field>(
    germ: &CurveGerm<C>,
    v: &VectorFieldGerm<C>,
) -> Result<(LocalIndexReport, HMatrix<C>)> {
    germ.require_curve()?;
    let h = invariance_certificate(germ, v)?;
    let ideals = local_ideals(germ, v)?;
    let tau = greuel_tjurina(germ)?;
    let dim_vf = finite_dim(ideals.vf, "v and f have a common non-isolated zero")?;
    let dim_v = quotient_dim(&IdealGens::local(ideals.v)?)?;
    let gsv = dim_vf as i64 - tau as i64;
    let report = LocalIndexReport {
        tau,
        dim_vf,
        dim_v,
        gsv,
        milnor: None,
        schwartz: None,
        milnor_order: None,
        quasi_homogeneous: None,
        anomalies: Vec::new(),
    };
    Ok((report, h))
}

/// Local report with `Sch = GSV + µ`. A nonpositive Schwartz index, or one
/// below 2 at a germ that is not quasi-homogeneous, is recorded in
/// `anomalies`.
pub fn schwartz_curve<C: Field>(germ: &CurveGerm<C>, v: &VectorFieldGerm<C>) -> Result<LocalIndexReport> {
    let mut report = local_gsv_curve(germ, v)?;
    let (mu, order) = milnor_curve_auto(germ)?;
    let sch = report.gsv + mu as i64;
    let qh = mu == report.tau;
    if sch <= 0 {
        report.anomalies.push(format!("Schwartz index {sch} is not positive"));
    }
    if !qh && sch < 2 {
        report.anomalies.push(format!("Schwartz index {sch} < 2 at a germ that is not quasi-homogeneous"));
    }
    report.milnor = Some(mu);
    report.schwartz = Some(sch);
    report.milnor_order = Some(order);
    report.quasi_homogeneous = Some(qh);
    Ok(report)
}
