use num_bigint::BigInt;
use rayon::prelude::*;

use super::data::{dehomogenize_ci, localize, PointOnChart, ProjectiveCI, ProjectiveFoliation};
use super::formulas::closed_form_gsv;
use crate::error::{Error, Result};
use crate::indices::{local_gsv_curve, LocalIndexReport};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalGSVReport {
    pub closed_form: BigInt,
    pub local_sum: BigInt,
    /// Reports in input order.
    pub per_point: Vec<LocalIndexReport>,
    /// `closed_form == local_sum`.
    pub consistent: bool,
}

/// Checks the point list: valid charts, no projective duplicates, every
/// point on the curve.
pub fn validate_points<C: Field>(ci: &ProjectiveCI<C>, points: &[PointOnChart<C>]) -> Result<()> {
    let m = ci.m();
    let mut seen: Vec<Vec<C>> = Vec::with_capacity(points.len());
    for (index, p) in points.iter().enumerate() {
        if p.chart > m {
            return Err(Error::InvalidChart { chart: p.chart, m });
        }
        if p.affine_coords.len() != m {
            return Err(Error::LengthMismatch { expected: m, found: p.affine_coords.len() });
        }
        let z = p.normalized_homogeneous();
        if let Some(previous) = seen.iter().position(|q| *q == z) {
            return Err(Error::DuplicatePoint { index, previous });
        }
        seen.push(z);
        for f in dehomogenize_ci(ci, p.chart)? {
            if !f.evaluate(&p.affine_coords)?.is_zero() {
                return Err(Error::PointNotOnCurve { index });
            }
        }
    }
    Ok(())
}

/// Sums local GSV indices over the supplied singular points and compares
/// the sum with the closed form. A mismatch means a point is missing or
/// the data are degenerate.
pub fn total_gsv_certified<C: Field>(
    fol: &ProjectiveFoliation<C>,
    ci: &ProjectiveCI<C>,
    points: &[PointOnChart<C>],
) -> Result<TotalGSVReport> {
    let m = fol.m();
    if ci.m() != m {
        return Err(Error::VariableMismatch);
    }
    if ci.r() + 1 != m {
        return Err(Error::OutOfRange(format!("expected a curve in P^{m}, got codimension {}", ci.r())));
    }
    validate_points(ci, points)?;
    let per_point = points
        .par_iter()
        .map(|p| {
            let (germ, v) = localize(fol, ci, p)?;
            local_gsv_curve(&germ, &v)
        })
        .collect::<Result<Vec<_>>>()?;
    let ks: Vec<i64> = ci.multidegree().iter().map(|&k| i64::from(k)).collect();
    let closed_form = closed_form_gsv(m, &ks, i64::from(fol.d()))?;
    let local_sum: BigInt = per_point.iter().map(|r| BigInt::from(r.gsv)).sum();
    Ok(TotalGSVReport { consistent: closed_form == local_sum, closed_form, local_sum, per_point })
}
