use crate::error::{Error, Result};
use crate::indices::{CurveGerm, VectorFieldGerm};
use crate::polycore::{numbered_variables, Polynomial, Variables};
use crate::scalar::Field;

/// Foliation of degree `d` on `P^m` given by homogeneous components
/// `A_0, ..., A_m` of degree `d` in `z_0, ..., z_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveFoliation<C> {
    d: u32,
    components: Vec<Polynomial<C>>,
}

impl<C: Field> ProjectiveFoliation<C> {
    pub fn new(components: Vec<Polynomial<C>>, d: u32) -> Result<Self> {
        let vars = shared_variables(&components)?;
        if components.len() != vars.len() {
            return Err(Error::LengthMismatch { expected: vars.len(), found: components.len() });
        }
        if vars.len() < 2 {
            return Err(Error::OutOfRange("need at least P^1".into()));
        }
        if components.iter().all(Polynomial::is_zero) {
            return Err(Error::Invalid("all foliation components are zero".into()));
        }
        for (j, a) in components.iter().enumerate() {
            if !a.is_homogeneous_of(d) {
                return Err(Error::DegreeMismatch { what: format!("foliation component A_{j}"), expected: d });
            }
        }
        Ok(ProjectiveFoliation { d, components })
    }

    pub fn m(&self) -> usize {
        self.components.len() - 1
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn components(&self) -> &[Polynomial<C>] {
        &self.components
    }

    pub fn variables(&self) -> &Variables {
        self.components[0].variables()
    }
}

/// Complete intersection `F_1 = ... = F_r = 0` in `P^m` of multidegree
/// `(k_1, ..., k_r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveCI<C> {
    equations: Vec<Polynomial<C>>,
    multidegree: Vec<u32>,
}

impl<C: Field> ProjectiveCI<C> {
    pub fn new(equations: Vec<Polynomial<C>>, multidegree: Vec<u32>) -> Result<Self> {
        let vars = shared_variables(&equations)?;
        if equations.len() != multidegree.len() {
            return Err(Error::LengthMismatch { expected: equations.len(), found: multidegree.len() });
        }
        let m = vars.len().saturating_sub(1);
        if equations.len() + 1 > m {
            return Err(Error::OutOfRange(format!("{} equations in P^{m}: need r <= m - 1", equations.len())));
        }
        for (i, (f, &k)) in equations.iter().zip(&multidegree).enumerate() {
            if k == 0 || f.is_zero() || !f.is_homogeneous_of(k) {
                return Err(Error::DegreeMismatch { what: format!("curve equation F_{}", i + 1), expected: k });
            }
        }
        Ok(ProjectiveCI { equations, multidegree })
    }

    pub fn m(&self) -> usize {
        self.variables().len() - 1
    }

    pub fn r(&self) -> usize {
        self.equations.len()
    }

    pub fn equations(&self) -> &[Polynomial<C>] {
        &self.equations
    }

    pub fn multidegree(&self) -> &[u32] {
        &self.multidegree
    }

    pub fn variables(&self) -> &Variables {
        self.equations[0].variables()
    }
}

/// A point of `P^m` in the chart `z_chart != 0`, with affine coordinates
/// `z_j / z_chart` for `j != chart` in increasing order of `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct PointOnChart<C> {
    pub chart: usize,
    pub affine_coords: Vec<C>,
}

impl<C: Field> PointOnChart<C> {
    pub fn new(chart: usize, affine_coords: Vec<C>) -> Self {
        PointOnChart { chart, affine_coords }
    }

    /// Homogeneous coordinates scaled so the first nonzero entry is 1.
    pub fn normalized_homogeneous(&self) -> Vec<C> {
        let mut z = self.affine_coords.clone();
        z.insert(self.chart.min(z.len()), C::one());
        let lead = z.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(C::one);
        z.into_iter().map(|c| c / lead.clone()).collect()
    }
}

fn shared_variables<C: Field>(polys: &[Polynomial<C>]) -> Result<Variables> {
    let Some(first) = polys.first() else {
        return Err(Error::OutOfRange("empty polynomial list".into()));
    };
    let vars = first.variables().clone();
    if polys.iter().any(|p| *p.variables() != vars) {
        return Err(Error::VariableMismatch);
    }
    Ok(vars)
}

/// Affine coordinates `x1, ..., xm` used on every chart.
pub fn chart_variables(m: usize) -> Variables {
    numbered_variables("x", m)
}

fn check_chart(chart: usize, m: usize) -> Result<()> {
    if chart > m {
        Err(Error::InvalidChart { chart, m })
    } else {
        Ok(())
    }
}

/// Affine field on the chart `z_i != 0`: component for `z_j` is
/// `A_j(z_i = 1) - x_j A_i(z_i = 1)`.
pub fn dehomogenize_foliation<C: Field>(fol: &ProjectiveFoliation<C>, chart: usize) -> Result<VectorFieldGerm<C>> {
    let m = fol.m();
    check_chart(chart, m)?;
    let vars = chart_variables(m);
    let restrict = |p: &Polynomial<C>| p.specialize(chart, &C::one(), vars.clone());
    let a_i = restrict(&fol.components()[chart])?;
    let mut comps = Vec::with_capacity(m);
    for (j, a) in fol.components().iter().enumerate() {
        if j == chart {
            continue;
        }
        let x = Polynomial::var(vars.clone(), if j < chart { j } else { j - 1 });
        comps.push(&restrict(a)? - &(&x * &a_i));
    }
    VectorFieldGerm::new(comps)
}

/// Equations restricted to the chart `z_i = 1`.
pub fn dehomogenize_ci<C: Field>(ci: &ProjectiveCI<C>, chart: usize) -> Result<Vec<Polynomial<C>>> {
    let m = ci.m();
    check_chart(chart, m)?;
    let vars = chart_variables(m);
    ci.equations().iter().map(|f| f.specialize(chart, &C::one(), vars.clone())).collect()
}

/// Curve and field germs at `point`, moved to the origin of its chart.
pub fn localize<C: Field>(
    fol: &ProjectiveFoliation<C>,
    ci: &ProjectiveCI<C>,
    point: &PointOnChart<C>,
) -> Result<(CurveGerm<C>, VectorFieldGerm<C>)> {
    let m = fol.m();
    check_chart(point.chart, m)?;
    if point.affine_coords.len() != m {
        return Err(Error::LengthMismatch { expected: m, found: point.affine_coords.len() });
    }
    let v = dehomogenize_foliation(fol, point.chart)?;
    let f = dehomogenize_ci(ci, point.chart)?;
    let shifted_v = v.components().iter().map(|a| a.translate(&point.affine_coords)).collect::<Result<_>>()?;
    let shifted_f = f.iter().map(|g| g.translate(&point.affine_coords)).collect::<Result<_>>()?;
    Ok((CurveGerm::new(shifted_f)?, VectorFieldGerm::new(shifted_v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_polynomial, variables};
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn z3() -> Variables {
        variables(&["z0", "z1", "z2", "z3"])
    }

    fn polys(v: &Variables, items: &[&str]) -> Vec<P> {
        items.iter().map(|s| parse_polynomial(s, v).unwrap()).collect()
    }

    fn example() -> (ProjectiveFoliation<BigRational>, ProjectiveCI<BigRational>) {
        let fol = ProjectiveFoliation::new(polys(&z3(), &["z0", "7*z1", "3*z2", "4*z3"]), 1).unwrap();
        let ci = ProjectiveCI::new(polys(&z3(), &["z0^2*z1 - z2^3", "z3^2 - z0*z1"]), vec![3, 2]).unwrap();
        (fol, ci)
    }

    #[test]
    fn example_charts() {
        let (fol, ci) = example();
        let x = chart_variables(3);
        assert_eq!(dehomogenize_foliation(&fol, 0).unwrap().components(), &polys(&x, &["6*x1", "2*x2", "3*x3"])[..]);
        assert_eq!(dehomogenize_foliation(&fol, 1).unwrap().components(), &polys(&x, &["-6*x1", "-4*x2", "-3*x3"])[..]);
        assert_eq!(dehomogenize_ci(&ci, 0).unwrap(), polys(&x, &["x1 - x2^3", "x3^2 - x1"]));
        assert_eq!(dehomogenize_ci(&ci, 1).unwrap(), polys(&x, &["x1^2 - x2^3", "x3^2 - x1"]));
        assert!(matches!(dehomogenize_ci(&ci, 4), Err(Error::InvalidChart { chart: 4, m: 3 })));
    }

    #[test]
    fn radial_field_vanishes() {
        let fol = ProjectiveFoliation::new(polys(&z3(), &["z0", "z1", "z2", "z3"]), 1).unwrap();
        for chart in 0..=3 {
            assert!(dehomogenize_foliation(&fol, chart).unwrap().components().iter().all(P::is_zero));
        }
    }

    #[test]
    fn linear_ci() {
        let ci = ProjectiveCI::new(polys(&z3(), &["z1", "z2"]), vec![1, 1]).unwrap();
        assert_eq!(dehomogenize_ci(&ci, 0).unwrap(), polys(&chart_variables(3), &["x1", "x2"]));
    }

    #[test]
    fn validation() {
        assert!(matches!(
            ProjectiveFoliation::new(polys(&z3(), &["z0", "z1^2", "z2", "z3"]), 1),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(ProjectiveFoliation::new(polys(&z3(), &["0", "0", "0", "0"]), 1).is_err());
        assert!(ProjectiveCI::new(polys(&z3(), &["z1", "z2"]), vec![1, 2]).is_err());
        assert!(ProjectiveCI::new(polys(&z3(), &["z1", "z2", "z3"]), vec![1, 1, 1]).is_err());
    }

    #[test]
    fn normalized_points() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let a = PointOnChart::new(0, vec![q(1), q(0)]);
        let b = PointOnChart::new(1, vec![q(1), q(0)]);
        assert_eq!(a.normalized_homogeneous(), b.normalized_homogeneous());
        let c = PointOnChart::new(2, vec![q(0), q(2)]);
        assert_eq!(c.normalized_homogeneous(), vec![q(0), q(1), BigRational::new(1.into(), 2.into())]);
    }
}
