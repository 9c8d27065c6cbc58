use crate::error::{Error, Result};
use crate::localring::{membership_in, standard_basis_with, IdealGens, ReductionOptions};
use crate::polycore::{determinant, MonomialOrder, Polynomial, Variables};
use crate::scalar::Field;

/// Germ at the origin of a complete intersection `f_1 = ... = f_r = 0` in
/// `(K^m, 0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveGerm<C> {
    equations: Vec<Polynomial<C>>,
}

impl<C: Field> CurveGerm<C> {
    /// Requires `1 <= r <= m - 1` and a shared variable list.
    pub fn new(equations: Vec<Polynomial<C>>) -> Result<Self> {
        let Some(first) = equations.first() else {
            return Err(Error::OutOfRange("a complete intersection needs at least one equation".into()));
        };
        let vars = first.variables().clone();
        if equations.iter().any(|f| *f.variables() != vars) {
            return Err(Error::VariableMismatch);
        }
        let (m, r) = (vars.len(), equations.len());
        if r + 1 > m {
            return Err(Error::OutOfRange(format!("codimension {r} in dimension {m}: need 1 <= r <= m - 1")));
        }
        Ok(CurveGerm { equations })
    }

    pub fn equations(&self) -> &[Polynomial<C>] {
        &self.equations
    }

    pub fn variables(&self) -> &Variables {
        self.equations[0].variables()
    }

    /// Ambient dimension.
    pub fn m(&self) -> usize {
        self.variables().len()
    }

    /// Codimension.
    pub fn r(&self) -> usize {
        self.equations.len()
    }

    pub fn is_curve(&self) -> bool {
        self.r() + 1 == self.m()
    }

    pub(crate) fn require_curve(&self) -> Result<()> {
        if self.is_curve() {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("expected a curve (r = m - 1), got r = {} in m = {}", self.r(), self.m())))
        }
    }
}

/// Germ at the origin of the vector field `Σ a_i ∂/∂x_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorFieldGerm<C> {
    components: Vec<Polynomial<C>>,
}

impl<C: Field> VectorFieldGerm<C> {
    /// One component per variable.
    pub fn new(components: Vec<Polynomial<C>>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::OutOfRange("a vector field needs at least one component".into()));
        };
        let vars = first.variables().clone();
        if components.iter().any(|a| *a.variables() != vars) {
            return Err(Error::VariableMismatch);
        }
        if components.len() != vars.len() {
            return Err(Error::LengthMismatch { expected: vars.len(), found: components.len() });
        }
        Ok(VectorFieldGerm { components })
    }

    pub fn components(&self) -> &[Polynomial<C>] {
        &self.components
    }

    pub fn variables(&self) -> &Variables {
        self.components[0].variables()
    }

    /// `v(g) = Σ a_i ∂g/∂x_i`.
    pub fn apply(&self, g: &Polynomial<C>) -> Result<Polynomial<C>> {
        if g.variables() != self.variables() {
            return Err(Error::VariableMismatch);
        }
        let mut acc = Polynomial::zero(self.variables().clone());
        for (i, a) in self.components.iter().enumerate() {
            acc = &acc + &(a * &g.partial_derivative(i)?);
        }
        Ok(acc)
    }

    /// Matrix of the linear part at the origin, `J[i][j] = ∂a_i/∂x_j (0)`.
    pub fn linear_part(&self) -> Vec<Vec<C>> {
        let n = self.components.len();
        self.components
            .iter()
            .map(|a| (0..n).map(|j| a.coefficient(&crate::polycore::Monomial::var(n, j))).collect())
            .collect()
    }

    /// True if `v(0) = 0` and the linear part is invertible.
    pub fn is_nondegenerate(&self) -> bool {
        if self.components.iter().any(|a| !a.constant_term().is_zero()) {
            return false;
        }
        let vars = self.variables().clone();
        let matrix: Vec<Vec<Polynomial<C>>> = self
            .linear_part()
            .into_iter()
            .map(|row| row.into_iter().map(|c| Polynomial::constant(vars.clone(), c)).collect())
            .collect();
        !determinant(&matrix).is_zero()
    }
}

/// One row of the invariance certificate: `unit * df_i(v) = Σ_j h_ij f_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct HRow<C> {
    pub unit: Polynomial<C>,
    pub cofactors: Vec<Polynomial<C>>,
}

/// The matrix `H` with `df(v) = H f` in the local ring, stored as
/// polynomial quotients `h_ij = cofactors_ij / unit_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct HMatrix<C> {
    rows: Vec<HRow<C>>,
}

impl<C: Field> HMatrix<C> {
    pub fn rows(&self) -> &[HRow<C>] {
        &self.rows
    }

    /// Numerator and denominator of `h_ij`.
    pub fn entry(&self, i: usize, j: usize) -> (&Polynomial<C>, &Polynomial<C>) {
        (&self.rows[i].cofactors[j], &self.rows[i].unit)
    }

    /// Re-expands every row exactly.
    pub fn verify(&self, germ: &CurveGerm<C>, v: &VectorFieldGerm<C>) -> bool {
        self.rows.len() == germ.r()
            && self.rows.iter().zip(germ.equations()).all(|(row, f)| {
                let Ok(df) = v.apply(f) else { return false };
                let mut rhs = Polynomial::zero(df.variables().clone());
                for (h, g) in row.cofactors.iter().zip(germ.equations()) {
                    rhs = &rhs + &(h * g);
                }
                !row.unit.constant_term().is_zero() && row.cofactors.len() == germ.r() && &row.unit * &df == rhs
            })
    }
}

fn require_same_space<C: Field>(germ: &CurveGerm<C>, v: &VectorFieldGerm<C>) -> Result<()> {
    if germ.variables() != v.variables() {
        Err(Error::VariableMismatch)
    } else {
        Ok(())
    }
}

/// Certifies that the germ is invariant by `v`: every `df_i(v)` lies in
/// `<f>` in the local ring. Polynomial membership (unit 1) is tried first
/// with a global Gröbner basis; only rows that fail it go through the local
/// standard basis.
pub fn invariance_certificate<C: Field>(germ: &CurveGerm<C>, v: &VectorFieldGerm<C>) -> Result<HMatrix<C>> {
    require_same_space(germ, v)?;
    let options = ReductionOptions::default();
    let global = standard_basis_with(
        &IdealGens::with_order(germ.equations().to_vec(), MonomialOrder::GlobalDegRevLex)?,
        options,
        true,
    )?;
    let mut local = None;
    let n = germ.r();
    let mut rows = Vec::with_capacity(n);
    for (i, f) in germ.equations().iter().enumerate() {
        let df = v.apply(f)?;
        let cert = match membership_in(&df, &global, options) {
            Ok(c) => c,
            Err(Error::NotMember | Error::IterationCap { .. }) => {
                if local.is_none() {
                    local = Some(standard_basis_with(&IdealGens::local(germ.equations().to_vec())?, options, true)?);
                }
                match membership_in(&df, local.as_ref().expect("computed above"), options) {
                    Ok(c) => c,
                    Err(Error::NotMember) => return Err(Error::NotInvariant { row: i }),
                    Err(e) => return Err(e),
                }
            }
            Err(e) => return Err(e),
        };
        // Zero equations are dropped from the ideal; map cofactors back.
        let mut cofactors = Vec::with_capacity(n);
        let mut it = cert.cofactors.into_iter();
        for g in germ.equations() {
            cofactors.push(if g.is_zero() {
                Polynomial::zero(g.variables().clone())
            } else {
                it.next().expect("cofactor per generator")
            });
        }
        rows.push(HRow { unit: cert.unit, cofactors });
    }
    let h = HMatrix { rows };
    if !h.verify(germ, v) {
        return Err(Error::Invalid("invariance certificate failed re-expansion".into()));
    }
    Ok(h)
}

pub(crate) fn check_pair<C: Field>(germ: &CurveGerm<C>, v: &VectorFieldGerm<C>) -> Result<()> {
    require_same_space(germ, v)
}
