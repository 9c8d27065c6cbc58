use std::fmt;

use super::basis::{minimize, standard_basis_with, StandardBasis};
use super::ideal::{IdealGens, ReductionOptions};
use crate::error::Result;
use crate::polycore::Monomial;
use crate::scalar::Field;

/// `dim_K O_{m,0} / I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<u64> {
        match self {
            QuotientDim::Finite(n) => Some(n),
            QuotientDim::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, QuotientDim::Finite(_))
    }
}

impl fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDim::Finite(n) => write!(f, "{n}"),
            QuotientDim::Infinite => f.write_str("infinite"),
        }
    }
}

/// Dimension of the local quotient by `gens`, counted on the staircase of a
/// local standard basis.
pub fn quotient_dim<C: Field>(gens: &IdealGens<C>) -> Result<QuotientDim> {
    quotient_dim_with(gens, ReductionOptions::default())
}

pub fn quotient_dim_with<C: Field>(gens: &IdealGens<C>, options: ReductionOptions) -> Result<QuotientDim> {
    gens.require_local()?;
    if gens.is_empty() {
        return Ok(if gens.variables().is_empty() { QuotientDim::Finite(1) } else { QuotientDim::Infinite });
    }
    let sb = standard_basis_with(gens, options, false)?;
    Ok(staircase_size(&sb))
}

pub fn staircase_size<C: Field>(sb: &StandardBasis<C>) -> QuotientDim {
    let n = sb.ideal().variables().len();
    count_standard_monomials(&sb.minimal_leading_monomials(), n)
}

/// Number of monomials in `nvars` variables not divisible by any of
/// `leading`. Finite iff every variable has a pure power among `leading`.
pub fn count_standard_monomials(leading: &[Monomial], nvars: usize) -> QuotientDim {
    let leading = minimize(leading);
    if leading.iter().any(Monomial::is_one) {
        return QuotientDim::Finite(0);
    }
    let mut bounds = vec![u32::MAX; nvars];
    for m in &leading {
        if let Some((i, a)) = m.as_pure_power() {
            bounds[i] = bounds[i].min(a);
        }
    }
    if bounds.contains(&u32::MAX) {
        return QuotientDim::Infinite;
    }
    QuotientDim::Finite(standard_monomials_in_box(&leading, &bounds).len() as u64)
}

/// Monomials below the staircase, listed explicitly. Only meaningful for
/// finite quotients.
pub fn standard_monomials(leading: &[Monomial], nvars: usize) -> Option<Vec<Monomial>> {
    let leading = minimize(leading);
    if leading.iter().any(Monomial::is_one) {
        return Some(Vec::new());
    }
    let mut bounds = vec![u32::MAX; nvars];
    for m in &leading {
        if let Some((i, a)) = m.as_pure_power() {
            bounds[i] = bounds[i].min(a);
        }
    }
    if bounds.contains(&u32::MAX) {
        return None;
    }
    Some(standard_monomials_in_box(&leading, &bounds))
}

fn standard_monomials_in_box(leading: &[Monomial], bounds: &[u32]) -> Vec<Monomial> {
    fn go(i: usize, exps: &mut Vec<u32>, bounds: &[u32], leading: &[Monomial], out: &mut Vec<Monomial>) {
        if i == bounds.len() {
            out.push(Monomial::from_exponents(exps.clone()));
            return;
        }
        for e in 0..bounds[i] {
            exps.push(e);
            // If the prefix padded with zeros is divisible, so is every
            // extension and every larger e.
            let mut probe = exps.clone();
            probe.resize(bounds.len(), 0);
            let probe = Monomial::from_exponents(probe);
            if leading.iter().any(|l| l.divides(&probe)) {
                exps.pop();
                break;
            }
            go(i + 1, exps, bounds, leading, out);
            exps.pop();
        }
    }
    let mut out = Vec::new();
    go(0, &mut Vec::new(), bounds, leading, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_polynomial, variables, Variables};
    use num_rational::BigRational;

    fn dim(v: &Variables, gens: &[&str]) -> QuotientDim {
        let gens = IdealGens::local(gens.iter().map(|g| parse_polynomial::<BigRational>(g, v).unwrap())).unwrap();
        quotient_dim(&gens).unwrap()
    }

    fn xyz() -> Variables {
        variables(&["x1", "x2", "x3"])
    }

    #[test]
    fn example_dimensions() {
        assert_eq!(dim(&xyz(), &["6*x1", "2*x2", "3*x3", "x1 - x2^3", "x3^2 - x1"]), QuotientDim::Finite(1));
        assert_eq!(dim(&xyz(), &["-3*x2^2", "2*x3", "-6*x3*x2^2", "x1 - x2^3", "x3^2 - x1"]), QuotientDim::Finite(2));
        let y = variables(&["y1", "y2", "y3"]);
        assert_eq!(dim(&y, &["-3*y2^2", "4*y1*y3", "-6*y2^2*y3", "y1^2 - y2^3", "y3^2 - y1"]), QuotientDim::Finite(6));
        assert_eq!(dim(&y, &["-6*y1", "-4*y2", "-3*y3", "y1^2 - y2^3", "y3^2 - y1"]), QuotientDim::Finite(1));
    }

    #[test]
    fn local_not_global() {
        // Globally K[x]/<x - x^2> has dimension 2 (points 0 and 1).
        assert_eq!(dim(&variables(&["x"]), &["x - x^2"]), QuotientDim::Finite(1));
    }

    #[test]
    fn staircase_of_monomial_ideal() {
        // Oracle: {x^a y^b : a < 2, b < 3} has 6 elements.
        let count = (0..2).flat_map(|a| (0..3).map(move |b| (a, b))).count() as u64;
        assert_eq!(dim(&variables(&["x", "y"]), &["x^2", "y^3"]), QuotientDim::Finite(count));
    }

    #[test]
    fn infinite_and_unit() {
        assert_eq!(dim(&variables(&["x1", "x2"]), &["x1"]), QuotientDim::Infinite);
        assert_eq!(dim(&variables(&["x1", "x2"]), &["1 + x1", "x2"]), QuotientDim::Finite(0));
        assert_eq!(dim(&variables(&["x1", "x2"]), &["0"]), QuotientDim::Infinite);
    }

    #[test]
    fn maximal_ideal_has_dimension_one() {
        for m in 1..=5 {
            let v: Variables = (0..m).map(|i| format!("t{i}")).collect();
            let names: Vec<String> = v.iter().cloned().collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            assert_eq!(dim(&v, &refs), QuotientDim::Finite(1));
        }
    }

    #[test]
    fn staircase_listing() {
        let lead = [
            Monomial::from_exponents(vec![2, 0]),
            Monomial::from_exponents(vec![1, 1]),
            Monomial::from_exponents(vec![0, 3]),
        ];
        let sm = standard_monomials(&lead, 2).unwrap();
        assert_eq!(sm.len(), 4); // 1, y, y^2, x
        assert_eq!(count_standard_monomials(&lead, 2), QuotientDim::Finite(4));
    }
}
