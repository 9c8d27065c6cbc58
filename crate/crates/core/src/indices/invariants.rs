use super::germ::CurveGerm;
use crate::combinat::permutations;
use crate::error::{Error, Result};
use crate::localring::{quotient_dim, IdealGens};
use crate::polycore::{jacobian_minors, Polynomial};
use crate::scalar::Field;

/// Generators of `<f_1, ..., f_r, all r x r minors of Jac(f)>`.
pub fn tjurina_generators<C: Field>(germ: &CurveGerm<C>) -> Result<Vec<Polynomial<C>>> {
    let mut gens = germ.equations().to_vec();
    gens.extend(jacobian_minors(germ.equations())?);
    Ok(gens)
}

pub(crate) fn finite_dim<C: Field>(gens: Vec<Polynomial<C>>, context: &str) -> Result<u64> {
    quotient_dim(&IdealGens::local(gens)?)?.finite().ok_or_else(|| Error::InfiniteDimension { context: context.into() })
}

/// Greuel's invariant `τ = dim O/<f, minors of Jac(f)>`.
pub fn greuel_tjurina<C: Field>(germ: &CurveGerm<C>) -> Result<u64> {
    finite_dim(tjurina_generators(germ)?, "the singularity is not isolated")
}

/// Ideal of step `k` (1-based) in the Lê–Greuel chain for the equations in
/// the given order: `<f_1..f_{k-1}, maximal minors of Jac(f_1..f_k)>`.
pub fn milnor_step_generators<C: Field>(equations: &[Polynomial<C>], k: usize) -> Result<Vec<Polynomial<C>>> {
    let mut gens = equations[..k - 1].to_vec();
    gens.extend(jacobian_minors(&equations[..k])?);
    Ok(gens)
}

/// Milnor number by the Lê–Greuel chain in the given generator order.
/// `µ(f_1..f_k) + µ(f_1..f_{k-1}) = dim O/<f_1..f_{k-1}, minors_k>`.
/// Fails with `MilnorChain` naming the first step whose truncation is not an
/// isolated complete intersection.
pub fn milnor_curve<C: Field>(germ: &CurveGerm<C>) -> Result<u64> {
    germ.require_curve()?;
    let order: Vec<usize> = (0..germ.r()).collect();
    let mu = milnor_chain(germ, &order)?;
    let tau = greuel_tjurina(germ)?;
    if mu < tau {
        return Err(Error::Invalid(format!("Milnor number {mu} is smaller than the Tjurina number {tau}")));
    }
    Ok(mu)
}

/// Runs the chain on `equations` permuted by `order`.
pub fn milnor_chain<C: Field>(germ: &CurveGerm<C>, order: &[usize]) -> Result<u64> {
    let eqs: Vec<Polynomial<C>> = order.iter().map(|&i| germ.equations()[i].clone()).collect();
    let mut previous: i128 = 0;
    for k in 1..=eqs.len() {
        let dim = match finite_dim(milnor_step_generators(&eqs, k)?, "") {
            Ok(d) => d,
            Err(Error::InfiniteDimension { .. }) => {
                return Err(Error::MilnorChain { step: k, order: order.to_vec() });
            }
            Err(e) => return Err(e),
        };
        let mu = i128::from(dim) - previous;
        if mu < 0 {
            return Err(Error::MilnorChain { step: k, order: order.to_vec() });
        }
        previous = mu;
    }
    Ok(previous as u64)
}

/// Milnor number from the first generator order (lexicographic among
/// permutations, identity first) for which the chain succeeds. Returns the
/// order used. The error of the identity order is reported if none works.
pub fn milnor_curve_auto<C: Field>(germ: &CurveGerm<C>) -> Result<(u64, Vec<usize>)> {
    germ.require_curve()?;
    let mut first_error = None;
    for order in permutations(germ.r()) {
        match milnor_chain(germ, &order) {
            Ok(mu) => {
                let tau = greuel_tjurina(germ)?;
                if mu < tau {
                    return Err(Error::Invalid(format!("Milnor number {mu} is smaller than the Tjurina number {tau}")));
                }
                return Ok((mu, order));
            }
            Err(e @ Error::MilnorChain { .. }) => {
                first_error.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(first_error.expect("at least one permutation"))
}

/// `µ = τ`, which for curve germs characterizes quasi-homogeneity.
pub fn is_quasihomogeneous<C: Field>(germ: &CurveGerm<C>) -> Result<bool> {
    let (mu, _) = milnor_curve_auto(germ)?;
    Ok(mu == greuel_tjurina(germ)?)
}
