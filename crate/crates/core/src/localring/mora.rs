//! Mora's weak normal form in the localization at the origin.
//!
//! The divisor with minimal écart is chosen at every step (first in list on
//! ties). Whenever that divisor has larger écart than the current
//! remainder, the remainder is appended to the divisor set, which is what
//! makes the division terminate for local orders. Every element carries an
//! optional linear representation so that the final identity
//! `unit * p = Σ cofactor_i * g_i + remainder` can be returned.

use super::basis::{standard_basis_with, StandardBasis};
use super::ideal::{IdealGens, ReductionOptions};
use crate::error::{Error, Result};
use crate::polycore::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Field;

/// `poly = dividend_coeff * p + Σ rep_i * g_i`, where `p` is the dividend of
/// the current division and `g_i` are the ideal's original generators.
#[derive(Clone, Debug)]
pub(crate) struct Tracked<C> {
    pub poly: Polynomial<C>,
    pub lm: Option<Monomial>,
    pub ecart: u32,
    pub dividend_coeff: Option<Polynomial<C>>,
    pub rep: Vec<Polynomial<C>>,
}

impl<C: Field> Tracked<C> {
    pub fn new(
        poly: Polynomial<C>,
        dividend_coeff: Option<Polynomial<C>>,
        rep: Vec<Polynomial<C>>,
        order: MonomialOrder,
    ) -> Self {
        let mut t = Tracked { poly, lm: None, ecart: 0, dividend_coeff, rep };
        t.refresh(order);
        t
    }

    pub fn refresh(&mut self, order: MonomialOrder) {
        self.lm = self.poly.leading_monomial(order).cloned();
        self.ecart = match &self.lm {
            Some(lm) => self.poly.total_degree().unwrap_or(0) - lm.degree(),
            None => 0,
        };
    }

    fn leading_coefficient(&self, order: MonomialOrder) -> C {
        self.poly.leading_term(order).map(|(_, c)| c.clone()).unwrap_or_else(C::zero)
    }

    /// `self -= c * mono * other`, on the polynomial and its representation.
    fn subtract(&mut self, c: &C, mono: &Monomial, other: &Tracked<C>) {
        self.poly.sub_scaled_shifted(c, mono, &other.poly);
        if let (Some(mine), Some(theirs)) = (self.dividend_coeff.as_mut(), other.dividend_coeff.as_ref()) {
            mine.sub_scaled_shifted(c, mono, theirs);
        }
        for (mine, theirs) in self.rep.iter_mut().zip(other.rep.iter()) {
            mine.sub_scaled_shifted(c, mono, theirs);
        }
    }

    fn normalize(&mut self) {
        let s = self.poly.make_primitive();
        if s.is_one() {
            return;
        }
        if let Some(a) = self.dividend_coeff.as_mut() {
            *a = a.scale(&s);
        }
        for r in &mut self.rep {
            *r = r.scale(&s);
        }
    }
}

/// Reduces `h` against `divisors` (which may grow) until its leading
/// monomial is not divisible by any divisor's leading monomial. With
/// `corner = Some(D)` terms of degree `D` and above are discarded; callers
/// use this only when `m^D` is known to lie in the ideal.
pub(crate) fn weak_normal_form<C: Field>(
    mut h: Tracked<C>,
    divisors: &mut Vec<Tracked<C>>,
    order: MonomialOrder,
    steps: &mut usize,
    options: ReductionOptions,
    corner: Option<u32>,
) -> Result<Tracked<C>> {
    if let Some(d) = corner {
        h.poly.truncate_degree(d);
        h.refresh(order);
    }
    loop {
        let Some(lm) = h.lm.clone() else {
            return Ok(h);
        };
        let mut best: Option<usize> = None;
        for (i, d) in divisors.iter().enumerate() {
            let Some(dlm) = &d.lm else { continue };
            if dlm.divides(&lm) && best.is_none_or(|b| d.ecart < divisors[b].ecart) {
                best = Some(i);
            }
        }
        let Some(j) = best else {
            return Ok(h);
        };
        *steps += 1;
        if *steps > options.iteration_cap {
            return Err(Error::IterationCap { cap: options.iteration_cap });
        }
        if divisors[j].ecart > h.ecart {
            divisors.push(h.clone());
        }
        let d = &divisors[j];
        let dlm = d.lm.as_ref().expect("divisor has a leading monomial");
        let mono = dlm.quotient_of(&lm).expect("divisibility checked");
        let c = h.leading_coefficient(order) / d.leading_coefficient(order);
        h.subtract(&c, &mono, d);
        if let Some(d) = corner {
            h.poly.truncate_degree(d);
        }
        h.normalize();
        h.refresh(order);
    }
}

/// Result of a division in the local ring:
/// `unit * dividend = Σ cofactors_i * generator_i + remainder` with
/// `unit(0) != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisionResult<C> {
    pub unit: Polynomial<C>,
    pub cofactors: Vec<Polynomial<C>>,
    pub remainder: Polynomial<C>,
}

impl<C: Field> DivisionResult<C> {
    /// Re-expands the identity exactly.
    pub fn verify(&self, dividend: &Polynomial<C>, generators: &[Polynomial<C>]) -> bool {
        if self.cofactors.len() != generators.len() || self.unit.constant_term().is_zero() {
            return false;
        }
        let mut rhs = self.remainder.clone();
        for (q, g) in self.cofactors.iter().zip(generators) {
            rhs = &rhs + &(q * g);
        }
        &self.unit * dividend == rhs
    }
}

fn unit_normalize<C: Field>(mut r: DivisionResult<C>) -> DivisionResult<C> {
    let u0 = r.unit.constant_term();
    if !u0.is_one() {
        let s = C::one() / u0;
        r.unit = r.unit.scale(&s);
        r.remainder = r.remainder.scale(&s);
        for q in &mut r.cofactors {
            *q = q.scale(&s);
        }
    }
    r
}

fn finish<C: Field>(h: Tracked<C>) -> DivisionResult<C> {
    unit_normalize(DivisionResult {
        unit: h.dividend_coeff.expect("dividend tracked"),
        cofactors: h.rep.iter().map(|r| -r).collect(),
        remainder: h.poly,
    })
}

fn generator_trackers<C: Field>(gens: &IdealGens<C>) -> Vec<Tracked<C>> {
    let n = gens.len();
    let vars = gens.variables().clone();
    gens.generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let rep = (0..n)
                .map(|k| if k == i { Polynomial::one(vars.clone()) } else { Polynomial::zero(vars.clone()) })
                .collect();
            Tracked::new(g.clone(), Some(Polynomial::zero(vars.clone())), rep, gens.order())
        })
        .collect()
}

fn dividend_tracker<C: Field>(p: &Polynomial<C>, gens: &IdealGens<C>) -> Tracked<C> {
    let vars = gens.variables().clone();
    Tracked::new(p.clone(), Some(Polynomial::one(vars.clone())), vec![Polynomial::zero(vars); gens.len()], gens.order())
}

/// Weak normal form of `p` with respect to the generators as given (not a
/// standard basis), with unit and cofactors.
pub fn mora_normal_form<C: Field>(p: &Polynomial<C>, gens: &IdealGens<C>) -> Result<DivisionResult<C>> {
    mora_normal_form_with(p, gens, ReductionOptions::default())
}

pub fn mora_normal_form_with<C: Field>(
    p: &Polynomial<C>,
    gens: &IdealGens<C>,
    options: ReductionOptions,
) -> Result<DivisionResult<C>> {
    gens.require_local()?;
    if *p.variables() != *gens.variables() {
        return Err(Error::VariableMismatch);
    }
    let mut divisors = generator_trackers(gens);
    let mut steps = 0;
    let h = weak_normal_form(dividend_tracker(p, gens), &mut divisors, gens.order(), &mut steps, options, None)?;
    Ok(finish(h))
}

/// Certificate `unit * p = Σ cofactors_i * g_i` in the polynomial ring with
/// `unit(0) = 1`, so `p` lies in the ideal generated by `g` locally.
#[derive(Clone, Debug, PartialEq)]
pub struct Membership<C> {
    pub unit: Polynomial<C>,
    pub cofactors: Vec<Polynomial<C>>,
}

impl<C: Field> Membership<C> {
    pub fn verify(&self, p: &Polynomial<C>, generators: &[Polynomial<C>]) -> bool {
        DivisionResult {
            unit: self.unit.clone(),
            cofactors: self.cofactors.clone(),
            remainder: Polynomial::zero(p.variables().clone()),
        }
        .verify(p, generators)
    }
}

/// Decides local membership of `p` in the ideal and returns cofactors with
/// respect to the original generators. Computes a standard basis with lift
/// information first.
pub fn membership_with_cofactors<C: Field>(p: &Polynomial<C>, gens: &IdealGens<C>) -> Result<Membership<C>> {
    let sb = standard_basis_with(gens, ReductionOptions::default(), true)?;
    membership_in(p, &sb, ReductionOptions::default())
}

/// Membership test against a standard basis computed with lift data.
pub fn membership_in<C: Field>(
    p: &Polynomial<C>,
    sb: &StandardBasis<C>,
    options: ReductionOptions,
) -> Result<Membership<C>> {
    let gens = sb.ideal();
    if *p.variables() != *gens.variables() {
        return Err(Error::VariableMismatch);
    }
    let mut divisors =
        sb.trackers().ok_or_else(|| Error::Invalid("standard basis was computed without lift data".into()))?;
    let mut steps = 0;
    let h = weak_normal_form(dividend_tracker(p, gens), &mut divisors, gens.order(), &mut steps, options, None)?;
    if !h.poly.is_zero() {
        return Err(Error::NotMember);
    }
    let r = finish(h);
    let cert = Membership { unit: r.unit, cofactors: r.cofactors };
    if !cert.verify(p, gens.generators()) {
        return Err(Error::Invalid("membership certificate failed re-expansion".into()));
    }
    Ok(cert)
}
