use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Shared, ordered list of variable names. Position, not name, identifies a
/// variable.
pub type Variables = Arc<[String]>;

pub fn variables<S: AsRef<str>>(names: &[S]) -> Variables {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

/// `prefix1, ..., prefixN` (one-based, matching the usual affine chart
/// coordinate names).
pub fn numbered_variables(prefix: &str, count: usize) -> Variables {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

/// Sparse multivariate polynomial with exact coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<C> {
    vars: Variables,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Field> Polynomial<C> {
    pub fn zero(vars: Variables) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Variables, c: C) -> Self {
        let n = vars.len();
        Self::monomial(vars, Monomial::one(n), c)
    }

    pub fn one(vars: Variables) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn var(vars: Variables, index: usize) -> Self {
        let n = vars.len();
        Self::monomial(vars, Monomial::var(n, index), C::one())
    }

    pub fn monomial(vars: Variables, mono: Monomial, c: C) -> Self {
        assert_eq!(mono.nvars(), vars.len(), "monomial arity differs from variable count");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Polynomial { vars, terms }
    }

    pub fn from_terms(vars: Variables, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn variables(&self) -> &Variables {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> C {
        self.terms.get(mono).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one(self.nvars()))
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Maximal total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Minimal total degree of a term (order of vanishing at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Homogeneous part of total degree `degree`.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `Some(d)` if every term has total degree `d`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.total_degree()?;
        self.terms.keys().all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    /// Drops every term of total degree `degree` or more.
    pub fn truncate_degree(&mut self, degree: u32) {
        self.terms.retain(|m, _| m.degree() < degree);
    }

    pub fn add_term(&mut self, mono: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self -= c * mono * other`.
    pub fn sub_scaled_shifted(&mut self, c: &C, mono: &Monomial, other: &Self) {
        debug_assert_eq!(self.vars, other.vars);
        for (m, oc) in &other.terms {
            self.add_term(m.mul(mono), -(c.clone() * oc.clone()));
        }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.mul(mono), x.clone() * c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::one(self.nvars()), c)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.vars.clone());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn check_same_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_vars(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_vars(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_vars(other)?;
        Ok(self * other)
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Self> {
        if index >= self.nvars() {
            return Err(Error::IndexOutOfRange { index, count: self.nvars() });
        }
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::from_exponents(exps), c.clone() * C::from_i64(i64::from(e)));
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[C]) -> Result<C> {
        if point.len() != self.nvars() {
            return Err(Error::LengthMismatch { expected: self.nvars(), found: point.len() });
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// `p(x + point)`: moves `point` to the origin.
    pub fn translate(&self, point: &[C]) -> Result<Self> {
        if point.len() != self.nvars() {
            return Err(Error::LengthMismatch { expected: self.nvars(), found: point.len() });
        }
        let n = self.nvars();
        let shifted: Vec<Self> = (0..n)
            .map(|i| &Self::var(self.vars.clone(), i) + &Self::constant(self.vars.clone(), point[i].clone()))
            .collect();
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.vars.clone(), c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &shifted[i].pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitutes `value` for variable `index` and removes that variable,
    /// renaming the remaining ones to `new_vars`.
    pub fn specialize(&self, index: usize, value: &C, new_vars: Variables) -> Result<Self> {
        if index >= self.nvars() {
            return Err(Error::IndexOutOfRange { index, count: self.nvars() });
        }
        if new_vars.len() + 1 != self.nvars() {
            return Err(Error::LengthMismatch { expected: self.nvars() - 1, found: new_vars.len() });
        }
        let mut out = Self::zero(new_vars);
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            let e = exps.remove(index);
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff = coeff * value.clone();
            }
            out.add_term(Monomial::from_exponents(exps), coeff);
        }
        Ok(out)
    }

    /// Same polynomial over a renamed variable list of equal length.
    pub fn with_variables(&self, vars: Variables) -> Result<Self> {
        if vars.len() != self.nvars() {
            return Err(Error::LengthMismatch { expected: self.nvars(), found: vars.len() });
        }
        Ok(Polynomial { vars, terms: self.terms.clone() })
    }

    /// Multiplies by the field's primitive factor so the coefficients become
    /// coprime integers with positive leading coefficient (in the internal
    /// term order). Returns the factor used.
    pub fn make_primitive(&mut self) -> C {
        let s = C::primitive_factor(self.terms.values());
        if !s.is_one() {
            for c in self.terms.values_mut() {
                *c = c.clone() * s.clone();
            }
        }
        s
    }
}

impl<'a, C: Field> Add<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;

    /// Panics if the variable lists differ; use `try_add` for a checked sum.
    fn add(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
        assert_eq!(self.vars, rhs.vars, "polynomials over different variables");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Field> Sub<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
        assert_eq!(self.vars, rhs.vars, "polynomials over different variables");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Field> Mul<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
        assert_eq!(self.vars, rhs.vars, "polynomials over different variables");
        let mut out = Polynomial::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        Polynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}
