use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Coefficient ring for characteristic-class computations: the integers,
/// in any representation.
pub trait IntegerRing: Integer + Signed + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T: Integer + Signed + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static> IntegerRing for T {}

/// Polynomial ring over named graded symbols, truncated above a total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRing {
    names: Vec<String>,
    degrees: Vec<u32>,
    truncation: u32,
}

impl GradedRing {
    pub fn new<S: Into<String>>(generators: impl IntoIterator<Item = (S, u32)>, truncation: u32) -> Result<Arc<Self>> {
        let (names, degrees): (Vec<String>, Vec<u32>) = generators.into_iter().map(|(n, d)| (n.into(), d)).unzip();
        if degrees.contains(&0) {
            return Err(Error::OutOfRange("generator degrees must be positive".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate generator name `{n}`")));
            }
        }
        Ok(Arc::new(GradedRing { names, degrees, truncation }))
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn weight(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.degrees).map(|(e, d)| e * d).sum()
    }

    /// All exponent vectors of weighted degree exactly `degree`.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Vec<u32>> {
        fn go(i: usize, left: u32, degs: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == degs.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for e in 0..=left / degs[i] {
                cur.push(e);
                go(i + 1, left - e * degs[i], degs, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, degree, &self.degrees, &mut Vec::new(), &mut out);
        out
    }
}

/// Element of a truncated graded ring with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement<R> {
    ring: Arc<GradedRing>,
    terms: BTreeMap<Vec<u32>, R>,
}

impl<R: IntegerRing> GradedElement<R> {
    pub fn zero(ring: &Arc<GradedRing>) -> Self {
        GradedElement { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<GradedRing>, c: R) -> Self {
        Self::from_terms(ring, [(vec![0; ring.names.len()], c)])
    }

    pub fn one(ring: &Arc<GradedRing>) -> Self {
        Self::constant(ring, R::one())
    }

    pub fn generator(ring: &Arc<GradedRing>, name: &str) -> Result<Self> {
        let i = ring.index_of(name).ok_or_else(|| Error::Invalid(format!("unknown generator `{name}`")))?;
        let mut e = vec![0; ring.names.len()];
        e[i] = 1;
        Ok(Self::from_terms(ring, [(e, R::one())]))
    }

    /// Terms above the truncation degree and zero coefficients are dropped.
    pub fn from_terms(ring: &Arc<GradedRing>, terms: impl IntoIterator<Item = (Vec<u32>, R)>) -> Self {
        let mut out = Self::zero(ring);
        for (e, c) in terms {
            assert_eq!(e.len(), ring.names.len(), "exponent vector length");
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: Vec<u32>, c: R) {
        if c.is_zero() || self.ring.weight(&e) > self.ring.truncation {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &R)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> R {
        self.terms.get(exps).cloned().unwrap_or_else(R::zero)
    }

    pub fn constant_term(&self) -> R {
        self.coefficient(&vec![0; self.ring.names.len()])
    }

    /// Degree-`t` component.
    pub fn homogeneous_part(&self, t: u32) -> Self {
        GradedElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.ring.weight(e) == t)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// True if every term has degree `t` (the zero element qualifies).
    pub fn is_homogeneous_of(&self, t: u32) -> bool {
        self.terms.keys().all(|e| self.ring.weight(e) == t)
    }

    /// Drops every term of degree above `degree`.
    pub fn truncate(&self, degree: u32) -> Self {
        GradedElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.ring.weight(e) <= degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(&self.ring, self.terms.iter().map(|(e, k)| (e.clone(), k.clone() * c.clone())))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(&self.ring), |acc, _| &acc * self)
    }

    /// Inverse up to degree `degree` of an element with constant term ±1,
    /// by the geometric series `u^{-1} = Σ (1 - u)^k`.
    pub fn inverse_series(&self, degree: u32) -> Result<Self> {
        let c0 = self.constant_term();
        if !(c0.is_one() || (-c0.clone()).is_one()) {
            return Err(Error::Invalid("constant term is not a unit of the integers".into()));
        }
        // u = c0 (1 + x) with x of positive degree; u^{-1} = c0 Σ (-x)^k.
        let one = Self::one(&self.ring);
        let x = &self.scale(&c0) - &one;
        let neg_x = -&x;
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..degree {
            power = (&power * &neg_x).truncate(degree);
            acc = &acc + &power;
        }
        Ok(acc.truncate(degree).scale(&c0))
    }

    fn same_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "graded elements from different rings"
        );
    }
}

impl<R: IntegerRing> Add for &GradedElement<R> {
    type Output = GradedElement<R>;
    fn add(self, other: &GradedElement<R>) -> GradedElement<R> {
        self.same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<R: IntegerRing> Neg for &GradedElement<R> {
    type Output = GradedElement<R>;
    fn neg(self) -> GradedElement<R> {
        GradedElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl<R: IntegerRing> Sub for &GradedElement<R> {
    type Output = GradedElement<R>;
    fn sub(self, other: &GradedElement<R>) -> GradedElement<R> {
        self + &(-other)
    }
}

impl<R: IntegerRing> Mul for &GradedElement<R> {
    type Output = GradedElement<R>;
    fn mul(self, other: &GradedElement<R>) -> GradedElement<R> {
        self.same_ring(other);
        let mut out = GradedElement::zero(&self.ring);
        for (a, x) in &self.terms {
            let wa = self.ring.weight(a);
            for (b, y) in &other.terms {
                if wa + self.ring.weight(b) > self.ring.truncation {
                    continue;
                }
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<R: IntegerRing> fmt::Display for GradedElement<R> {
    /// Terms by increasing degree, e.g. `1 - c1 + c1^2 - c2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| self.ring.weight(a).cmp(&self.ring.weight(b)).then_with(|| b.cmp(a)));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = e
                .iter()
                .zip(&self.ring.names)
                .filter(|(p, _)| **p > 0)
                .map(|(p, n)| if *p == 1 { n.clone() } else { format!("{n}^{p}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type G = GradedElement<BigInt>;

    fn ring() -> Arc<GradedRing> {
        GradedRing::new([("c1", 1), ("c2", 2)], 3).unwrap()
    }

    #[test]
    fn truncating_product() {
        let r = ring();
        let c1 = G::generator(&r, "c1").unwrap();
        let c2 = G::generator(&r, "c2").unwrap();
        assert!((&c2 * &c2).is_zero());
        assert_eq!((&c1 * &c2).to_string(), "c1*c2");
        assert!(c1.pow(4).is_zero());
        assert_eq!(c1.pow(3).to_string(), "c1^3");
    }

    #[test]
    fn geometric_series() {
        let r = GradedRing::new([("c1", 1)], 3).unwrap();
        let u = &G::one(&r) + &G::generator(&r, "c1").unwrap();
        assert_eq!(u.inverse_series(3).unwrap().to_string(), "1 - c1 + c1^2 - c1^3");
        let neg = -&u;
        assert_eq!((&neg * &neg.inverse_series(3).unwrap()), G::one(&r));
    }

    #[test]
    fn non_unit_rejected() {
        let r = ring();
        assert!(G::constant(&r, BigInt::from(2)).inverse_series(2).is_err());
    }

    #[test]
    fn ring_validation() {
        assert!(GradedRing::new([("a", 0)], 2).is_err());
        assert!(GradedRing::new([("a", 1), ("a", 2)], 2).is_err());
        assert!(G::generator(&ring(), "c9").is_err());
    }

    #[test]
    fn monomials_by_weight() {
        // c1^3, c1 c2.
        assert_eq!(ring().monomials_of_degree(3).len(), 2);
        assert_eq!(ring().monomials_of_degree(0), vec![vec![0, 0]]);
    }

    #[test]
    fn display_format() {
        let r = ring();
        let c1 = G::generator(&r, "c1").unwrap();
        let e = &(&c1.scale(&BigInt::from(-3)) + &G::one(&r)) - &G::generator(&r, "c2").unwrap();
        assert_eq!(e.to_string(), "1 - 3*c1 - c2");
        assert_eq!(G::zero(&r).to_string(), "0");
    }
}
