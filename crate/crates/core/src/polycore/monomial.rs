use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `x_1^{e_1} ... x_m^{e_m}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exponents(exponents: impl Into<Vec<u32>>) -> Self {
        Monomial(exponents.into().into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial(other.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power `x_i^a` with `a > 0`, returns `(i, a)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Monomial orderings used by the library.
///
/// `LocalAntiDegRevLex` is the negative degree reverse lexicographic order
/// (`ds` in Singular's naming): lower total degree is larger, so `1` is the
/// largest monomial and leading terms are the lowest-order part of a germ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    GlobalDegRevLex,
    LocalAntiDegRevLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        let by_degree = a.degree().cmp(&b.degree());
        let by_degree = match self {
            MonomialOrder::GlobalDegRevLex => by_degree,
            MonomialOrder::LocalAntiDegRevLex => by_degree.reverse(),
        };
        by_degree.then_with(|| revlex(a, b))
    }

    pub fn is_local(self) -> bool {
        matches!(self, MonomialOrder::LocalAntiDegRevLex)
    }
}

// a > b iff the last nonzero entry of a - b is negative.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.0.iter().zip(b.0.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn degrevlex_ties() {
        let order = MonomialOrder::GlobalDegRevLex;
        // x1 > x2 > x3 in revlex, x1*x3 < x2^2
        assert_eq!(order.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(order.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(order.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn local_order_prefers_low_degree() {
        let order = MonomialOrder::LocalAntiDegRevLex;
        assert_eq!(order.cmp(&m(&[1, 0, 0]), &m(&[0, 3, 0])), Ordering::Greater);
        assert_eq!(order.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Less);
        assert_eq!(order.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn pure_power_detection() {
        assert_eq!(m(&[0, 3, 0]).as_pure_power(), Some((1, 3)));
        assert_eq!(m(&[1, 1, 0]).as_pure_power(), None);
        assert_eq!(m(&[0, 0, 0]).as_pure_power(), None);
    }

    proptest! {
        #[test]
        fn one_is_extreme(e in proptest::collection::vec(0u32..5, 3)) {
            let u = m(&e);
            prop_assume!(!u.is_one());
            let one = Monomial::one(3);
            prop_assert_eq!(MonomialOrder::LocalAntiDegRevLex.cmp(&one, &u), Ordering::Greater);
            prop_assert_eq!(MonomialOrder::GlobalDegRevLex.cmp(&u, &one), Ordering::Greater);
        }

        #[test]
        fn orders_are_multiplicative(
            a in proptest::collection::vec(0u32..4, 3),
            b in proptest::collection::vec(0u32..4, 3),
            c in proptest::collection::vec(0u32..4, 3),
        ) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            for order in [MonomialOrder::GlobalDegRevLex, MonomialOrder::LocalAntiDegRevLex] {
                prop_assert_eq!(order.cmp(&a, &b), order.cmp(&a.mul(&c), &b.mul(&c)));
            }
        }
    }
}
