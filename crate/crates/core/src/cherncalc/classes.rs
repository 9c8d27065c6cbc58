use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ring::{GradedElement, GradedRing, IntegerRing};
use crate::combinat::{binomial, combinations};
use crate::error::{Error, Result};

/// Chern classes `c_1, ..., c_top` of a (virtual) bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernVector<R> {
    ring: Arc<GradedRing>,
    classes: Vec<GradedElement<R>>,
}

impl<R: IntegerRing> ChernVector<R> {
    /// `classes[t - 1]` must be homogeneous of degree `t`.
    pub fn new(ring: &Arc<GradedRing>, classes: Vec<GradedElement<R>>) -> Result<Self> {
        for (i, c) in classes.iter().enumerate() {
            if c.ring() != ring {
                return Err(Error::Invalid("Chern classes from different rings".into()));
            }
            if !c.is_homogeneous_of(i as u32 + 1) {
                return Err(Error::DegreeMismatch { what: format!("c_{}", i + 1), expected: i as u32 + 1 });
            }
        }
        Ok(ChernVector { ring: ring.clone(), classes })
    }

    /// Classes `c_t = name_t` for `t = 1..=rank`, each a generator of `ring`.
    pub fn from_generators(ring: &Arc<GradedRing>, prefix: &str, rank: usize) -> Result<Self> {
        let classes =
            (1..=rank).map(|t| GradedElement::generator(ring, &format!("{prefix}{t}"))).collect::<Result<_>>()?;
        Self::new(ring, classes)
    }

    /// Reads the classes off a total class `1 + c_1 + c_2 + ...`.
    pub fn from_total(total: &GradedElement<R>, rank: usize) -> Result<Self> {
        if !total.constant_term().is_one() {
            return Err(Error::Invalid("total Chern class must have constant term 1".into()));
        }
        let classes = (1..=rank as u32).map(|t| total.homogeneous_part(t)).collect();
        Self::new(total.ring(), classes)
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    /// `c_t`, with `c_0 = 1` and `c_t = 0` above the rank.
    pub fn class(&self, t: usize) -> GradedElement<R> {
        match t {
            0 => GradedElement::one(&self.ring),
            t if t <= self.classes.len() => self.classes[t - 1].clone(),
            _ => GradedElement::zero(&self.ring),
        }
    }

    pub fn total(&self) -> GradedElement<R> {
        self.classes.iter().fold(GradedElement::one(&self.ring), |acc, c| &acc + c)
    }
}

/// Composition `(l_1, ..., l_i)` of its weight into positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::OutOfRange("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// All compositions of `j` into `i` positive parts, lexicographically.
pub fn compositions(j: u32, i: u32) -> Result<Vec<Composition>> {
    if i < 1 || i > j {
        return Err(Error::OutOfRange(format!("compositions of {j} into {i} parts need 1 <= i <= j")));
    }
    // Choose the i - 1 cut points among 1..j-1.
    let cuts = combinations(j as usize - 1, i as usize - 1);
    Ok(cuts
        .into_iter()
        .map(|c| {
            let mut parts = Vec::with_capacity(i as usize);
            let mut prev = 0u32;
            for x in c {
                let x = x as u32 + 1;
                parts.push(x - prev);
                prev = x;
            }
            parts.push(j - prev);
            Composition { parts }
        })
        .collect())
}

/// `c(E)^{-1}` truncated to degree `m`.
pub fn inverse_total_class<R: IntegerRing>(c: &ChernVector<R>, m: u32) -> GradedElement<R> {
    c.total().inverse_series(m).expect("total class has constant term 1")
}

/// `δ_t = c_t(TX - N)` by `δ_j = c_j(TX) - c_j(N) - Σ_{i<j} c_{j-i}(N) δ_i`.
pub fn chern_difference_recursion<R: IntegerRing>(
    ctx: &ChernVector<R>,
    cn: &ChernVector<R>,
    t: usize,
) -> GradedElement<R> {
    let mut deltas: Vec<GradedElement<R>> = vec![GradedElement::one(ctx.ring())];
    for j in 1..=t {
        let mut d = &ctx.class(j) - &cn.class(j);
        for (i, delta) in deltas.iter().enumerate().skip(1) {
            d = &d - &(&cn.class(j - i) * delta);
        }
        deltas.push(d);
    }
    deltas.swap_remove(t)
}

/// `c_t(TX - N) = c_t(TX) + Σ_{j=1}^{t} Σ_{i=1}^{j} Σ_{|L|=j} (-1)^i c_{t-j}(TX) c_L(N)`,
/// where `c_L(N) = c_{l_1}(N) ... c_{l_i}(N)`.
pub fn chern_difference_expansion<R: IntegerRing>(
    ctx: &ChernVector<R>,
    cn: &ChernVector<R>,
    t: usize,
) -> GradedElement<R> {
    let ring = ctx.ring();
    let mut acc = ctx.class(t);
    for j in 1..=t as u32 {
        let base = ctx.class(t - j as usize);
        if base.is_zero() {
            continue;
        }
        for i in 1..=j {
            let mut inner = GradedElement::zero(ring);
            for l in compositions(j, i).expect("1 <= i <= j") {
                let prod = l.parts().iter().fold(GradedElement::one(ring), |p, &part| &p * &cn.class(part as usize));
                inner = &inner + &prod;
            }
            let term = &base * &inner;
            acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
        }
    }
    acc
}

/// `e_l(ks)`, zero when `l > ks.len()`.
pub fn elementary_symmetric(l: usize, ks: &[i64]) -> BigInt {
    combinations(ks.len(), l).into_iter().map(|s| s.iter().map(|&i| BigInt::from(ks[i])).product::<BigInt>()).sum()
}

/// The integral over `P^m` of `c_r(N) Σ_{t=0}^{m-r} c_t(TX - N) c_1(TF*)^{m-r-t}`
/// with `N = ⊕ O(k_λ)`, `c(TX) = (1+h)^{m+1}` and `c_1(TF*) = (d-1) h`.
pub fn chern_integral_projective(m: usize, ks: &[i64], d: i64) -> Result<BigInt> {
    let r = ks.len();
    if r < 1 || r + 1 > m {
        return Err(Error::OutOfRange(format!("need 1 <= r <= m - 1, got r = {r}, m = {m}")));
    }
    let ring = GradedRing::new([("h", 1)], m as u32)?;
    let h: GradedElement<BigInt> = GradedElement::generator(&ring, "h")?;
    let one = GradedElement::one(&ring);
    let tx_total = (&one + &h).pow(m as u32 + 1);
    let n_total = ks.iter().fold(one.clone(), |acc, &k| &acc * &(&one + &h.scale(&BigInt::from(k))));
    let ctx = ChernVector::from_total(&tx_total, m)?;
    let cn = ChernVector::from_total(&n_total, r)?;
    let c1_dual = h.scale(&BigInt::from(d - 1));
    let mut sum = GradedElement::zero(&ring);
    for t in 0..=m - r {
        let delta = chern_difference_recursion(&ctx, &cn, t);
        sum = &sum + &(&delta * &c1_dual.pow((m - r - t) as u32));
    }
    let integrand = &cn.class(r) * &sum;
    Ok(integrand.coefficient(&[m as u32]))
}

/// `c_t(P^m) = C(m+1, t) h^t` read off directly, for cross-checks.
pub fn projective_tangent_class(m: usize, t: usize) -> BigInt {
    if t > m {
        BigInt::zero()
    } else {
        binomial(m as u64 + 1, t as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type G = GradedElement<BigInt>;

    fn abstract_data(m: u32) -> (Arc<GradedRing>, ChernVector<BigInt>, ChernVector<BigInt>) {
        let gens: Vec<(String, u32)> =
            (1..=m).map(|t| (format!("a{t}"), t)).chain((1..=m).map(|t| (format!("b{t}"), t))).collect();
        let ring = GradedRing::new(gens, m).unwrap();
        let tx = ChernVector::from_generators(&ring, "a", m as usize).unwrap();
        let n = ChernVector::from_generators(&ring, "b", m as usize).unwrap();
        (ring, tx, n)
    }

    #[test]
    fn compositions_examples() {
        let parts = |v: Vec<Composition>| v.into_iter().map(|c| c.parts).collect::<Vec<_>>();
        assert_eq!(parts(compositions(3, 2).unwrap()), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(parts(compositions(3, 3).unwrap()), vec![vec![1, 1, 1]]);
        // Brute force: vectors in [1, 5]^3 summing to 5.
        let brute: Vec<Vec<u32>> = (1..=5u32)
            .flat_map(|a| (1..=5u32).flat_map(move |b| (1..=5u32).map(move |c| vec![a, b, c])))
            .filter(|v| v.iter().sum::<u32>() == 5)
            .collect();
        assert_eq!(parts(compositions(5, 3).unwrap()), brute);
        assert!(compositions(2, 3).is_err());
        assert!(compositions(2, 0).is_err());
    }

    #[test]
    fn inverse_examples() {
        let ring = GradedRing::new([("c1", 1), ("c2", 2)], 3).unwrap();
        let c = ChernVector::<BigInt>::from_generators(&ring, "c", 1).unwrap();
        assert_eq!(inverse_total_class(&c, 3).to_string(), "1 - c1 + c1^2 - c1^3");
        let trivial = ChernVector::<BigInt>::new(&ring, vec![]).unwrap();
        assert_eq!(inverse_total_class(&trivial, 3), G::one(&ring));
        let c = ChernVector::<BigInt>::from_generators(&ring, "c", 2).unwrap();
        let inv = inverse_total_class(&c, 2);
        assert_eq!(inv.to_string(), "1 - c1 + c1^2 - c2");
        assert_eq!((&c.total() * &inv).truncate(2), G::one(&ring));
    }

    #[test]
    fn low_degree_differences() {
        let (ring, tx, n) = abstract_data(3);
        let g = |s: &str| G::generator(&ring, s).unwrap();
        assert_eq!(chern_difference_recursion(&tx, &n, 1), &g("a1") - &g("b1"));
        assert_eq!(chern_difference_expansion(&tx, &n, 1), &g("a1") - &g("b1"));
        let expected = &(&(&g("a2") - &(&g("b1") * &g("a1"))) + &(&g("b1") * &g("b1"))) - &g("b2");
        assert_eq!(chern_difference_recursion(&tx, &n, 2), expected);
        assert_eq!(chern_difference_expansion(&tx, &n, 2), expected);
        let empty = ChernVector::new(&ring, vec![]).unwrap();
        assert_eq!(chern_difference_recursion(&tx, &empty, 3), g("a3"));
    }

    #[test]
    fn triple_agreement_symbolic() {
        for m in 1..=6 {
            let (_, tx, n) = abstract_data(m);
            let product = &tx.total() * &inverse_total_class(&n, m);
            for t in 0..=m as usize {
                let rec = chern_difference_recursion(&tx, &n, t);
                assert!(rec.is_homogeneous_of(t as u32));
                assert_eq!(rec, chern_difference_expansion(&tx, &n, t), "m = {m}, t = {t}");
                assert_eq!(rec, product.homogeneous_part(t as u32), "m = {m}, t = {t}");
            }
        }
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(elementary_symmetric(1, &[3, 2]), BigInt::from(5));
        assert_eq!(elementary_symmetric(2, &[3, 2]), BigInt::from(6));
        assert_eq!(elementary_symmetric(2, &[1, 1, 1]), BigInt::from(3));
        assert_eq!(elementary_symmetric(3, &[2, 3, 5, 7]), BigInt::from(247));
        assert_eq!(elementary_symmetric(0, &[2, 3]), BigInt::from(1));
        assert_eq!(elementary_symmetric(3, &[2, 3]), BigInt::from(0));
    }

    #[test]
    fn integral_examples() {
        assert_eq!(chern_integral_projective(3, &[3, 2], 1).unwrap(), BigInt::from(-6));
        for d in 0..6 {
            assert_eq!(chern_integral_projective(2, &[d + 2], d).unwrap(), BigInt::from(0));
        }
        assert!(chern_integral_projective(3, &[1, 1, 1], 1).is_err());
        assert!(chern_integral_projective(3, &[], 1).is_err());
    }

    #[test]
    fn tangent_class_from_ring() {
        let ring = GradedRing::new([("h", 1)], 5).unwrap();
        let h: G = G::generator(&ring, "h").unwrap();
        let total = (&G::one(&ring) + &h).pow(6);
        for t in 0..=5 {
            assert_eq!(total.coefficient(&[t as u32]), projective_tangent_class(5, t));
        }
    }

    #[test]
    fn random_specializations_agree() {
        // Random integer Chern data built from monomials in the generators.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m: u32 = rng.gen_range(1..=6);
            let ring = GradedRing::new([("x", 1), ("y", 2), ("z", 3)], m).unwrap();
            let mut random_vector = |rank: u32| {
                let classes = (1..=rank)
                    .map(|t| {
                        G::from_terms(
                            &ring,
                            ring.monomials_of_degree(t).into_iter().map(|e| (e, BigInt::from(rng.gen_range(-4..=4)))),
                        )
                    })
                    .collect();
                ChernVector::new(&ring, classes).unwrap()
            };
            let tx = random_vector(m);
            let n = random_vector(m.min(3));
            let product = &tx.total() * &inverse_total_class(&n, m);
            for t in 0..=m as usize {
                let rec = chern_difference_recursion(&tx, &n, t);
                assert_eq!(rec, chern_difference_expansion(&tx, &n, t));
                assert_eq!(rec, product.homogeneous_part(t as u32));
            }
        }
    }

    proptest! {
        #[test]
        fn inverse_is_involutive(coeffs in proptest::collection::vec(-5i64..=5, 1..5)) {
            let m = coeffs.len() as u32;
            let ring = GradedRing::new([("h", 1)], m).unwrap();
            let h: G = G::generator(&ring, "h").unwrap();
            let total = coeffs.iter().enumerate().fold(G::one(&ring), |acc, (i, &c)| &acc + &h.pow(i as u32 + 1).scale(&BigInt::from(c)));
            let inv = total.inverse_series(m).unwrap();
            prop_assert_eq!(&total * &inv, G::one(&ring));
            prop_assert_eq!(inv.inverse_series(m).unwrap(), total);
        }
    }

    #[test]
    fn rejects_bad_classes() {
        let ring = GradedRing::new([("c1", 1), ("c2", 2)], 3).unwrap();
        let c2 = G::generator(&ring, "c2").unwrap();
        assert!(matches!(ChernVector::new(&ring, vec![c2]), Err(Error::DegreeMismatch { .. })));
        let two = G::constant(&ring, BigInt::from(2));
        assert!(ChernVector::from_total(&two, 1).is_err());
    }
}
