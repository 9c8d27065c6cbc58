//! Standard bases for local orders (tangent cone algorithm).

use super::ideal::{IdealGens, ReductionOptions};
use super::mora::{weak_normal_form, Tracked};
use crate::error::Result;
use crate::polycore::{Monomial, Polynomial};
use crate::scalar::Field;

/// A standard basis of `ideal` with respect to its order. When computed
/// with lift data, `lift()[k][i]` is the coefficient of generator `i` in
/// basis element `k` (a polynomial combination, no units needed).
#[derive(Clone, Debug)]
pub struct StandardBasis<C> {
    ideal: IdealGens<C>,
    elements: Vec<Polynomial<C>>,
    leading_monomials: Vec<Monomial>,
    lift: Option<Vec<Vec<Polynomial<C>>>>,
}

impl<C: Field> StandardBasis<C> {
    pub fn ideal(&self) -> &IdealGens<C> {
        &self.ideal
    }

    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading_monomials
    }

    pub fn lift(&self) -> Option<&[Vec<Polynomial<C>>]> {
        self.lift.as_deref()
    }

    /// Leading monomials with redundant (divisible) entries removed.
    pub fn minimal_leading_monomials(&self) -> Vec<Monomial> {
        minimize(&self.leading_monomials)
    }

    /// True if the ideal is the whole local ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading_monomials.iter().any(Monomial::is_one)
    }

    pub(crate) fn trackers(&self) -> Option<Vec<Tracked<C>>> {
        let lift = self.lift.as_ref()?;
        let vars = self.ideal.variables().clone();
        Some(
            self.elements
                .iter()
                .zip(lift)
                .map(|(e, rep)| {
                    Tracked::new(e.clone(), Some(Polynomial::zero(vars.clone())), rep.clone(), self.ideal.order())
                })
                .collect(),
        )
    }
}

pub fn minimize(monomials: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = monomials.to_vec();
    sorted.sort_by_key(Monomial::degree);
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

/// Standard basis with the default iteration cap and no lift data.
pub fn standard_basis<C: Field>(gens: &IdealGens<C>) -> Result<StandardBasis<C>> {
    standard_basis_with(gens, ReductionOptions::default(), false)
}

/// Buchberger-style completion: S-pairs are reduced by Mora's weak normal
/// form against the current basis; pairs with coprime leading monomials are
/// skipped (product criterion). Pairs are processed by increasing degree of
/// their lcm. With a global degree order this is Buchberger's algorithm.
///
/// Without lift data and for a local order, once the leading monomials
/// contain a pure power of every variable the computation continues modulo
/// `m^D` for the corresponding corner degree `D` (which lies in the ideal);
/// the returned elements are then truncated below `D`.
pub fn standard_basis_with<C: Field>(
    gens: &IdealGens<C>,
    options: ReductionOptions,
    with_lift: bool,
) -> Result<StandardBasis<C>> {
    let order = gens.order();
    let vars = gens.variables().clone();
    let n = gens.len();
    let use_corner = order.is_local() && !with_lift;

    let mut basis: Vec<Tracked<C>> = gens
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let (dividend, rep) = if with_lift {
                let rep = (0..n)
                    .map(|k| if k == i { Polynomial::one(vars.clone()) } else { Polynomial::zero(vars.clone()) })
                    .collect();
                (Some(Polynomial::zero(vars.clone())), rep)
            } else {
                (None, Vec::new())
            };
            let mut t = Tracked::new(g.clone(), dividend, rep, order);
            normalize_element(&mut t, order);
            t
        })
        .collect();

    let mut corner = None;
    if use_corner {
        update_corner(&mut corner, &mut basis, order);
    }
    let mut steps = 0usize;
    if !basis.iter().any(|t| t.lm.as_ref().is_some_and(Monomial::is_one)) {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        while let Some(k) = select_pair(&pairs, &basis) {
            let (i, j) = pairs.swap_remove(k);
            let (Some(lm_i), Some(lm_j)) = (basis[i].lm.clone(), basis[j].lm.clone()) else {
                continue;
            };
            if lm_i.is_coprime(&lm_j) {
                continue;
            }
            let s = s_polynomial(&basis[i], &basis[j], &lm_i, &lm_j, order);
            let mut divisors: Vec<Tracked<C>> = basis.iter().filter(|t| t.lm.is_some()).cloned().collect();
            let mut h = weak_normal_form(s, &mut divisors, order, &mut steps, options, corner)?;
            if h.poly.is_zero() {
                continue;
            }
            normalize_element(&mut h, order);
            let unit = h.lm.as_ref().is_some_and(Monomial::is_one);
            let new = basis.len();
            basis.push(h);
            if unit {
                break;
            }
            for i in 0..new {
                pairs.push((i, new));
            }
            if use_corner {
                update_corner(&mut corner, &mut basis, order);
            }
        }
    }

    basis.retain(|t| t.lm.is_some());
    let elements: Vec<_> = basis.iter().map(|t| t.poly.clone()).collect();
    let leading_monomials = basis.iter().map(|t| t.lm.clone().expect("nonzero basis element")).collect();
    let lift = with_lift.then(|| basis.into_iter().map(|t| t.rep).collect());
    Ok(StandardBasis { ideal: gens.clone(), elements, leading_monomials, lift })
}

/// A degree `D` such that `m^D` lies in the ideal and every leading
/// monomial of a pure power survives truncation below `D`: one more than
/// the degree from which all monomials are divisible by the pure powers.
fn corner_degree<C>(basis: &[Tracked<C>]) -> Option<u32> {
    let nvars = basis.iter().find_map(|t| t.lm.as_ref().map(Monomial::nvars))?;
    let mut pure = vec![None::<u32>; nvars];
    for lm in basis.iter().filter_map(|t| t.lm.as_ref()) {
        if let Some((i, a)) = lm.as_pure_power() {
            pure[i] = Some(pure[i].map_or(a, |b| b.min(a)));
        }
    }
    pure.into_iter().try_fold(2u32, |acc, a| a.map(|a| acc + a - 1))
}

fn update_corner<C: Field>(corner: &mut Option<u32>, basis: &mut [Tracked<C>], order: crate::polycore::MonomialOrder) {
    let Some(d) = corner_degree(basis) else { return };
    if corner.is_some_and(|c| c <= d) {
        return;
    }
    *corner = Some(d);
    for t in basis.iter_mut() {
        t.poly.truncate_degree(d);
        t.refresh(order);
    }
}

fn select_pair<C: Field>(pairs: &[(usize, usize)], basis: &[Tracked<C>]) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by_key(|(_, &(i, j))| match (&basis[i].lm, &basis[j].lm) {
            (Some(a), Some(b)) => (a.lcm(b).degree(), i, j),
            _ => (0, i, j),
        })
        .map(|(k, _)| k)
}

fn s_polynomial<C: Field>(
    a: &Tracked<C>,
    b: &Tracked<C>,
    lm_a: &Monomial,
    lm_b: &Monomial,
    order: crate::polycore::MonomialOrder,
) -> Tracked<C> {
    let l = lm_a.lcm(lm_b);
    let ma = lm_a.quotient_of(&l).unwrap();
    let mb = lm_b.quotient_of(&l).unwrap();
    let ca = C::one() / a.poly.leading_term(order).unwrap().1.clone();
    let cb = C::one() / b.poly.leading_term(order).unwrap().1.clone();
    let combine = |x: &Polynomial<C>, y: &Polynomial<C>| &x.mul_term(&ma, &ca) - &y.mul_term(&mb, &cb);
    let poly = combine(&a.poly, &b.poly);
    let dividend = match (&a.dividend_coeff, &b.dividend_coeff) {
        (Some(x), Some(y)) => Some(combine(x, y)),
        _ => None,
    };
    let rep = a.rep.iter().zip(&b.rep).map(|(x, y)| combine(x, y)).collect();
    Tracked::new(poly, dividend, rep, order)
}

fn normalize_element<C: Field>(t: &mut Tracked<C>, order: crate::polycore::MonomialOrder) {
    let s = t.poly.make_primitive();
    for r in &mut t.rep {
        *r = r.scale(&s);
    }
    t.refresh(order);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_polynomial, variables, MonomialOrder, Variables};
    use num_rational::BigRational;
    use num_traits::Zero;

    type P = Polynomial<BigRational>;

    fn ideal(v: &Variables, gens: &[&str]) -> IdealGens<BigRational> {
        IdealGens::local(gens.iter().map(|g| parse_polynomial::<BigRational>(g, v).unwrap())).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    fn xyz() -> Variables {
        variables(&["x1", "x2", "x3"])
    }

    #[test]
    fn maximal_ideal() {
        let sb = standard_basis(&ideal(&xyz(), &["x1", "x2", "x3"])).unwrap();
        assert_eq!(sb.elements().len(), 3);
        assert_eq!(sb.minimal_leading_monomials(), vec![mono(&[0, 0, 1]), mono(&[0, 1, 0]), mono(&[1, 0, 0])]);
    }

    #[test]
    fn example_vector_field_ideal_is_maximal() {
        let sb = standard_basis(&ideal(&xyz(), &["6*x1", "2*x2", "3*x3", "x1 - x2^3", "x3^2 - x1"])).unwrap();
        let lms = sb.minimal_leading_monomials();
        for i in 0..3 {
            assert!(lms.contains(&Monomial::var(3, i)));
        }
    }

    #[test]
    fn reduction_chain_leading_ideal() {
        let sb = standard_basis(&ideal(&xyz(), &["x2^2", "x3", "x1 - x2^3"])).unwrap();
        assert_eq!(sb.minimal_leading_monomials(), vec![mono(&[0, 0, 1]), mono(&[0, 2, 0]), mono(&[1, 0, 0])]);
    }

    #[test]
    fn lift_reexpands() {
        let v = xyz();
        let gens = ideal(&v, &["x1 - x2^3", "x3^2 - x1", "x1*x3 + x2^4"]);
        let sb = standard_basis_with(&gens, ReductionOptions::default(), true).unwrap();
        let lift = sb.lift().unwrap();
        for (e, rep) in sb.elements().iter().zip(lift) {
            let mut acc = P::zero(v.clone());
            for (q, g) in rep.iter().zip(gens.generators()) {
                acc = &acc + &(q * g);
            }
            assert_eq!(&acc, e);
        }
    }

    #[test]
    fn s_pairs_reduce_to_zero() {
        let v = xyz();
        let gens = ideal(&v, &["x1^2 - x2^3 + x3^5", "x2*x3 - x1^3", "x3^2 + x1*x2"]);
        let sb = standard_basis(&gens).unwrap();
        let order = MonomialOrder::LocalAntiDegRevLex;
        let basis_ideal = IdealGens::local(sb.elements().to_vec()).unwrap();
        let els = sb.elements();
        for j in 0..els.len() {
            for i in 0..j {
                let (li, ci) = els[i].leading_term(order).unwrap();
                let (lj, cj) = els[j].leading_term(order).unwrap();
                let l = li.lcm(lj);
                let s = &els[i]
                    .mul_term(&li.quotient_of(&l).unwrap(), &(BigRational::from_integer(1.into()) / ci.clone()))
                    - &els[j]
                        .mul_term(&lj.quotient_of(&l).unwrap(), &(BigRational::from_integer(1.into()) / cj.clone()));
                let r = super::super::mora::mora_normal_form(&s, &basis_ideal).unwrap();
                assert!(r.remainder.is_zero(), "S({i},{j}) has nonzero normal form");
            }
        }
        assert!(!sb.is_unit_ideal());
        let _ = BigRational::zero();
    }

    #[test]
    fn unit_ideal_detected() {
        let v = variables(&["x", "y"]);
        let sb = standard_basis(&ideal(&v, &["x + y^2", "x - 1"])).unwrap();
        assert!(sb.is_unit_ideal());
    }
}
