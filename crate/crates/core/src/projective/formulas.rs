use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cherncalc::{compositions, elementary_symmetric};
use crate::combinat::binomial;
use crate::error::{Error, Result};

fn check_degrees(m: usize, ks: &[i64], d: i64) -> Result<()> {
    let r = ks.len();
    if r < 1 || r + 1 > m {
        return Err(Error::OutOfRange(format!("need 1 <= r <= m - 1, got r = {r}, m = {m}")));
    }
    if let Some(k) = ks.iter().find(|&&k| k < 1) {
        return Err(Error::OutOfRange(format!("degree {k} of an equation must be positive")));
    }
    if d < 0 {
        return Err(Error::OutOfRange(format!("foliation degree {d} must be non-negative")));
    }
    Ok(())
}

fn check_curve(m: usize, ks: &[i64]) -> Result<()> {
    if ks.len() + 1 != m {
        return Err(Error::OutOfRange(format!(
            "expected m - 1 = {} degrees for a curve, got {}",
            m.saturating_sub(1),
            ks.len()
        )));
    }
    Ok(())
}

/// Total GSV index of a degree-`d` foliation on `P^m` along an invariant
/// complete intersection of multidegree `ks`:
/// `∏k · Σ_{t=0}^{m-r} (C(m+1,t) + Σ_j Σ_i Σ_{|L|=j} (-1)^i C(m+1,t-j) ∏ e_{l}(k)) (d-1)^{m-r-t}`.
pub fn closed_form_gsv(m: usize, ks: &[i64], d: i64) -> Result<BigInt> {
    check_degrees(m, ks, d)?;
    let r = ks.len();
    let e: Vec<BigInt> = (0..=m).map(|l| elementary_symmetric(l, ks)).collect();
    let n = m as u64 + 1;
    let dm1 = BigInt::from(d - 1);
    let mut sum = BigInt::zero();
    for t in 0..=(m - r) as u32 {
        let mut coeff = binomial(n, t as u64);
        for j in 1..=t {
            let c = binomial(n, (t - j) as u64);
            for i in 1..=j {
                let mut inner = BigInt::zero();
                for l in compositions(j, i)? {
                    inner += l.parts().iter().map(|&p| e[p as usize].clone()).product::<BigInt>();
                }
                let term = &c * inner;
                if i % 2 == 0 {
                    coeff += term;
                } else {
                    coeff -= term;
                }
            }
        }
        sum += coeff * num_traits::pow(dm1.clone(), m - r - t as usize);
    }
    Ok(&e[r] * sum)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareReport {
    pub gsv: BigInt,
    /// `k_1 + ... + k_{m-1} <= d + m`.
    pub inequality_holds: bool,
    /// The inequality holds exactly when `gsv >= 0`.
    pub equivalence_ok: bool,
}

pub fn poincare_sign_check(m: usize, ks: &[i64], d: i64) -> Result<PoincareReport> {
    check_degrees(m, ks, d)?;
    check_curve(m, ks)?;
    let gsv = closed_form_gsv(m, ks, d)?;
    let inequality_holds = ks.iter().sum::<i64>() <= d + m as i64;
    let equivalence_ok = inequality_holds == !gsv.is_negative();
    Ok(PoincareReport { gsv, inequality_holds, equivalence_ok })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBoundReport {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

fn milnor_defect(milnor: &[u64]) -> Result<BigInt> {
    if milnor.contains(&0) {
        return Err(Error::OutOfRange("a singular point of the curve has Milnor number >= 1".into()));
    }
    Ok(milnor.iter().map(|&mu| BigInt::from(mu) - 1).sum())
}

/// `∏k (Σk - m) - Σ(µ_p - 1) <= d ∏k`.
pub fn milnor_degree_bound(m: usize, ks: &[i64], d: i64, milnor: &[u64]) -> Result<DegreeBoundReport> {
    check_degrees(m, ks, d)?;
    check_curve(m, ks)?;
    let prod: BigInt = ks.iter().map(|&k| BigInt::from(k)).product();
    let lhs = &prod * BigInt::from(ks.iter().sum::<i64>() - m as i64) - milnor_defect(milnor)?;
    let rhs = BigInt::from(d) * &prod;
    Ok(DegreeBoundReport { holds: lhs <= rhs, lhs, rhs })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurveBoundReport {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
    /// Set when the inequality fails: no invariant curve can have these
    /// data, so the input itself is inconsistent.
    pub inconsistent_with_invariance: bool,
}

/// `k(k - 2) - Σ(µ_p - 1) <= d k` for a curve of degree `k` in `P^2`.
/// Milnor numbers of 0 are counted as smooth points.
pub fn plane_curve_degree_bound(k: u64, d: u64, milnor: &[u64]) -> PlaneCurveBoundReport {
    let k_big = BigInt::from(k);
    let defect: BigInt = milnor.iter().map(|&mu| BigInt::from(mu) - BigInt::one()).filter(|x| x.is_positive()).sum();
    let lhs = &k_big * (&k_big - 2) - defect;
    let rhs = BigInt::from(d) * &k_big;
    let holds = lhs <= rhs;
    PlaneCurveBoundReport { lhs, rhs, holds, inconsistent_with_invariance: !holds }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub chi: i64,
    pub l: usize,
    /// `χ >= l`.
    pub holds: bool,
}

/// `χ(C) = Σ Sch_p` over the singular points of the field on `C`.
pub fn euler_characteristic_curve(schwartz: &[i64]) -> Result<EulerReport> {
    if schwartz.is_empty() {
        return Err(Error::Invalid("the Euler characteristic needs at least one Schwartz index".into()));
    }
    let chi = schwartz.iter().sum::<i64>();
    let l = schwartz.len();
    Ok(EulerReport { chi, l, holds: chi >= l as i64 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cherncalc::chern_integral_projective;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_gsv(3, &[3, 2], 1).unwrap(), big(-6));
        assert_eq!(closed_form_gsv(4, &[2, 1, 1], 3).unwrap(), chern_integral_projective(4, &[2, 1, 1], 3).unwrap());
        assert!(closed_form_gsv(3, &[0, 2], 1).is_err());
        assert!(closed_form_gsv(3, &[1, 2], -1).is_err());
        assert!(closed_form_gsv(2, &[1, 2], 1).is_err());
    }

    #[test]
    fn curve_closed_form_identity() {
        for m in 2..=6usize {
            for d in 0..=6i64 {
                let mut ks = vec![1i64; m - 1];
                loop {
                    let prod: i64 = ks.iter().product();
                    let expected = prod * (d + m as i64 - ks.iter().sum::<i64>());
                    assert_eq!(closed_form_gsv(m, &ks, d).unwrap(), big(expected));
                    // Odometer over k in 1..=4.
                    let Some(i) = ks.iter().position(|&k| k < 4) else { break };
                    ks[i] += 1;
                    for k in &mut ks[..i] {
                        *k = 1;
                    }
                }
            }
        }
    }

    #[test]
    fn poincare_examples() {
        let r = poincare_sign_check(3, &[3, 2], 1).unwrap();
        assert_eq!(r, PoincareReport { gsv: big(-6), inequality_holds: false, equivalence_ok: true });
        for d in 0..5 {
            let r = poincare_sign_check(2, &[1], d).unwrap();
            assert!(r.inequality_holds && r.equivalence_ok);
            assert_eq!(r.gsv, big(d + 1));
        }
        assert!(poincare_sign_check(4, &[1, 1], 1).is_err());
    }

    #[test]
    fn degree_bound_examples() {
        let r = milnor_degree_bound(3, &[3, 2], 1, &[2, 6]).unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (big(6), big(6), true));
        assert!(milnor_degree_bound(3, &[2, 2], 1, &[]).unwrap().holds);
        assert!(milnor_degree_bound(3, &[3, 2], 1, &[0]).is_err());
        // In the plane the inequality is the one for plane curves.
        for k in 1..8 {
            for d in 0..5 {
                let a = milnor_degree_bound(2, &[k], d, &[3, 1]).unwrap();
                let b = plane_curve_degree_bound(k as u64, d as u64, &[3, 1]);
                assert_eq!((a.lhs, a.rhs, a.holds), (b.lhs, b.rhs, b.holds));
            }
        }
    }

    #[test]
    fn plane_curve_examples() {
        assert!(plane_curve_degree_bound(3, 2, &[2]).holds);
        assert_eq!(plane_curve_degree_bound(3, 2, &[2]).lhs, big(2));
        assert!(plane_curve_degree_bound(1, 0, &[]).holds);
        let r = plane_curve_degree_bound(3, 0, &[]);
        assert!(!r.holds && r.inconsistent_with_invariance);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic_curve(&[1, 1]).unwrap(), EulerReport { chi: 2, l: 2, holds: true });
        assert!(euler_characteristic_curve(&[2]).unwrap().holds);
        assert!(euler_characteristic_curve(&[1]).unwrap().holds);
        assert!(euler_characteristic_curve(&[]).is_err());
    }
}
