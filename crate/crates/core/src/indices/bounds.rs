//! Bounds for the GSV index at a nondegenerate isolated singularity of a
//! foliation along a complete intersection of codimension `r` in `K^m`.

use crate::combinat::binomial_i64;
use crate::error::{Error, Result};

/// Largest ambient dimension accepted (keeps every constant inside `i64`).
pub const MAX_DIMENSION: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundConstants {
    pub eps_r: i64,
    pub alpha: i64,
    /// `C(m - 2, m - r - 1)`.
    pub binom: i64,
    /// Largest admissible `ρ`; equal to `binom`.
    pub rho_range_max: i64,
    /// Alternative closed form `α + (-1)^(m-r-1) C(m-2, m-r-1)`; the bounds use `eps_r`.
    /// The bounds use `eps_r` in its place.
    pub beta_alt: i64,
}

impl BoundConstants {
    /// The bound constant paired with `alpha`.
    pub fn beta(&self) -> i64 {
        self.eps_r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GsvInterval {
    pub lo: i64,
    pub hi: i64,
}

impl GsvInterval {
    pub fn contains(&self, value: i64) -> bool {
        self.lo <= value && value <= self.hi
    }

    pub fn width(&self) -> i64 {
        self.hi - self.lo
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RhoEvaluation {
    pub gsv: i64,
    pub positive: bool,
}

fn check(m: usize, r: usize) -> Result<()> {
    if m < 2 || r < 1 || r + 1 > m || m > MAX_DIMENSION {
        return Err(Error::OutOfRange(format!(
            "need m >= 2 and 1 <= r <= m - 1 (m <= {MAX_DIMENSION}), got m = {m}, r = {r}"
        )));
    }
    Ok(())
}

fn alternating_sum(r: usize, top: Option<usize>) -> i64 {
    let Some(top) = top else { return 0 };
    (0..=top)
        .map(|j| {
            let c = binomial_i64((r - 1 + j) as u64, j as u64);
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .sum()
}

fn sign(exponent: usize) -> i64 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn bound_constants(m: usize, r: usize) -> Result<BoundConstants> {
    check(m, r)?;
    let eps_r = alternating_sum(r, (m - r).checked_sub(2));
    let alpha = alternating_sum(r, Some(m - r - 1));
    let binom = binomial_i64((m - 2) as u64, (m - r - 1) as u64);
    Ok(BoundConstants { eps_r, alpha, binom, rho_range_max: binom, beta_alt: alpha + sign(m - r - 1) * binom })
}

/// Interval for the GSV index when the linear part of the field is
/// invertible and `τ` is the Tjurina number of the germ.
pub fn gsv_bounds_nondegenerate(m: usize, r: usize, tau: u64) -> Result<GsvInterval> {
    let k = bound_constants(m, r)?;
    let tau = i64::try_from(tau).map_err(|_| Error::OutOfRange("tau too large".into()))?;
    Ok(if (m - r).is_multiple_of(2) {
        GsvInterval { lo: k.alpha + tau, hi: k.eps_r + tau }
    } else {
        GsvInterval { lo: k.eps_r - tau, hi: k.alpha - tau }
    })
}

/// `GSV = ε_r + τ - ρ` (m - r even) or `ε_r - τ + ρ` (m - r odd), with the
/// positivity criterion `τ + ε_r > ρ` resp. `τ - ε_r < ρ`.
pub fn gsv_from_rho(m: usize, r: usize, tau: u64, rho: i64) -> Result<RhoEvaluation> {
    let k = bound_constants(m, r)?;
    if rho < 0 || rho > k.rho_range_max {
        return Err(Error::OutOfRange(format!("rho = {rho} outside [0, {}]", k.rho_range_max)));
    }
    let tau = i64::try_from(tau).map_err(|_| Error::OutOfRange("tau too large".into()))?;
    Ok(if (m - r).is_multiple_of(2) {
        RhoEvaluation { gsv: k.eps_r + tau - rho, positive: tau + k.eps_r > rho }
    } else {
        RhoEvaluation { gsv: k.eps_r - tau + rho, positive: tau - k.eps_r < rho }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn constants_examples() {
        let k = bound_constants(3, 2).unwrap();
        assert_eq!((k.eps_r, k.alpha, k.binom), (0, 1, 1));
        let k = bound_constants(6, 2).unwrap();
        assert_eq!((k.eps_r, k.alpha, k.binom), (2, -2, 4));
        let k = bound_constants(5, 3).unwrap();
        assert_eq!((k.eps_r, k.alpha), (1, -2));
        assert!(bound_constants(3, 3).is_err());
        assert!(bound_constants(1, 1).is_err());
        assert!(bound_constants(4, 0).is_err());
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(gsv_bounds_nondegenerate(3, 2, 2).unwrap(), GsvInterval { lo: -2, hi: -1 });
        assert_eq!(gsv_bounds_nondegenerate(3, 2, 6).unwrap(), GsvInterval { lo: -6, hi: -5 });
    }

    #[test]
    fn rho_examples() {
        assert_eq!(gsv_from_rho(3, 2, 2, 0).unwrap().gsv, -2);
        assert_eq!(gsv_from_rho(3, 2, 2, 1).unwrap().gsv, -1);
        let e = gsv_from_rho(4, 2, 3, 2).unwrap();
        assert_eq!(e, RhoEvaluation { gsv: 2, positive: true });
        assert!(gsv_from_rho(3, 2, 2, 2).is_err());
        assert!(gsv_from_rho(3, 2, 2, -1).is_err());
        // Even parity, τ = 0, ρ = 0 gives ε_r.
        assert_eq!(gsv_from_rho(6, 2, 0, 0).unwrap().gsv, 2);
    }

    proptest! {
        #[test]
        fn alpha_eps_identity(m in 2usize..30, r_off in 0usize..28) {
            prop_assume!(r_off + 1 < m);
            let r = m - 1 - r_off;
            let k = bound_constants(m, r).unwrap();
            if r == m - 1 {
                prop_assert_eq!(k.eps_r, 0);
            }
            prop_assert_eq!(k.alpha - k.eps_r, sign(m - r - 1) * k.binom);
        }

        #[test]
        fn interval_width_and_rho_endpoints(m in 2usize..20, r_off in 0usize..18, tau in 0u64..50) {
            prop_assume!(r_off + 1 < m);
            let r = m - 1 - r_off;
            let k = bound_constants(m, r).unwrap();
            let iv = gsv_bounds_nondegenerate(m, r, tau).unwrap();
            prop_assert!(iv.lo <= iv.hi);
            prop_assert_eq!(iv.width(), k.binom);
            let at0 = gsv_from_rho(m, r, tau, 0).unwrap().gsv;
            let at_max = gsv_from_rho(m, r, tau, k.binom).unwrap().gsv;
            if (m - r) % 2 == 0 {
                prop_assert_eq!((at0, at_max), (iv.hi, iv.lo));
            } else {
                prop_assert_eq!((at0, at_max), (iv.lo, iv.hi));
            }
            for rho in 0..=k.binom {
                let e = gsv_from_rho(m, r, tau, rho).unwrap();
                prop_assert!(iv.contains(e.gsv));
                prop_assert_eq!(e.positive, e.gsv > 0);
            }
        }
    }
}
