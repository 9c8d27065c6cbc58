use gsvkit_core::cherncalc::chern_integral_projective;
use gsvkit_core::indices::{gsv_bounds_nondegenerate, local_gsv_curve, schwartz_curve, CurveGerm, VectorFieldGerm};
use gsvkit_core::localring::macaulay::{macaulay_quotient_dim, DEFAULT_MAX_DEGREE};
use gsvkit_core::localring::{quotient_dim, IdealGens, QuotientDim};
use gsvkit_core::polycore::{numbered_variables, Monomial, Variables};
use gsvkit_core::projective::{closed_form_gsv, poincare_sign_check};
use gsvkit_core::{QPolynomial, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn mono(vars: &Variables, exps: Vec<u32>, c: i64) -> QPolynomial {
    QPolynomial::monomial(vars.clone(), Monomial::from_exponents(exps), q(c))
}

/// Random polynomial whose terms all have degree in `lo..=hi`.
fn random_poly(rng: &mut ChaCha8Rng, vars: &Variables, lo: u32, hi: u32, terms: usize) -> QPolynomial {
    let n = vars.len();
    let mut p = QPolynomial::zero(vars.clone());
    for _ in 0..terms {
        let deg = rng.gen_range(lo..=hi);
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        p = &p + &mono(vars, exps, rng.gen_range(-3..=3));
    }
    p
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Weighted-homogeneous curve germ with a nondegenerate invariant field:
/// the weighted Euler field plus multiples of the equations by functions
/// vanishing at the origin, times a unit.
fn nondegenerate_pair(rng: &mut ChaCha8Rng) -> (CurveGerm<Rational>, VectorFieldGerm<Rational>, u64) {
    let m = rng.gen_range(2..=3usize);
    let vars = numbered_variables("x", m);
    let (p, qq) = loop {
        let p = rng.gen_range(1..=4u32);
        let qq = rng.gen_range(2..=5u32);
        if gcd(p, qq) == 1 {
            break (p, qq);
        }
    };
    let e = |i: usize, k: u32| {
        let mut v = vec![0; m];
        v[i] = k;
        v
    };
    let f1 = &mono(&vars, e(0, p), 1) - &mono(&vars, e(1, qq), 1);
    let mut eqs = vec![f1];
    let mut weights = vec![qq as i64, p as i64];
    if m == 3 {
        let (s, t) = (rng.gen_range(0..=2u32), rng.gen_range(1..=2u32));
        let c = rng.gen_range(-2..=2i64);
        eqs.push(&mono(&vars, e(2, 1), 1) - &mono(&vars, vec![s, t, 0], c));
        weights.push((s * qq + t * p) as i64);
    }
    let unit = &QPolynomial::one(vars.clone()) + &random_poly(rng, &vars, 1, 2, 2);
    let comps = (0..m)
        .map(|i| {
            let mut a = mono(&vars, e(i, 1), weights[i]);
            for f in &eqs {
                a = &a + &(&random_poly(rng, &vars, 1, 2, 2) * f);
            }
            &unit * &a
        })
        .collect();
    let tau = u64::from((p - 1) * (qq - 1));
    (CurveGerm::new(eqs).unwrap(), VectorFieldGerm::new(comps).unwrap(), tau)
}

#[test]
fn nondegenerate_fields_give_one_minus_tau() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..12 {
        let (germ, v, tau) = nondegenerate_pair(&mut rng);
        assert!(v.is_nondegenerate());
        let r = local_gsv_curve(&germ, &v).unwrap();
        assert_eq!(r.tau, tau);
        assert_eq!(r.dim_v, QuotientDim::Finite(1));
        assert_eq!(r.dim_vf, 1);
        assert_eq!(r.gsv, 1 - tau as i64);
        assert!(gsv_bounds_nondegenerate(germ.m(), germ.r(), r.tau).unwrap().contains(r.gsv));
    }
}

#[test]
fn schwartz_positive_and_milnor_dominates() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..8 {
        let (germ, v, _) = nondegenerate_pair(&mut rng);
        let r = schwartz_curve(&germ, &v).unwrap();
        assert!(r.milnor.unwrap() >= r.tau);
        assert!(r.schwartz.unwrap() > 0);
        assert_eq!(r.schwartz.unwrap(), r.gsv + r.milnor.unwrap() as i64);
        assert!(r.anomalies.is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn staircase_matches_macaulay(seed in any::<u64>(), m in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = numbered_variables("x", m);
        let mut gens = Vec::new();
        for i in 0..m {
            let a = rng.gen_range(1..=if m == 1 { 12 } else { 3 });
            let mut e = vec![0; m];
            e[i] = a;
            gens.push(&mono(&vars, e, 1) + &random_poly(&mut rng, &vars, a + 1, a + 2, 2));
        }
        for _ in 0..rng.gen_range(0..=2) {
            gens.push(random_poly(&mut rng, &vars, 1, 3, 3));
        }
        let staircase = quotient_dim(&IdealGens::local(gens.clone()).unwrap()).unwrap();
        let oracle = macaulay_quotient_dim(&gens, DEFAULT_MAX_DEGREE).unwrap();
        prop_assert_eq!(staircase.finite(), oracle);
    }

    #[test]
    fn integral_matches_closed_form(m in 2usize..=5, seed in any::<u64>(), d in 0i64..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = rng.gen_range(1..m);
        let ks: Vec<i64> = (0..r).map(|_| rng.gen_range(1..=4)).collect();
        prop_assert_eq!(chern_integral_projective(m, &ks, d).unwrap(), closed_form_gsv(m, &ks, d).unwrap());
    }

    #[test]
    fn sign_equivalence(m in 2usize..=6, seed in any::<u64>(), d in 0i64..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ks: Vec<i64> = (0..m - 1).map(|_| rng.gen_range(1..=6)).collect();
        prop_assert!(poincare_sign_check(m, &ks, d).unwrap().equivalence_ok);
    }
}
