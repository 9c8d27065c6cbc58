//! One function per mode. Each returns the `results` object and the list of
//! anomalies; input problems come back as [`InputError`].

use gsvkit_core::cherncalc::{
    chern_difference_expansion, chern_difference_recursion, chern_integral_projective, inverse_total_class,
    ChernVector, GradedRing,
};
use gsvkit_core::indices::{
    bound_constants, gsv_bounds_nondegenerate, gsv_from_rho, local_gsv_curve, local_ideals, milnor_curve_auto,
    milnor_step_generators, schwartz_curve, tjurina_generators, CurveGerm, LocalIndexReport, VectorFieldGerm,
};
use gsvkit_core::localring::{macaulay::DEFAULT_MAX_DEGREE, macaulay_quotient_dim, QuotientDim};
use gsvkit_core::projective::{
    closed_form_gsv, euler_characteristic_curve, localize, milnor_degree_bound, plane_curve_degree_bound,
    poincare_sign_check, total_gsv_certified, validate_points,
};
use gsvkit_core::{Error, IntGraded, QPolynomial, Rational};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::job::{Job, Mode, Params, Projective};
use crate::report::{put_int, put_int_list};
use crate::InputError;

pub struct Outcome {
    pub results: Map<String, Value>,
    pub anomalies: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { results: Map::new(), anomalies: Vec::new() }
    }
}

pub fn run_mode(mode: Mode, job: &Job, oracle: bool) -> Result<Outcome, InputError> {
    match mode {
        Mode::LocalGsv => local_gsv(job, oracle),
        Mode::TotalGsv => total_gsv(job, oracle),
        Mode::Bounds => bounds(&job.params),
        Mode::Poincare => poincare(job),
        Mode::ChernCheck => chern_check(&job.params),
        Mode::Tjurina => tjurina(job, oracle),
        Mode::Milnor => milnor(job, oracle),
        Mode::Schwartz => schwartz(job, oracle),
        Mode::Euler => euler(job, oracle),
    }
}

/// A germ to work on, with the job field it came from.
struct Site {
    label: String,
    echo: Map<String, Value>,
    curve: CurveGerm<Rational>,
    field: Option<VectorFieldGerm<Rational>>,
}

fn point_errors(e: Error) -> InputError {
    match e {
        Error::DuplicatePoint { index, .. } | Error::PointNotOnCurve { index } => {
            InputError::new(format!("points[{index}]"), e.to_string())
        }
        other => InputError::new("points", other.to_string()),
    }
}

fn sites(job: &Job, need_field: bool) -> Result<Vec<Site>, InputError> {
    if let Some(g) = &job.germ {
        if need_field && g.field.is_none() {
            return Err(InputError::new("germ.field", "this mode needs a vector field"));
        }
        let mut echo = Map::new();
        echo.insert("site".into(), json!("germ"));
        return Ok(vec![Site { label: "germ".into(), echo, curve: g.curve.clone(), field: g.field.clone() }]);
    }
    let p = projective(job)?;
    if p.points.is_empty() {
        return Err(InputError::new("points", "needs at least one [[points]] entry"));
    }
    validate_points(&p.curve, &p.points).map_err(point_errors)?;
    p.points
        .iter()
        .enumerate()
        .map(|(i, pt)| {
            let label = format!("points[{i}]");
            let (curve, field) =
                localize(&p.foliation, &p.curve, pt).map_err(|e| InputError::new(&label, e.to_string()))?;
            let mut echo = Map::new();
            echo.insert("site".into(), json!(label));
            echo.insert("chart".into(), json!(pt.chart));
            echo.insert("coords".into(), json!(pt.affine_coords.iter().map(|c| c.to_string()).collect::<Vec<_>>()));
            Ok(Site { label, echo, curve, field: Some(field) })
        })
        .collect()
}

fn projective(job: &Job) -> Result<&Projective, InputError> {
    job.projective
        .as_ref()
        .ok_or_else(|| InputError::new("foliation", "this mode needs [foliation], [curve] and [[points]] (or [germ])"))
}

fn at(label: &str) -> impl Fn(Error) -> InputError + '_ {
    move |e| InputError::new(label, e.to_string())
}

fn dim_value(d: QuotientDim) -> Value {
    match d {
        QuotientDim::Finite(n) => json!(n),
        QuotientDim::Infinite => json!("infinite"),
    }
}

/// Oracle bookkeeping: every staircase dimension rechecked by linear algebra.
#[derive(Default)]
struct OracleLog {
    checked: u64,
    skipped: u64,
    disagreements: Vec<String>,
}

impl OracleLog {
    fn check(&mut self, what: String, gens: &[QPolynomial], staircase: QuotientDim) {
        if !staircase.is_finite() {
            // Linear algebra can only confirm finite dimensions.
            self.skipped += 1;
            return;
        }
        self.checked += 1;
        let oracle = macaulay_quotient_dim(gens, DEFAULT_MAX_DEGREE).ok().flatten();
        if oracle != staircase.finite() {
            let shown = oracle.map_or("no value".to_owned(), |d| d.to_string());
            self.disagreements.push(format!("{what}: staircase {staircase}, oracle {shown}"));
        }
    }

    fn site(&mut self, site: &Site, report: &LocalIndexReport) -> Result<(), InputError> {
        let field = site.field.as_ref().expect("sites with reports have fields");
        let ideals = local_ideals(&site.curve, field).map_err(at(&site.label))?;
        self.check(format!("{} tau", site.label), &ideals.tjurina, QuotientDim::Finite(report.tau));
        self.check(format!("{} dim O/<v,f>", site.label), &ideals.vf, QuotientDim::Finite(report.dim_vf));
        self.check(format!("{} dim O/<v>", site.label), &ideals.v, report.dim_v);
        Ok(())
    }

    fn tau(&mut self, site: &Site, tau: u64) -> Result<(), InputError> {
        let gens = tjurina_generators(&site.curve).map_err(at(&site.label))?;
        self.check(format!("{} tau", site.label), &gens, QuotientDim::Finite(tau));
        Ok(())
    }

    /// Reruns the Lê–Greuel chain in `order` with oracle dimensions.
    fn milnor(&mut self, site: &Site, order: &[usize], mu: u64) -> Result<(), InputError> {
        let eqs: Vec<QPolynomial> = order.iter().map(|&i| site.curve.equations()[i].clone()).collect();
        let mut previous: i128 = 0;
        self.checked += 1;
        for k in 1..=eqs.len() {
            let gens = milnor_step_generators(&eqs, k).map_err(at(&site.label))?;
            match macaulay_quotient_dim(&gens, DEFAULT_MAX_DEGREE).ok().flatten() {
                Some(d) => previous = i128::from(d) - previous,
                None => {
                    self.disagreements.push(format!("{} milnor: oracle found no finite value at step {k}", site.label));
                    return Ok(());
                }
            }
        }
        if previous != i128::from(mu) {
            self.disagreements.push(format!("{} milnor: chain {mu}, oracle {previous}", site.label));
        }
        Ok(())
    }

    fn finish(self, out: &mut Outcome) {
        let agree = self.disagreements.is_empty();
        out.results.insert(
            "oracle".into(),
            json!({"checked": self.checked, "skipped_infinite": self.skipped, "agree": agree}),
        );
        out.anomalies.extend(self.disagreements.into_iter().map(|d| format!("oracle disagreement: {d}")));
    }
}

fn local_entry(site: &Site, r: &LocalIndexReport, out: &mut Outcome) -> Map<String, Value> {
    let mut e = site.echo.clone();
    e.insert("tau".into(), json!(r.tau));
    e.insert("dim_vf".into(), json!(r.dim_vf));
    e.insert("dim_v".into(), dim_value(r.dim_v));
    e.insert("gsv".into(), json!(r.gsv));
    let field = site.field.as_ref().expect("local entries have fields");
    let nondeg = field.is_nondegenerate();
    e.insert("nondegenerate".into(), json!(nondeg));
    if nondeg {
        if let Ok(iv) = gsv_bounds_nondegenerate(site.curve.m(), site.curve.r(), r.tau) {
            e.insert("bounds".into(), json!({"lo": iv.lo, "hi": iv.hi}));
            if !iv.contains(r.gsv) {
                out.anomalies.push(format!("{}: GSV {} outside [{}, {}]", site.label, r.gsv, iv.lo, iv.hi));
            }
        }
    }
    e
}

fn local_gsv(job: &Job, oracle: bool) -> Result<Outcome, InputError> {
    let mut out = Outcome::new();
    let mut log = OracleLog::default();
    let mut entries = Vec::new();
    let mut gsvs = Vec::new();
    for site in sites(job, true)? {
        let r = local_gsv_curve(&site.curve, site.field.as_ref().unwrap()).map_err(at(&site.label))?;
        if oracle {
            log.site(&site, &r)?;
        }
        gsvs.push(r.gsv);
        entries.push(Value::Object(local_entry(&site, &r, &mut out)));
    }
    out.results.insert("points".into(), Value::Array(entries));
    put_int_list(&mut out.results, "gsv", gsvs);
    if oracle {
        log.finish(&mut out);
    }
    Ok(out)
}

fn total_gsv(job: &Job, oracle: bool) -> Result<Outcome, InputError> {
    let p = projective(job)?;
    if p.points.is_empty() {
        return Err(InputError::new("points", "needs at least one [[points]] entry"));
    }
    let report = match total_gsv_certified(&p.foliation, &p.curve, &p.points) {
        Ok(r) => r,
        Err(e @ (Error::DuplicatePoint { .. } | Error::PointNotOnCurve { .. })) => return Err(point_errors(e)),
        Err(e) => {
            // Find the point responsible, for the error message.
            for s in sites(job, true)? {
                local_gsv_curve(&s.curve, s.field.as_ref().unwrap()).map_err(at(&s.label))?;
            }
            return Err(InputError::new("curve", e.to_string()));
        }
    };
    let mut out = Outcome::new();
    let mut log = OracleLog::default();
    let mut entries = Vec::new();
    for (site, r) in sites(job, true)?.iter().zip(&report.per_point) {
        if oracle {
            log.site(site, r)?;
        }
        entries.push(Value::Object(local_entry(site, r, &mut out)));
    }
    put_int(&mut out.results, "closed_form", report.closed_form.clone());
    put_int(&mut out.results, "local_sum", report.local_sum.clone());
    put_int_list(&mut out.results, "per_point", report.per_point.iter().map(|r| r.gsv));
    out.results.insert("consistent".into(), json!(report.consistent));
    out.results.insert("points".into(), Value::Array(entries));
    if !report.consistent {
        out.anomalies.push(format!(
            "total GSV mismatch: closed form {} but the local indices sum to {} (missing or degenerate points?)",
            report.closed_form, report.local_sum
        ));
    }
    if oracle {
        log.finish(&mut out);
    }
    Ok(out)
}

fn need<T: Clone>(v: &Option<T>, field: &str) -> Result<T, InputError> {
    v.clone().ok_or_else(|| InputError::new(format!("job.{field}"), "required for this mode"))
}

fn bounds(params: &Params) -> Result<Outcome, InputError> {
    let (m, r, tau) = (need(&params.m, "m")?, need(&params.r, "r")?, need(&params.tau, "tau")?);
    let c = bound_constants(m, r).map_err(at("job.m"))?;
    let iv = gsv_bounds_nondegenerate(m, r, tau).map_err(at("job.tau"))?;
    let mut out = Outcome::new();
    put_int(&mut out.results, "lo", iv.lo);
    put_int(&mut out.results, "hi", iv.hi);
    let mut consts = Map::new();
    put_int(&mut consts, "eps_r", c.eps_r);
    put_int(&mut consts, "alpha", c.alpha);
    put_int(&mut consts, "beta", c.beta());
    put_int(&mut consts, "beta_alt", c.beta_alt);
    put_int(&mut consts, "binom", c.binom);
    put_int(&mut consts, "rho_range_max", c.rho_range_max);
    out.results.insert("constants".into(), Value::Object(consts));
    if let Some(rho) = params.rho {
        let ev = gsv_from_rho(m, r, tau, rho).map_err(at("job.rho"))?;
        let mut e = Map::new();
        put_int(&mut e, "rho", rho);
        put_int(&mut e, "gsv", ev.gsv);
        e.insert("positive".into(), json!(ev.positive));
        out.results.insert("rho_evaluation".into(), Value::Object(e));
    }
    Ok(out)
}

/// `(m, ks, d)` from the job parameters, falling back to the projective
/// data when present.
fn degrees(job: &Job) -> Result<(usize, Vec<i64>, i64), InputError> {
    let p = job.projective.as_ref();
    let m = job.params.m.or(p.map(|p| p.foliation.m()));
    let ks = job.params.ks.clone().or(p.map(|p| p.curve.multidegree().iter().map(|&k| i64::from(k)).collect()));
    let d = job.params.d.or(p.map(|p| i64::from(p.foliation.d())));
    Ok((need(&m, "m")?, need(&ks, "ks")?, need(&d, "d")?))
}

fn poincare(job: &Job) -> Result<Outcome, InputError> {
    let (m, ks, d) = degrees(job)?;
    let t3 = poincare_sign_check(m, &ks, d).map_err(at("job.ks"))?;
    let mut out = Outcome::new();
    put_int(&mut out.results, "gsv", t3.gsv.clone());
    out.results.insert("inequality_holds".into(), json!(t3.inequality_holds));
    out.results.insert("equivalence_ok".into(), json!(t3.equivalence_ok));
    if !t3.equivalence_ok {
        out.anomalies.push(format!("sum of degrees <= d + m does not match the sign of GSV = {}", t3.gsv));
    }
    if let Some(milnor) = &job.params.milnor {
        let t4 = milnor_degree_bound(m, &ks, d, milnor).map_err(at("job.milnor"))?;
        let mut e = Map::new();
        put_int(&mut e, "lhs", t4.lhs.clone());
        put_int(&mut e, "rhs", t4.rhs.clone());
        e.insert("holds".into(), json!(t4.holds));
        out.results.insert("degree_bound".into(), Value::Object(e));
        if !t4.holds {
            out.anomalies.push(format!("degree bound violated: {} > {}", t4.lhs, t4.rhs));
        }
        if m == 2 && ks.len() == 1 {
            let s = plane_curve_degree_bound(ks[0] as u64, d as u64, milnor);
            let mut e = Map::new();
            put_int(&mut e, "lhs", s.lhs.clone());
            put_int(&mut e, "rhs", s.rhs.clone());
            e.insert("holds".into(), json!(s.holds));
            e.insert("inconsistent_with_invariance".into(), json!(s.inconsistent_with_invariance));
            out.results.insert("plane_curve_bound".into(), Value::Object(e));
            if !s.holds {
                out.anomalies.push(format!("plane curve bound violated: {} > {}", s.lhs, s.rhs));
            }
        }
    }
    Ok(out)
}

/// Largest ambient dimension for the symbolic check.
const CHERN_CHECK_MAX_M: usize = 10;

fn chern_check(params: &Params) -> Result<Outcome, InputError> {
    let m = need(&params.m, "m")?;
    if !(1..=CHERN_CHECK_MAX_M).contains(&m) {
        return Err(InputError::new("job.m", format!("must be in 1..={CHERN_CHECK_MAX_M}")));
    }
    let r = params.r.or(params.ks.as_ref().map(Vec::len)).unwrap_or(m.saturating_sub(1).max(1));
    if r < 1 || r > m {
        return Err(InputError::new("job.r", format!("must be in 1..={m}")));
    }
    let mut gens: Vec<(String, u32)> = (1..=m).map(|i| (format!("c{i}"), i as u32)).collect();
    gens.extend((1..=r).map(|i| (format!("n{i}"), i as u32)));
    let ring = GradedRing::new(gens, m as u32).map_err(at("job.m"))?;
    let ctx: ChernVector<BigInt> = ChernVector::from_generators(&ring, "c", m).map_err(at("job.m"))?;
    let cn: ChernVector<BigInt> = ChernVector::from_generators(&ring, "n", r).map_err(at("job.r"))?;
    let series: IntGraded = &ctx.total() * &inverse_total_class(&cn, m as u32);
    let mut out = Outcome::new();
    let mut classes = Vec::new();
    let mut agree = true;
    for t in 0..=m {
        let rec = chern_difference_recursion(&ctx, &cn, t);
        let exp = chern_difference_expansion(&ctx, &cn, t);
        let ser = series.homogeneous_part(t as u32);
        if rec != exp || rec != ser {
            agree = false;
            out.anomalies.push(format!("c_{t}(TX - N): recursion {rec}, expansion {exp}, series {ser}"));
        }
        classes.push(rec.to_string());
    }
    out.results.insert("m".into(), json!(m));
    out.results.insert("r".into(), json!(r));
    out.results.insert("classes".into(), json!(classes));
    out.results.insert("agree".into(), json!(agree));
    if let (Some(ks), Some(d)) = (&params.ks, params.d) {
        let integral = chern_integral_projective(m, ks, d).map_err(at("job.ks"))?;
        let closed = closed_form_gsv(m, ks, d).map_err(at("job.ks"))?;
        let mut e = Map::new();
        put_int(&mut e, "integral", integral.clone());
        put_int(&mut e, "closed_form", closed.clone());
        e.insert("agree".into(), json!(integral == closed));
        out.results.insert("projective".into(), Value::Object(e));
        if integral != closed {
            out.anomalies.push(format!("integral {integral} differs from closed form {closed}"));
        }
    }
    Ok(out)
}

fn tjurina(job: &Job, oracle: bool) -> Result<Outcome, InputError> {
    let mut out = Outcome::new();
    let mut log = OracleLog::default();
    let mut entries = Vec::new();
    for site in sites(job, false)? {
        let tau = gsvkit_core::indices::greuel_tjurina(&site.curve).map_err(at(&site.label))?;
        if oracle {
            log.tau(&site, tau)?;
        }
        let mut e = site.echo.clone();
        e.insert("tau".into(), json!(tau));
        entries.push(Value::Object(e));
    }
    out.results.insert("points".into(), Value::Array(entries));
    if oracle {
        log.finish(&mut out);
    }
    Ok(out)
}

fn milnor(job: &Job, oracle: bool) -> Result<Outcome, InputError> {
    let mut out = Outcome::new();
    let mut log = OracleLog::default();
    let mut entries = Vec::new();
    for site in sites(job, false)? {
        let (mu, order) = milnor_curve_auto(&site.curve).map_err(at(&site.label))?;
        let tau = gsvkit_core::indices::greuel_tjurina(&site.curve).map_err(at(&site.label))?;
        if oracle {
            log.tau(&site, tau)?;
            log.milnor(&site, &order, mu)?;
        }
        let mut e = site.echo.clone();
        e.insert("milnor".into(), json!(mu));
        e.insert("tau".into(), json!(tau));
        e.insert("chain_order".into(), json!(order));
        e.insert("quasi_homogeneous".into(), json!(mu == tau));
        entries.push(Value::Object(e));
    }
    out.results.insert("points".into(), Value::Array(entries));
    if oracle {
        log.finish(&mut out);
    }
    Ok(out)
}

/// Per-site Schwartz reports, shared by `schwartz` and `euler`.
fn schwartz_sites(job: &Job, oracle: bool, out: &mut Outcome) -> Result<Vec<LocalIndexReport>, InputError> {
    let mut log = OracleLog::default();
    let mut entries = Vec::new();
    let mut reports = Vec::new();
    for site in sites(job, true)? {
        let r = schwartz_curve(&site.curve, site.field.as_ref().unwrap()).map_err(at(&site.label))?;
        if oracle {
            log.site(&site, &r)?;
            log.milnor(&site, r.milnor_order.as_deref().unwrap_or_default(), r.milnor.unwrap_or(0))?;
        }
        let mut e = local_entry(&site, &r, out);
        e.insert("milnor".into(), json!(r.milnor));
        e.insert("schwartz".into(), json!(r.schwartz));
        e.insert("chain_order".into(), json!(r.milnor_order));
        e.insert("quasi_homogeneous".into(), json!(r.quasi_homogeneous));
        out.anomalies.extend(r.anomalies.iter().map(|a| format!("{}: {a}", site.label)));
        entries.push(Value::Object(e));
        reports.push(r);
    }
    out.results.insert("points".into(), Value::Array(entries));
    if oracle {
        log.finish(out);
    }
    Ok(reports)
}

fn schwartz(job: &Job, oracle: bool) -> Result<Outcome, InputError> {
    let mut out = Outcome::new();
    let reports = schwartz_sites(job, oracle, &mut out)?;
    put_int_list(&mut out.results, "schwartz", reports.iter().map(|r| r.schwartz.unwrap_or(0)));
    Ok(out)
}

fn euler(job: &Job, oracle: bool) -> Result<Outcome, InputError> {
    let mut out = Outcome::new();
    let (sch, milnor): (Vec<i64>, Option<Vec<u64>>) = match &job.params.schwartz {
        Some(list) => (list.clone(), None),
        None => {
            let reports = schwartz_sites(job, oracle, &mut out)?;
            let sch = reports.iter().map(|r| r.schwartz.unwrap_or(0)).collect();
            (sch, Some(reports.iter().map(|r| r.milnor.unwrap_or(0)).collect()))
        }
    };
    let e = euler_characteristic_curve(&sch).map_err(at("job.schwartz"))?;
    put_int_list(&mut out.results, "schwartz", sch.iter().copied());
    put_int(&mut out.results, "chi", e.chi);
    out.results.insert("l".into(), json!(e.l));
    out.results.insert("holds".into(), json!(e.holds));
    if !e.holds {
        out.anomalies.push(format!("Euler characteristic {} is smaller than the number of points {}", e.chi, e.l));
    }
    // Adjunction: a smoothing of the complete intersection has
    // χ = -Πk (Σk - m - 1); each singular point adds its Milnor number.
    if let (Some(p), Some(milnor)) = (job.projective.as_ref(), milnor) {
        let ks: Vec<BigInt> = p.curve.multidegree().iter().map(|&k| BigInt::from(k)).collect();
        let prod: BigInt = ks.iter().product();
        let sum: BigInt = ks.iter().sum();
        let smooth = -(prod * (sum - BigInt::from(p.foliation.m() + 1)));
        let adjunction = smooth + milnor.iter().map(|&mu| BigInt::from(mu)).sum::<BigInt>();
        let agree = adjunction == BigInt::from(e.chi);
        put_int(&mut out.results, "adjunction_chi", adjunction.clone());
        out.results.insert("adjunction_agree".into(), json!(agree));
        if !agree {
            out.anomalies
                .push(format!("sum of Schwartz indices {} differs from the adjunction value {adjunction}", e.chi));
        }
    }
    Ok(out)
}
