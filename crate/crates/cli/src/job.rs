//! Job files: TOML with `[job]`, `[foliation]`, `[curve]`, `[germ]` and
//! `[[points]]` sections. Everything is checked here so that the modes only
//! see well-formed data; every failure names the offending field.

use std::str::FromStr;

use gsvkit_core::indices::{CurveGerm, VectorFieldGerm};
use gsvkit_core::polycore::{parse_polynomial, variables, Variables};
use gsvkit_core::projective::{PointOnChart, ProjectiveCI, ProjectiveFoliation};
use gsvkit_core::{QPolynomial, Rational};
use serde::Deserialize;

use crate::InputError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    LocalGsv,
    TotalGsv,
    Bounds,
    Poincare,
    ChernCheck,
    Tjurina,
    Milnor,
    Schwartz,
    Euler,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::LocalGsv => "local-gsv",
            Mode::TotalGsv => "total-gsv",
            Mode::Bounds => "bounds",
            Mode::Poincare => "poincare",
            Mode::ChernCheck => "chern-check",
            Mode::Tjurina => "tjurina",
            Mode::Milnor => "milnor",
            Mode::Schwartz => "schwartz",
            Mode::Euler => "euler",
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawJob {
    #[serde(default)]
    pub job: Params,
    pub foliation: Option<RawFoliation>,
    pub curve: Option<RawCurve>,
    pub germ: Option<RawGerm>,
    #[serde(default)]
    pub points: Vec<RawPoint>,
}

/// Mode parameters. Which ones are needed depends on the mode.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub m: Option<usize>,
    pub r: Option<usize>,
    pub tau: Option<u64>,
    pub rho: Option<i64>,
    pub ks: Option<Vec<i64>>,
    pub d: Option<i64>,
    pub milnor: Option<Vec<u64>>,
    pub schwartz: Option<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawFoliation {
    pub d: u32,
    pub components: Vec<String>,
    pub variables: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCurve {
    pub equations: Vec<String>,
    pub multidegree: Vec<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGerm {
    pub variables: Vec<String>,
    pub equations: Vec<String>,
    pub field: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPoint {
    pub chart: usize,
    pub coords: Vec<String>,
}

/// Projective input: foliation, curve and the candidate singular points.
pub struct Projective {
    pub foliation: ProjectiveFoliation<Rational>,
    pub curve: ProjectiveCI<Rational>,
    pub points: Vec<PointOnChart<Rational>>,
}

/// Germ input given directly in affine coordinates at the origin.
pub struct Germ {
    pub curve: CurveGerm<Rational>,
    pub field: Option<VectorFieldGerm<Rational>>,
}

pub struct Job {
    pub params: Params,
    pub projective: Option<Projective>,
    pub germ: Option<Germ>,
}

pub fn parse_job(text: &str) -> Result<Job, InputError> {
    let raw: RawJob = toml::from_str(text).map_err(|e| {
        let at = e.span().map(|s| format!(" at byte {}", s.start)).unwrap_or_default();
        InputError::new("job file", format!("{}{at}", e.message()))
    })?;
    let germ = raw.germ.as_ref().map(build_germ).transpose()?;
    let projective = match (&raw.foliation, &raw.curve) {
        (Some(f), Some(c)) => Some(build_projective(f, c, &raw.points)?),
        (None, None) => {
            if !raw.points.is_empty() {
                return Err(InputError::new("points", "points need both [foliation] and [curve]"));
            }
            None
        }
        (None, Some(_)) => return Err(InputError::new("foliation", "missing section (required with [curve])")),
        (Some(_), None) => return Err(InputError::new("curve", "missing section (required with [foliation])")),
    };
    if germ.is_some() && projective.is_some() {
        return Err(InputError::new("germ", "give either [germ] or [foliation]/[curve], not both"));
    }
    Ok(Job { params: raw.job, projective, germ })
}

fn polys(vars: &Variables, items: &[String], field: &str) -> Result<Vec<QPolynomial>, InputError> {
    items
        .iter()
        .enumerate()
        .map(|(i, s)| parse_polynomial(s, vars).map_err(|e| InputError::new(format!("{field}[{i}]"), e.to_string())))
        .collect()
}

fn check_names(names: &[String], field: &str) -> Result<(), InputError> {
    if names.is_empty() {
        return Err(InputError::new(field, "needs at least one variable"));
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(InputError::new(format!("{field}[{i}]"), format!("duplicate variable `{n}`")));
        }
    }
    Ok(())
}

fn build_germ(raw: &RawGerm) -> Result<Germ, InputError> {
    check_names(&raw.variables, "germ.variables")?;
    let vars = variables(&raw.variables);
    let eqs = polys(&vars, &raw.equations, "germ.equations")?;
    let curve = CurveGerm::new(eqs).map_err(|e| InputError::new("germ.equations", e.to_string()))?;
    let field = match &raw.field {
        Some(items) => {
            let comps = polys(&vars, items, "germ.field")?;
            Some(VectorFieldGerm::new(comps).map_err(|e| InputError::new("germ.field", e.to_string()))?)
        }
        None => None,
    };
    Ok(Germ { curve, field })
}

fn build_projective(f: &RawFoliation, c: &RawCurve, points: &[RawPoint]) -> Result<Projective, InputError> {
    if f.components.len() < 3 {
        return Err(InputError::new("foliation.components", "need m + 1 >= 3 homogeneous components"));
    }
    let vars = match &f.variables {
        Some(names) => {
            check_names(names, "foliation.variables")?;
            if names.len() != f.components.len() {
                return Err(InputError::new(
                    "foliation.variables",
                    format!("expected {} names, got {}", f.components.len(), names.len()),
                ));
            }
            variables(names)
        }
        None => variables(&(0..f.components.len()).map(|i| format!("z{i}")).collect::<Vec<_>>()),
    };
    let comps = polys(&vars, &f.components, "foliation.components")?;
    let foliation =
        ProjectiveFoliation::new(comps, f.d).map_err(|e| InputError::new("foliation.components", e.to_string()))?;
    let eqs = polys(&vars, &c.equations, "curve.equations")?;
    if c.multidegree.len() != eqs.len() {
        return Err(InputError::new(
            "curve.multidegree",
            format!("expected {} degrees, got {}", eqs.len(), c.multidegree.len()),
        ));
    }
    let curve =
        ProjectiveCI::new(eqs, c.multidegree.clone()).map_err(|e| InputError::new("curve.equations", e.to_string()))?;
    let m = foliation.m();
    let mut pts = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if p.chart > m {
            return Err(InputError::new(format!("points[{i}].chart"), format!("chart must be in 0..={m}")));
        }
        if p.coords.len() != m {
            return Err(InputError::new(
                format!("points[{i}].coords"),
                format!("expected {m} affine coordinates, got {}", p.coords.len()),
            ));
        }
        let coords = p
            .coords
            .iter()
            .enumerate()
            .map(|(j, s)| {
                Rational::from_str(s.trim()).map_err(|e| {
                    InputError::new(format!("points[{i}].coords[{j}]"), format!("bad rational `{s}`: {e}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        pts.push(PointOnChart::new(p.chart, coords));
    }
    Ok(Projective { foliation, curve, points: pts })
}
