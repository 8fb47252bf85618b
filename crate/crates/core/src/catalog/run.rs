use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Expected, Fixture, FixtureKind};
use crate::duality::{
    bidual_check, cover_branch, discriminant, dual_variety, flexes_with_tangent_through, milnor_at, pencil_verify,
    rnc_projection_pencil, wronskian_branch, BranchLocus, DiscriminantReport, LinearSystem, PencilReport,
};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::ideals::{content_lines, parse_ideal, parse_ring_header, Ideal};
use crate::numerics::{self, StratumData, SurfaceNumerics};
use crate::polyring::{parse_polynomial, parse_polynomial_at, Polynomial};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub oracle: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureStatus {
    Pass,
    Fail,
    Skipped(String),
    Note,
}

impl FixtureStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            FixtureStatus::Pass => "pass",
            FixtureStatus::Fail => "fail",
            FixtureStatus::Skipped(_) => "skipped",
            FixtureStatus::Note => "note",
        }
    }

    /// Everything except a failed check.
    pub fn ok(&self) -> bool {
        !matches!(self, FixtureStatus::Fail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureReport {
    pub id: String,
    pub kind: FixtureKind,
    pub origin: String,
    pub field: String,
    pub seed: u64,
    pub status: FixtureStatus,
    pub checks: Vec<CheckResult>,
}

impl FixtureReport {
    pub fn to_report(&self) -> Report {
        let mut r = Report::new(format!("fixture {}", self.id));
        r.field("fixture", &self.id)
            .field("kind", self.kind.as_str())
            .field("origin", &self.origin)
            .field("field", &self.field)
            .field("seed", self.seed);
        match &self.status {
            FixtureStatus::Skipped(why) => {
                r.line(format!("skipped: {why}"));
            }
            FixtureStatus::Note => {
                r.line("documentation only");
            }
            _ => {}
        }
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            r.line(format!(
                "{mark} {} = {} (expected {}, oracle {})",
                c.key, c.actual, c.expected, c.oracle
            ));
            r.hidden(&format!("check.{}", c.key), if c.pass { "pass" } else { "fail" });
            r.hidden(&format!("actual.{}", c.key), &c.actual);
        }
        r.field("status", self.status.as_str());
        r
    }
}

fn context(id: &str, body_line: usize) -> impl Fn(Error) -> Error + '_ {
    move |e| {
        let e = match e {
            Error::Parse { line, column, message } => Error::Parse {
                line: line + body_line - 1,
                column,
                message,
            },
            other => other,
        };
        Error::Fixture {
            id: id.to_string(),
            source: Box::new(e),
        }
    }
}

/// Runs the checks of one fixture over `F`. `seed` overrides the fixture's
/// own seed.
pub fn run_fixture<F: Field>(fx: &Fixture, seed: Option<u64>) -> Result<FixtureReport> {
    let seed = seed.unwrap_or(fx.seed);
    let mut report = FixtureReport {
        id: fx.id.clone(),
        kind: fx.kind,
        origin: fx.origin.clone(),
        field: F::name(),
        seed,
        status: FixtureStatus::Pass,
        checks: Vec::new(),
    };
    if fx.kind == FixtureKind::Note {
        report.status = FixtureStatus::Note;
        return Ok(report);
    }
    if !F::is_finite() && !fx.rational {
        report.status = FixtureStatus::Skipped("declared for prime fields only".into());
        return Ok(report);
    }
    let wrap = context(&fx.id, fx.body_line);
    let actual: Vec<(String, bool)> = match fx.kind {
        FixtureKind::Symbolic => symbolic::<F>(fx, seed),
        FixtureKind::Dual => dual::<F>(fx, seed),
        FixtureKind::Curve => curve::<F>(fx, seed),
        FixtureKind::Cover => cover::<F>(fx),
        FixtureKind::Numeric => numeric(fx),
        FixtureKind::Segre => segre(fx),
        FixtureKind::Note => unreachable!(),
    }
    .map_err(wrap)?;
    for (e, (a, pass)) in fx.expected.iter().zip(actual) {
        report.checks.push(CheckResult {
            key: e.key.clone(),
            expected: e.value.clone(),
            actual: a,
            oracle: e.oracle.clone(),
            pass,
        });
    }
    if report.checks.iter().any(|c| !c.pass) {
        report.status = FixtureStatus::Fail;
    }
    Ok(report)
}

/// Runs the whole roster, fanning out over fixtures; results keep roster
/// order.
pub fn run_all<F: Field>(seed: Option<u64>) -> Vec<(String, Result<FixtureReport>)> {
    super::roster()
        .into_par_iter()
        .map(|fx| (fx.id.clone(), run_fixture::<F>(&fx, seed)))
        .collect()
}

fn cmp_int(expected: &str, actual: i64) -> (String, bool) {
    (actual.to_string(), expected.trim().parse::<i64>() == Ok(actual))
}

fn cmp_bool(expected: &str, actual: bool) -> (String, bool) {
    let e = match expected.trim() {
        "true" | "yes" => Some(true),
        "false" | "no" => Some(false),
        _ => None,
    };
    (actual.to_string(), e == Some(actual))
}

fn cmp_text(expected: &str, actual: String) -> (String, bool) {
    let norm = |s: &str| s.split_whitespace().collect::<Vec<_>>().join(" ");
    let pass = norm(expected) == norm(&actual);
    (actual, pass)
}

/// Equality after monic normalization; `none` stands for "no equation".
fn cmp_poly<F: Field>(expected: &str, actual: Option<&Polynomial<F>>) -> (String, bool) {
    match actual {
        None => ("none".into(), expected.trim() == "none"),
        Some(p) => {
            let shown = p.monic().to_string();
            let pass = parse_polynomial::<F>(p.ring(), expected).is_ok_and(|e| !e.is_zero() && e.monic() == p.monic());
            (shown, pass)
        }
    }
}

fn scalars<F: Field>(text: &str, sep: char) -> Result<Vec<F>> {
    text.split(sep)
        .map(|s| {
            let s = s.trim();
            let q: Rational = s
                .parse()
                .map_err(|_| Error::Invalid(format!("bad scalar `{s}`")))?;
            F::from_rational(&q).ok_or_else(|| Error::Invalid(format!("`{s}` is not defined in {}", F::name())))
        })
        .collect()
}

/// `name[inner]` -> `inner`.
fn bracket<'a>(key: &'a str, name: &str) -> Option<&'a str> {
    key.strip_prefix(name)?.strip_prefix('[')?.strip_suffix(']')
}

fn index(key: &str, prefix: &str) -> Option<usize> {
    key.strip_prefix(prefix)?.parse().ok()
}

fn dim_deg(d: (i64, u64)) -> String {
    if d.0 < 0 {
        "empty".into()
    } else {
        format!("{}:{}", d.0, d.1)
    }
}

fn symbolic<F: Field>(fx: &Fixture, seed: u64) -> Result<Vec<(String, bool)>> {
    let sys = LinearSystem::<F>::parse(&fx.body)?;
    let rep: DiscriminantReport<F> = discriminant(&sys)?;
    let dual = sys.dual_ring();
    let pencil: Option<PencilReport<F>> = if fx.expected.iter().any(|e| e.key.starts_with("pencil")) {
        Some(pencil_verify(&sys, seed)?)
    } else {
        None
    };
    let mut out = Vec::new();
    for Expected { key, value, .. } in &fx.expected {
        let v = value.as_str();
        let r = match key.as_str() {
            "empty" => cmp_bool(v, rep.is_empty()),
            "equation" => cmp_poly(v, rep.equation.as_ref()),
            "dimension" => cmp_int(v, rep.dimension),
            "codegree" => cmp_int(v, rep.codegree as i64),
            "defect" => cmp_int(v, rep.defect),
            "hyperplanes" => cmp_int(v, rep.hyperplane_count() as i64),
            "residual-degree" => cmp_int(v, rep.residual.as_ref().map_or(0, |r| r.degree as i64)),
            "residual-irreducible" => cmp_bool(v, rep.residual.as_ref().is_some_and(|r| r.irreducible)),
            "pencil-sum" => cmp_int(v, pencil.as_ref().unwrap().milnor_sum as i64),
            "pencil-cn" => cmp_int(v, pencil.as_ref().unwrap().cn as i64),
            "pencil-holds" => cmp_bool(v, pencil.as_ref().unwrap().holds),
            "singular-degree" => match &rep.equation {
                None => ("no equation".into(), false),
                Some(eq) => {
                    let ring = eq.ring().clone();
                    let mut g = vec![eq.clone()];
                    g.extend((0..ring.nvars()).map(|i| eq.derivative(i)));
                    match Ideal::from_generators(&ring, g).projective_dimension_degree() {
                        None => cmp_int(v, 0),
                        Some((0, d)) => cmp_int(v, d as i64),
                        Some((d, _)) => (format!("singular in dimension {d}"), false),
                    }
                }
            },
            k if k.starts_with("jumping-dim.") => {
                let i = index(k, "jumping-dim.").ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                let j = rep
                    .jumping
                    .as_ref()
                    .ok_or_else(|| Error::Unsupported("no jumping sets for this source".into()))?;
                cmp_int(v, j.sets.get(i).map_or(-1, |s| s.dimension))
            }
            k if k.starts_with("jumping-eq.") => {
                let i = index(k, "jumping-eq.").ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                let j = rep
                    .jumping
                    .as_ref()
                    .ok_or_else(|| Error::Unsupported("no jumping sets for this source".into()))?;
                match j.sets.get(i).map(|s| s.ideal.generators()) {
                    Some([g]) => cmp_poly(v, Some(g)),
                    _ => ("not principal".into(), false),
                }
            }
            k if k.starts_with("stratum-dim.") => {
                let i = index(k, "stratum-dim.").ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                let d = rep.strata.get(&i).map_or((-1, 0), |l| l.dimension_degree(&dual));
                cmp_text(v, dim_deg(d))
            }
            k if k.starts_with("stratum.") => {
                let i = index(k, "stratum.").ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                cmp_poly(v, rep.strata.get(&i).and_then(|l| l.equation()))
            }
            k if k.starts_with("milnor[") => {
                let inner = bracket(k, "milnor").ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                let (c, p) = inner
                    .split_once('@')
                    .ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                let member = sys.member(&scalars::<F>(c, ',')?);
                let m = milnor_at(&member, &scalars::<F>(p, ':')?)?;
                match m.milnor {
                    Some(mu) => cmp_int(v, mu as i64),
                    None => ("infinite".into(), v == "infinite"),
                }
            }
            k if k.starts_with("flexes-through[") => {
                let p = bracket(k, "flexes-through").ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                let f = sys
                    .hypersurface()
                    .ok_or_else(|| Error::Invalid("flexes need a hypersurface source".into()))?;
                cmp_int(v, flexes_with_tangent_through(f, &scalars::<F>(p, ':')?)?.len() as i64)
            }
            k => return Err(Error::Invalid(format!("unknown check `{k}`"))),
        };
        out.push(r);
    }
    Ok(out)
}

fn dual<F: Field>(fx: &Fixture, seed: u64) -> Result<Vec<(String, bool)>> {
    let x = parse_ideal::<F>(&fx.body)?;
    let dv = dual_variety(&x, None)?;
    let mut out = Vec::new();
    for Expected { key, value, .. } in &fx.expected {
        let v = value.as_str();
        let r = match key.as_str() {
            "dual-degree" => cmp_int(v, dv.degree as i64),
            "dual-dimension" => cmp_int(v, dv.dimension),
            "dual-equation" => cmp_poly(v, dv.locus.equation()),
            "bidual" => match x.generators() {
                [f] => cmp_bool(v, bidual_check(f, seed)?.holds),
                _ => ("not a plane curve".into(), false),
            },
            k if k.starts_with("formula-degree[") => {
                let inner = bracket(k, "formula-degree").ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                let (d, g) = pair(inner)?;
                cmp_int(v, numerics::dual_degree_plane_curve(d, g))
            }
            k if k.starts_with("flexes-through[") => {
                let p = bracket(k, "flexes-through").ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                match x.generators() {
                    [f] => cmp_int(v, flexes_with_tangent_through(f, &scalars::<F>(p, ':')?)?.len() as i64),
                    _ => ("not a plane curve".into(), false),
                }
            }
            k => return Err(Error::Invalid(format!("unknown check `{k}`"))),
        };
        out.push(r);
    }
    Ok(out)
}

fn pair(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Invalid(format!("expected `a,b`, got `{s}`")))?;
    let p = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|_| Error::Invalid(format!("bad integer `{x}`")))
    };
    Ok((p(a)?, p(b)?))
}

/// `key: value` lines after a ring header.
fn keyed_body(body: &str) -> Result<(crate::polyring::RingRef, BTreeMap<String, (usize, String)>)> {
    let mut lines = content_lines(body);
    let (n, first) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "missing ring header".into(),
    })?;
    let ring = parse_ring_header(first, n)?.ring()?;
    let mut map = BTreeMap::new();
    for (n, l) in lines {
        let (k, v) = l.split_once(':').ok_or_else(|| Error::Parse {
            line: n,
            column: 1,
            message: "expected `key: value`".into(),
        })?;
        map.insert(k.trim().to_string(), (n, v.trim().to_string()));
    }
    Ok((ring, map))
}

fn profiles_text<F: Field>(b: &BranchLocus<F>) -> String {
    let mut p: Vec<Vec<usize>> = b.values.iter().map(|v| v.profile.clone()).collect();
    p.sort();
    let mut s: Vec<String> = p
        .iter()
        .map(|v| v.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    if b.unresolved > 0 {
        s.push(format!("+{} unresolved", b.unresolved));
    }
    s.join("; ")
}

fn curve<F: Field>(fx: &Fixture, seed: u64) -> Result<Vec<(String, bool)>> {
    let (ring, map) = keyed_body(&fx.body)?;
    let w = if let Some((n, r)) = map.get("rnc") {
        let r: u32 = r.parse().map_err(|_| Error::Parse {
            line: *n,
            column: 1,
            message: "bad degree".into(),
        })?;
        rnc_projection_pencil::<F>(&ring, r, seed)?.2
    } else {
        let get = |k: &str| -> Result<Polynomial<F>> {
            let (n, t) = map.get(k).ok_or_else(|| Error::Invalid(format!("missing `{k}:`")))?;
            parse_polynomial_at(&ring, t, *n)
        };
        wronskian_branch(&get("f")?, &get("g")?)?
    };
    let mut out = Vec::new();
    for Expected { key, value, .. } in &fx.expected {
        let v = value.as_str();
        out.push(match key.as_str() {
            "branch-values" => cmp_int(v, w.branch.codegree as i64),
            "profiles" => cmp_text(v, profiles_text(&w.branch)),
            "ramification-points" => cmp_int(v, (w.ramification.len() as u64 + w.unresolved_ramification) as i64),
            "wronskian-degree" => cmp_int(v, w.wronskian.total_degree().map_or(-1, |d| d as i64)),
            k => return Err(Error::Invalid(format!("unknown check `{k}`"))),
        });
    }
    Ok(out)
}

fn cover<F: Field>(fx: &Fixture) -> Result<Vec<(String, bool)>> {
    let (ring, map) = keyed_body(&fx.body)?;
    let (n, text) = map.get("cover").ok_or_else(|| Error::Invalid("missing `cover:`".into()))?;
    let f = parse_polynomial_at::<F>(&ring, text, *n)?;
    let y = match map.get("fibre") {
        Some((_, name)) => ring.var_index(name)?,
        None => 0,
    };
    let b = cover_branch(&f, y)?;
    let mut out = Vec::new();
    for Expected { key, value, .. } in &fx.expected {
        let v = value.as_str();
        out.push(match key.as_str() {
            "branch-values" => cmp_int(v, b.codegree as i64),
            "profiles" => cmp_text(v, profiles_text(&b)),
            k => return Err(Error::Invalid(format!("unknown check `{k}`"))),
        });
    }
    Ok(out)
}

/// Numerics of the cyclic `d`-fold plane cover branched along a smooth curve
/// of degree `bd`, polarized by the pullback of a line.
pub fn cyclic_cover_numerics(d: i64, b: i64) -> Result<SurfaceNumerics> {
    let k = b * (d - 1) - 3;
    let twelve_chi = b * b * (d - 1) * d * (2 * d - 1) - 9 * b * d * (d - 1) + 12 * d;
    if twelve_chi % 12 != 0 {
        return Err(Error::Invalid(format!("non-integral chi for d = {d}, b = {b}")));
    }
    let chi = twelve_chi / 12;
    let k2 = d * k * k;
    let kl = d * k;
    let l2 = d;
    let g = (kl + l2) / 2 + 1;
    SurfaceNumerics::new(12 * chi - k2, k2, kl, l2, 0, g, Some(chi))
}

fn numeric(fx: &Fixture) -> Result<Vec<(String, bool)>> {
    let mut surface_text = String::new();
    let mut ruled: Option<(usize, String)> = None;
    let mut components: Vec<(i64, i64)> = Vec::new();
    for (n, line) in content_lines(&fx.body) {
        let (k, v) = line.split_once(':').ok_or_else(|| Error::Parse {
            line: n,
            column: 1,
            message: "expected `key: value`".into(),
        })?;
        match k.trim() {
            "ruled" => ruled = Some((n, v.trim().to_string())),
            "components" => {
                for item in v.split(',') {
                    let item = item.trim();
                    let (dm, times) = match item.split_once(" x") {
                        Some((a, t)) => (a, t.trim().parse::<usize>().ok()),
                        None => (item, Some(1)),
                    };
                    let (Ok((d, m)), Some(times)) = (pair(&dm.replace(':', ",")), times) else {
                        return Err(Error::Parse {
                            line: n,
                            column: 1,
                            message: format!("bad component `{item}`"),
                        });
                    };
                    components.extend(std::iter::repeat_n((d, m), times));
                }
            }
            _ => {
                surface_text.push_str(line);
                surface_text.push('\n');
            }
        }
    }
    let surface: Option<SurfaceNumerics> = if let Some((n, r)) = ruled {
        let v: Vec<i64> = r
            .split_whitespace()
            .map(|x| x.parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse {
                line: n,
                column: 1,
                message: "`ruled: e g a b` expects integers".into(),
            })?;
        let [e, g, a, b] = v[..] else {
            return Err(Error::Parse {
                line: n,
                column: 1,
                message: "`ruled: e g a b` expects four integers".into(),
            });
        };
        Some(numerics::RuledSurface::new(e, g).numerics(numerics::RuledClass::new(a, b))?)
    } else if surface_text.is_empty() {
        None
    } else {
        Some(SurfaceNumerics::parse(&surface_text)?)
    };
    let need = || surface.as_ref().ok_or_else(|| Error::Invalid("no surface numerics in the body".into()));
    let codeg: i64 = components.iter().map(|(d, _)| d).sum();
    let mut out = Vec::new();
    for Expected { key, value, .. } in &fx.expected {
        let v = value.as_str();
        out.push(match key.as_str() {
            "c2" => cmp_int(v, numerics::c2_jet_surface(need()?)),
            "codegree" => cmp_int(v, codeg),
            "identity" => cmp_bool(
                v,
                numerics::codegree_identity_check(&components, numerics::c2_jet_surface(need()?)),
            ),
            "tame" => cmp_bool(v, numerics::tame_check(codeg, numerics::c2_jet_surface(need()?))),
            "chi-l" => {
                let s = need()?;
                let chi = s.chi.ok_or_else(|| Error::Invalid("`chi-l` needs `chi`".into()))?;
                cmp_int(v, chi + (s.l2 - s.kl) / 2)
            }
            "l2" => cmp_int(v, need()?.l2),
            "planes" => cmp_int(v, components.iter().filter(|(d, _)| *d == 1).count() as i64),
            k if k.starts_with("dual-degree[") => {
                let (d, g) = pair(bracket(k, "dual-degree").unwrap_or(""))?;
                cmp_int(v, numerics::dual_degree_plane_curve(d, g))
            }
            k if k.starts_with("c2[") => {
                let (d, b) = pair(bracket(k, "c2").unwrap_or(""))?;
                let via_noether = numerics::c2_jet_surface(&cyclic_cover_numerics(d, b)?);
                let closed = numerics::c2_jet_cyclic(d, b).c2;
                if via_noether == closed {
                    cmp_int(v, closed)
                } else {
                    (format!("{closed} (Noether route gives {via_noether})"), false)
                }
            }
            k if k.starts_with("class[") => {
                let (d, b) = pair(bracket(k, "class").unwrap_or(""))?;
                cmp_int(v, numerics::c2_jet_cyclic(d, b).class)
            }
            k if k.starts_with("tame[") => {
                let (d, b) = pair(bracket(k, "tame").unwrap_or(""))?;
                let j = numerics::c2_jet_cyclic(d, b);
                cmp_bool(v, numerics::tame_check(j.class, j.c2))
            }
            k => return Err(Error::Invalid(format!("unknown check `{k}`"))),
        });
    }
    Ok(out)
}

fn segre(fx: &Fixture) -> Result<Vec<(String, bool)>> {
    let mut factors: Vec<Vec<StratumData>> = Vec::new();
    for (n, line) in content_lines(&fx.body) {
        let bad = |m: &str| Error::Parse {
            line: n,
            column: 1,
            message: m.to_string(),
        };
        let v = line.strip_prefix("factor:").ok_or_else(|| bad("expected `factor: ...`"))?.trim();
        let mut words = v.split_whitespace();
        let what = words.next().ok_or_else(|| bad("empty factor"))?;
        let args: BTreeMap<&str, i64> = words
            .filter_map(|w| w.split_once('='))
            .map(|(k, x)| x.parse().map(|x| (k, x)).map_err(|_| bad("bad integer")))
            .collect::<Result<_>>()?;
        let arg = |k: &str| args.get(k).copied().ok_or_else(|| bad(&format!("missing `{k}=`")));
        factors.push(match what {
            // a pencil of degree d on a curve of genus g with simple ramification
            "curve" => {
                let s = 2 * arg("g")? - 2 + 2 * arg("d")?;
                vec![StratumData::new(1, 1), StratumData::new(0, s as u64)]
            }
            "projective" => vec![StratumData::new(arg("n")?, 1)],
            _ => return Err(bad("factor is `curve g= d=` or `projective n=`")),
        });
    }
    let profile = numerics::product_jumping_profile(&factors);
    let show = |s: StratumData| dim_deg((s.dim, s.components));
    let mut out = Vec::new();
    for Expected { key, value, .. } in &fx.expected {
        let v = value.as_str();
        out.push(match key.as_str() {
            k if k.starts_with("jumping.") => {
                let i = index(k, "jumping.").ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                cmp_text(v, show(numerics::product_jumping_set(&profile, i)))
            }
            k if k.starts_with("stratum.") => {
                let i = index(k, "stratum.").ok_or_else(|| Error::Invalid(format!("bad key `{k}`")))?;
                cmp_text(v, show(profile.get(i).copied().unwrap_or(StratumData::EMPTY)))
            }
            k => return Err(Error::Invalid(format!("unknown check `{k}`"))),
        });
    }
    Ok(out)
}
