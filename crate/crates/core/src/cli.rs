//! Command-line front end. [`run`] parses arguments, picks the coefficient
//! field and prints one report per command.
//!
//! Exit codes: `0` success, `1` a check failed (including degenerate
//! pencils and failing fixtures), `2` bad input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::catalog::{self, run_fixture, Fixture, FixtureStatus};
use crate::duality::{
    bidual_check, cover_branch, discriminant, dual_variety, flexes_with_tangent_through, jumping_sets, milnor,
    milnor_at, pencil_verify, rnc_projection_pencil, strata, BranchLocus, LinearSystem, Locus, WronskianReport,
};
use crate::error::{Error, Result};
use crate::field::{Field, Fp, Rational};
use crate::ideals::{content_lines, parse_ideal, parse_ring_header, Ideal};
use crate::numerics::{self, RuledClass, RuledSurface, SurfaceNumerics};
use crate::polyring::{parse_polynomial, Polynomial, Ring, RingRef};
use crate::report::Report;

/// Environment variable overriding the default field.
pub const FIELD_ENV: &str = "DISCLOCI_FIELD";

/// Primes available for `--field gf:<p>`.
pub const PRIMES: &[u32] = &[101, 7919, 10007, 32003, 65521, 65537, 1_000_003, 2_147_483_647];

#[derive(Parser, Debug)]
#[command(name = "discloci", version, about = "Discriminant loci, dual varieties and jumping sets")]
struct Cli {
    /// Coefficient field: `q` or `gf:<p>`.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Seed for random pencils, coordinate changes and witnesses.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Append a `key: value` block for scripts.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Dual variety of the projective variety in an ideal file.
    Dual {
        input: PathBuf,
        /// Plane curves: compute the dual of the dual.
        #[arg(long)]
        bidual: bool,
        /// Plane curves: flexes whose tangent passes through a point `a:b:c`.
        #[arg(long, value_name = "POINT")]
        flexes_through: Option<String>,
    },
    /// Discriminant locus of a linear system file.
    Discriminant { input: PathBuf },
    /// Jumping sets of a linear system on projective space.
    JumpingSets { input: PathBuf },
    /// Strata of the discriminant indexed by the jumping sets.
    Strata { input: PathBuf },
    /// Degree of the discriminant locus.
    Codegree { input: PathBuf },
    /// Milnor number of an affine polynomial at the origin, or of a form at a
    /// projective point.
    Milnor {
        poly: String,
        #[arg(long, value_name = "POINT")]
        at: Option<String>,
        /// Comma separated variable order; inferred when absent.
        #[arg(long)]
        vars: Option<String>,
    },
    /// Milnor numbers along a general pencil of the system.
    PencilVerify { input: PathBuf },
    /// Branch data of a binary pencil `f, g`, a cover `--cover`, or the
    /// rational normal curve projection `--rnc r`.
    Wronskian {
        polys: Vec<String>,
        #[arg(long)]
        cover: Option<String>,
        #[arg(long, default_value = "y")]
        fibre: String,
        #[arg(long)]
        rnc: Option<u32>,
        #[arg(long)]
        vars: Option<String>,
    },
    /// Jet bundle invariants of a polarized surface.
    Invariants {
        input: Option<PathBuf>,
        /// Ruled surface `e g a b` with L = a C0 + b f.
        #[arg(long, num_args = 4, allow_hyphen_values = true, value_names = ["E", "G", "A", "B"])]
        ruled: Option<Vec<i64>>,
        /// Cyclic plane `d b`.
        #[arg(long, num_args = 2, value_names = ["D", "B"])]
        cyclic: Option<Vec<i64>>,
    },
    /// Brute-force scan of the codegree-two inequality on P^1-bundles.
    Scan6 {
        #[arg(long, default_value_t = 5)]
        e_max: i64,
        #[arg(long, default_value_t = 6)]
        a_max: i64,
        #[arg(long, default_value_t = 40)]
        b_max: i64,
    },
    /// Runs one fixture, by id or path.
    Fixture { target: String },
    /// Runs the whole roster.
    FixtureAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Q,
    Gf(u32),
}

impl FieldChoice {
    /// Accepts `q`, `QQ`, `gf:<p>` and `GF(<p>)`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
            return Ok(FieldChoice::Q);
        }
        let p = t
            .strip_prefix("gf:")
            .or_else(|| t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::Invalid(format!("unknown field `{t}` (use `q` or `gf:<p>`)")))?;
        let p: u32 = p.trim().parse().map_err(|_| Error::Invalid(format!("bad prime `{p}`")))?;
        if !PRIMES.contains(&p) {
            let list = PRIMES.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ");
            return Err(Error::Invalid(format!("prime {p} not available; choose one of {list}")));
        }
        Ok(FieldChoice::Gf(p))
    }
}

/// Flag, then file header, then environment, then GF(32003).
fn resolve_field(flag: Option<&str>, header: Option<&str>) -> Result<FieldChoice> {
    if let Some(f) = flag {
        return FieldChoice::parse(f);
    }
    if let Some(h) = header {
        return FieldChoice::parse(h);
    }
    if let Ok(e) = std::env::var(FIELD_ENV) {
        if !e.trim().is_empty() {
            return FieldChoice::parse(&e);
        }
    }
    Ok(FieldChoice::Gf(32003))
}

macro_rules! dispatch {
    ($choice:expr, $f:ident ( $($arg:expr),* )) => {
        match $choice {
            FieldChoice::Q => $f::<Rational>($($arg),*),
            FieldChoice::Gf(101) => $f::<Fp<101>>($($arg),*),
            FieldChoice::Gf(7919) => $f::<Fp<7919>>($($arg),*),
            FieldChoice::Gf(10007) => $f::<Fp<10007>>($($arg),*),
            FieldChoice::Gf(32003) => $f::<Fp<32003>>($($arg),*),
            FieldChoice::Gf(65521) => $f::<Fp<65521>>($($arg),*),
            FieldChoice::Gf(65537) => $f::<Fp<65537>>($($arg),*),
            FieldChoice::Gf(1_000_003) => $f::<Fp<1_000_003>>($($arg),*),
            FieldChoice::Gf(2_147_483_647) => $f::<Fp<2_147_483_647>>($($arg),*),
            FieldChoice::Gf(p) => Err(Error::Invalid(format!("prime {p} not available"))),
        }
    };
}

/// Outcome of one command: reports to print and whether every check held.
struct Outcome {
    reports: Vec<Report>,
    pass: bool,
}

impl Outcome {
    fn one(r: Report) -> Self {
        Outcome { reports: vec![r], pass: true }
    }
}

/// Runs the command line `args` (program name first), writing reports to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            for r in &o.reports {
                let _ = out.write_all(r.render(cli.machine).as_bytes());
            }
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegeneratePencil { .. } => 1,
        Error::Fixture { source, .. } => match **source {
            Error::Parse { .. } => 2,
            _ => 1,
        },
        _ => 2,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

/// Field named in the ring header of an input file, if any.
fn header_field(text: &str) -> Result<Option<String>> {
    for (i, (n, line)) in content_lines(text).enumerate() {
        let t = line.trim();
        if t.starts_with("ring:") || (i == 0 && t.contains('[')) {
            return Ok(parse_ring_header(t, n)?.field);
        }
    }
    Ok(None)
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let flag = cli.field.as_deref();
    let seed = cli.seed;
    let file = |p: &PathBuf| -> Result<(String, FieldChoice)> {
        let text = read(p)?;
        let f = resolve_field(flag, header_field(&text)?.as_deref())?;
        Ok((text, f))
    };
    match &cli.cmd {
        Cmd::Dual {
            input,
            bidual,
            flexes_through,
        } => {
            let (text, f) = file(input)?;
            dispatch!(f, dual_cmd(&text, *bidual, flexes_through.as_deref(), seed.unwrap_or(1)))
        }
        Cmd::Discriminant { input } => {
            let (text, f) = file(input)?;
            dispatch!(f, discriminant_cmd(&text)).map(Outcome::one)
        }
        Cmd::JumpingSets { input } => {
            let (text, f) = file(input)?;
            dispatch!(f, jumping_cmd(&text)).map(Outcome::one)
        }
        Cmd::Strata { input } => {
            let (text, f) = file(input)?;
            dispatch!(f, strata_cmd(&text)).map(Outcome::one)
        }
        Cmd::Codegree { input } => {
            let (text, f) = file(input)?;
            dispatch!(f, codegree_cmd(&text)).map(Outcome::one)
        }
        Cmd::Milnor { poly, at, vars } => {
            let f = resolve_field(flag, None)?;
            dispatch!(f, milnor_cmd(poly, at.as_deref(), vars.as_deref())).map(Outcome::one)
        }
        Cmd::PencilVerify { input } => {
            let (text, f) = file(input)?;
            dispatch!(f, pencil_cmd(&text, seed.unwrap_or(1)))
        }
        Cmd::Wronskian {
            polys,
            cover,
            fibre,
            rnc,
            vars,
        } => {
            let f = resolve_field(flag, None)?;
            dispatch!(
                f,
                wronskian_cmd(polys, cover.as_deref(), fibre, *rnc, vars.as_deref(), seed.unwrap_or(1))
            )
            .map(Outcome::one)
        }
        Cmd::Invariants { input, ruled, cyclic } => invariants_cmd(input.as_deref(), ruled.as_deref(), cyclic.as_deref()),
        Cmd::Scan6 { e_max, a_max, b_max } => Ok(Outcome::one(scan6_cmd(*e_max, *a_max, *b_max))),
        Cmd::Fixture { target } => {
            let fx = if Path::new(target).is_file() {
                Fixture::parse(&read(Path::new(target))?)?
            } else {
                catalog::get(target)?
            };
            let f = resolve_field(flag, None)?;
            let r = dispatch!(f, run_fixture(&fx, seed))?;
            Ok(Outcome {
                pass: r.status.ok(),
                reports: vec![r.to_report()],
            })
        }
        Cmd::FixtureAll => {
            let f = resolve_field(flag, None)?;
            dispatch!(f, fixture_all_cmd(seed))
        }
    }
}

fn show_locus<F: Field>(l: &Locus<F>) -> String {
    match l {
        Locus::Empty => "empty".into(),
        Locus::Hypersurface(p) => p.normalized().to_string(),
        Locus::General(i) => show_ideal(i),
    }
}

fn show_ideal<F: Field>(i: &Ideal<F>) -> String {
    if i.is_unit() {
        return "empty".into();
    }
    if i.is_zero() {
        return "whole space".into();
    }
    let gens: Vec<String> = i.reduced().generators().iter().map(|g| g.normalized().to_string()).collect();
    format!("<{}>", gens.join(", "))
}

fn show_point<F: Field>(p: &[F]) -> String {
    p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(":")
}

fn parse_point<F: Field>(text: &str) -> Result<Vec<F>> {
    text.split(':')
        .map(|s| {
            let s = s.trim();
            let q: Rational = s.parse().map_err(|_| Error::Invalid(format!("bad coordinate `{s}`")))?;
            F::from_rational(&q).ok_or_else(|| Error::Invalid(format!("`{s}` is not defined in {}", F::name())))
        })
        .collect()
}

fn dual_cmd<F: Field>(text: &str, bidual: bool, through: Option<&str>, seed: u64) -> Result<Outcome> {
    let x = parse_ideal::<F>(text)?;
    let dv = dual_variety(&x, None)?;
    let mut r = Report::new("dual variety");
    r.field("field", F::name())
        .field("dual-ring", dv.ring.names().join(", "))
        .field("dual", show_locus(&dv.locus))
        .field("dimension", dv.dimension)
        .field("degree", dv.degree);
    let mut pass = true;
    let curve = || match x.generators() {
        [f] if x.ring().nvars() == 3 => Ok(f.clone()),
        _ => Err(Error::Invalid("expected a plane curve given by one equation".into())),
    };
    if bidual {
        let b = bidual_check(&curve()?, seed)?;
        r.field("bidual", b.bidual.normalized()).field("bidual-holds", b.holds);
        pass &= b.holds;
    }
    if let Some(p) = through {
        let pts = flexes_with_tangent_through(&curve()?, &parse_point::<F>(p)?)?;
        r.field("flexes-through", pts.len());
        for p in &pts {
            r.line(format!("  flex ({})", show_point(p)));
        }
    }
    Ok(Outcome { reports: vec![r], pass })
}

fn discriminant_cmd<F: Field>(text: &str) -> Result<Report> {
    let sys = LinearSystem::<F>::parse(text)?;
    let rep = discriminant(&sys)?;
    let dual = sys.dual_ring();
    let mut r = Report::new("discriminant");
    r.field("field", F::name()).field("dual-ring", dual.names().join(", "));
    match &rep.equation {
        Some(e) => r.field("equation", e.normalized()),
        None => r.field("locus", show_locus(&rep.locus)),
    };
    r.field("dimension", rep.dimension)
        .field("codegree", rep.codegree)
        .field("defect", rep.defect);
    if let Some(h) = &rep.hyperplanes {
        r.field("hyperplanes", rep.hyperplane_count());
        for f in &h.forms {
            r.line(format!("  hyperplane {}", f.normalized()));
        }
    }
    if let Some(res) = &rep.residual {
        r.field("residual", res.equation.normalized())
            .field("residual-degree", res.degree)
            .field("residual-irreducible", res.irreducible);
    }
    for (i, l) in &rep.strata {
        let (d, g) = l.dimension_degree(&dual);
        r.field(&format!("stratum.{i}"), show_locus(l));
        r.hidden(&format!("stratum.{i}.dim"), d).hidden(&format!("stratum.{i}.degree"), g);
    }
    Ok(r)
}

fn jumping_cmd<F: Field>(text: &str) -> Result<Report> {
    let sys = LinearSystem::<F>::parse(text)?;
    let j = jumping_sets(&sys)?;
    let mut r = Report::new("jumping sets");
    r.field("field", F::name());
    for s in &j.sets {
        let shown = if s.empty { "empty".to_string() } else { show_ideal(&s.ideal) };
        r.field(&format!("J{}", s.index), shown);
        r.field(&format!("J{}.dim", s.index), s.dimension)
            .field(&format!("X{}.dim", s.index), s.stratum_dimension);
    }
    r.field("top", j.top());
    Ok(r)
}

fn strata_cmd<F: Field>(text: &str) -> Result<Report> {
    let sys = LinearSystem::<F>::parse(text)?;
    let j = jumping_sets(&sys)?;
    let st = strata(&sys, &j)?;
    let dual = sys.dual_ring();
    let mut r = Report::new("strata");
    r.field("field", F::name()).field("dual-ring", dual.names().join(", "));
    for (i, l) in &st {
        let (d, g) = l.dimension_degree(&dual);
        r.field(&format!("D{i}"), show_locus(l))
            .field(&format!("D{i}.dim"), d)
            .field(&format!("D{i}.degree"), g);
    }
    Ok(r)
}

fn codegree_cmd<F: Field>(text: &str) -> Result<Report> {
    let sys = LinearSystem::<F>::parse(text)?;
    let rep = crate::duality::discriminant_basic(&sys)?;
    let mut r = Report::new("codegree");
    r.field("field", F::name()).field("codegree", rep.codegree);
    Ok(r)
}

/// Identifiers in a polynomial, in order of first appearance.
fn infer_vars(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut cur = String::new();
    let mut flush = |cur: &mut String| {
        if !cur.is_empty() && !out.contains(cur) {
            out.push(cur.clone());
        }
        cur.clear();
    };
    for ch in text.chars() {
        if ch.is_ascii_alphabetic() || ch == '_' || (!cur.is_empty() && ch.is_ascii_digit()) {
            cur.push(ch);
        } else {
            flush(&mut cur);
        }
    }
    flush(&mut cur);
    out
}

fn ring_for(text: &str, vars: Option<&str>) -> Result<RingRef> {
    let names: Vec<String> = match vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => {
            let mut v = infer_vars(text);
            v.sort();
            v
        }
    };
    if names.is_empty() {
        return Err(Error::Invalid("no variables; pass `--vars`".into()));
    }
    Ring::grevlex(&names)
}

fn milnor_cmd<F: Field>(poly: &str, at: Option<&str>, vars: Option<&str>) -> Result<Report> {
    let ring = ring_for(poly, vars)?;
    let f = parse_polynomial::<F>(&ring, poly)?;
    let m = match at {
        Some(p) => milnor_at(&f, &parse_point::<F>(p)?)?,
        None => milnor(&f),
    };
    let mut r = Report::new("milnor number");
    r.field("field", F::name()).field("ring", ring.names().join(", "));
    if at.is_some() {
        r.field("point", show_point(&m.point));
    }
    match m.milnor {
        Some(mu) => r.field("milnor", mu),
        None => r.field("milnor", "infinite"),
    };
    Ok(r)
}

fn pencil_cmd<F: Field>(text: &str, seed: u64) -> Result<Outcome> {
    let sys = LinearSystem::<F>::parse(text)?;
    let p = pencil_verify(&sys, seed)?;
    let mut r = Report::new("pencil check");
    r.field("field", F::name())
        .field("seed", seed)
        .field("attempts", p.attempts)
        .field("codegree", p.codegree);
    for m in &p.members {
        r.line(format!("  member at t = {}: milnor sum {}", m.parameter, m.milnor_sum));
    }
    if p.conjugate.0 > 0 {
        r.line(format!(
            "  {} conjugate members: milnor sum {}",
            p.conjugate.0, p.conjugate.1
        ));
    }
    r.field("milnor-sum", p.milnor_sum)
        .field("scheme-total", p.scheme_total)
        .field("cn", p.cn)
        .field("holds", p.holds);
    Ok(Outcome {
        pass: p.holds,
        reports: vec![r],
    })
}

fn branch_lines<F: Field>(r: &mut Report, b: &BranchLocus<F>) {
    r.field("branch-form", b.form.normalized()).field("branch-values", b.codegree);
    for v in &b.values {
        let prof = v.profile.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
        r.line(format!("  value ({}): profile {}", show_point(&v.value), prof));
    }
    if b.unresolved > 0 {
        r.field("unresolved-values", b.unresolved);
    }
}

fn wronskian_cmd<F: Field>(
    polys: &[String],
    cover: Option<&str>,
    fibre: &str,
    rnc: Option<u32>,
    vars: Option<&str>,
    seed: u64,
) -> Result<Report> {
    let mut r = Report::new("branch data");
    r.field("field", F::name());
    let w: WronskianReport<F> = match (polys, cover, rnc) {
        ([], Some(c), None) => {
            let ring = ring_for(c, vars)?;
            let f = parse_polynomial::<F>(&ring, c)?;
            let b = cover_branch(&f, ring.var_index(fibre)?)?;
            branch_lines(&mut r, &b);
            return Ok(r);
        }
        ([], None, Some(deg)) => {
            let ring = Ring::grevlex(&["s", "t"])?;
            let (f, g, w) = rnc_projection_pencil::<F>(&ring, deg, seed)?;
            r.field("f", f.normalized()).field("g", g.normalized());
            w
        }
        ([f, g], None, None) => {
            let ring = ring_for(&format!("{f} {g}"), vars)?;
            if ring.nvars() != 2 {
                return Err(Error::Invalid(format!(
                    "a pencil on the line needs two variables, found {}",
                    ring.names().join(", ")
                )));
            }
            let f: Polynomial<F> = parse_polynomial(&ring, f)?;
            let g: Polynomial<F> = parse_polynomial(&ring, g)?;
            crate::duality::wronskian_branch(&f, &g)?
        }
        _ => {
            return Err(Error::Invalid(
                "give two binary forms, or `--cover F`, or `--rnc r`".into(),
            ))
        }
    };
    r.field("degree", w.degree).field("wronskian", w.wronskian.normalized());
    r.field(
        "ramification-points",
        w.ramification.len() as u64 + w.unresolved_ramification,
    );
    branch_lines(&mut r, &w.branch);
    Ok(r)
}

fn surface_report(title: &str, s: &SurfaceNumerics) -> Report {
    let mut r = Report::new(title);
    r.field("e", s.e)
        .field("K2", s.k2)
        .field("KL", s.kl)
        .field("L2", s.l2)
        .field("q", s.q)
        .field("g", s.g);
    if let Some(c) = s.chi {
        r.field("chi", c).field("chi-L", c + (s.l2 - s.kl) / 2);
    }
    r.field("c2", numerics::c2_jet_surface(s));
    r
}

fn invariants_cmd(input: Option<&Path>, ruled: Option<&[i64]>, cyclic: Option<&[i64]>) -> Result<Outcome> {
    let r = match (input, ruled, cyclic) {
        (Some(p), None, None) => surface_report("surface invariants", &SurfaceNumerics::parse(&read(p)?)?),
        (None, Some(&[e, g, a, b]), None) => {
            let s = RuledSurface::new(e, g);
            let l = RuledClass::new(a, b);
            let mut r = surface_report("ruled surface", &s.numerics(l)?);
            r.field("L", l);
            r
        }
        (None, None, Some(&[d, b])) => {
            if d < 2 || b < 1 {
                return Err(Error::Invalid("cyclic planes need d >= 2 and b >= 1".into()));
            }
            let s = catalog::cyclic_cover_numerics(d, b)?;
            let j = numerics::c2_jet_cyclic(d, b);
            let mut r = surface_report("cyclic plane", &s);
            r.field("class", j.class)
                .field("multiplier", j.multiplier)
                .field("tame", numerics::tame_check(j.class, j.c2));
            r
        }
        _ => return Err(Error::Invalid("give a file, or `--ruled e g a b`, or `--cyclic d b`".into())),
    };
    Ok(Outcome::one(r))
}

fn scan6_cmd(e_max: i64, a_max: i64, b_max: i64) -> Report {
    let hits = numerics::scan_codegree_two(e_max, a_max, b_max);
    let mut r = Report::new("codegree-two scan");
    r.field("bounds", format!("e <= {e_max}, a <= {a_max}, b <= {b_max}"))
        .field("survivors", hits.len());
    let mut unexplained = 0;
    for &(e, a, b) in &hits {
        let fam = match numerics::CodegreeTwoFamily::of(e, a, b) {
            Some(f) => format!("{f:?}"),
            None => {
                unexplained += 1;
                "outside".to_string()
            }
        };
        r.line(format!("  (e, a, b) = ({e}, {a}, {b}): {fam}"));
    }
    r.field("outside-families", unexplained);
    r
}

fn fixture_all_cmd<F: Field>(seed: Option<u64>) -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut pass = true;
    let (mut ok, mut failed, mut skipped) = (0, 0, 0);
    for (id, res) in catalog::run_all::<F>(seed) {
        match res {
            Ok(rep) => {
                match rep.status {
                    FixtureStatus::Fail => failed += 1,
                    FixtureStatus::Skipped(_) => skipped += 1,
                    _ => ok += 1,
                }
                pass &= rep.status.ok();
                reports.push(rep.to_report());
            }
            Err(e) => {
                failed += 1;
                pass = false;
                let mut r = Report::new(format!("fixture {id}"));
                r.field("fixture", &id).field("status", "error").field("error", e);
                reports.push(r);
            }
        }
    }
    let mut s = Report::new("roster");
    s.field("field", F::name())
        .field("passed", ok)
        .field("failed", failed)
        .field("skipped", skipped);
    reports.push(s);
    Ok(Outcome { reports, pass })
}
