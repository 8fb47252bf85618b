//! Fixture roster: worked examples bundled with their expected values and
//! the oracle each value comes from.
//!
//! A fixture file has a header, a `[body]` in the input format of its kind
//! and an `[expected]` block of `key = value | oracle` lines:
//!
//! ```text
//! id: cone-web
//! kind: symbolic
//! origin: web of conics through a double cover of a quadric cone
//! rational: yes
//! [body]
//! ring: [u, x, y]
//! section: u^2
//! ...
//! [expected]
//! codegree = 3 | stated
//! ```

mod run;

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub use run::{cyclic_cover_numerics, run_all, run_fixture, CheckResult, FixtureReport, FixtureStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixtureKind {
    /// A linear system; checks on the discriminant report.
    Symbolic,
    /// A projective variety; checks on its dual.
    Dual,
    /// A binary pencil or a rational normal curve projection.
    Curve,
    /// A cover `F(y; s, t) = 0` of the line.
    Cover,
    /// Surface invariants and closed forms.
    Numeric,
    /// Jumping profiles of Segre products.
    Segre,
    /// Documentation only; nothing is computed.
    Note,
}

impl FixtureKind {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "symbolic" => FixtureKind::Symbolic,
            "dual" => FixtureKind::Dual,
            "curve" => FixtureKind::Curve,
            "cover" => FixtureKind::Cover,
            "numeric" => FixtureKind::Numeric,
            "segre" => FixtureKind::Segre,
            "note" => FixtureKind::Note,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            FixtureKind::Symbolic => "symbolic",
            FixtureKind::Dual => "dual",
            FixtureKind::Curve => "curve",
            FixtureKind::Cover => "cover",
            FixtureKind::Numeric => "numeric",
            FixtureKind::Segre => "segre",
            FixtureKind::Note => "note",
        }
    }

    /// Check keys understood for this kind; a trailing `.` or `[` marks a
    /// parametrized family.
    fn keys(&self) -> &'static [&'static str] {
        match self {
            FixtureKind::Symbolic => &[
                "empty",
                "equation",
                "dimension",
                "codegree",
                "defect",
                "hyperplanes",
                "residual-degree",
                "residual-irreducible",
                "jumping-dim.",
                "jumping-eq.",
                "stratum.",
                "stratum-dim.",
                "pencil-sum",
                "pencil-cn",
                "pencil-holds",
                "milnor[",
                "singular-degree",
                "flexes-through[",
            ],
            FixtureKind::Dual => &[
                "dual-degree",
                "dual-dimension",
                "dual-equation",
                "bidual",
                "formula-degree[",
                "flexes-through[",
            ],
            FixtureKind::Curve => &["branch-values", "profiles", "ramification-points", "wronskian-degree"],
            FixtureKind::Cover => &["branch-values", "profiles"],
            FixtureKind::Numeric => &[
                "c2",
                "codegree",
                "identity",
                "tame",
                "chi-l",
                "l2",
                "planes",
                "dual-degree[",
                "c2[",
                "class[",
                "tame[",
            ],
            FixtureKind::Segre => &["jumping.", "stratum."],
            FixtureKind::Note => &[],
        }
    }

    fn accepts(&self, key: &str) -> bool {
        self.keys().iter().any(|k| {
            if k.ends_with('.') || k.ends_with('[') {
                key.starts_with(k) && key.len() > k.len()
            } else {
                key == *k
            }
        })
    }
}

/// Names of the oracles an expected value may cite.
pub const ORACLES: &[&str] = &["stated", "closed-form", "hand", "elimination", "count"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub key: String,
    pub value: String,
    pub oracle: String,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub id: String,
    pub kind: FixtureKind,
    pub origin: String,
    /// Feasible over the rationals.
    pub rational: bool,
    pub seed: u64,
    pub body: String,
    /// Line number of the first body line.
    pub body_line: usize,
    pub expected: Vec<Expected>,
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column: 1,
        message: message.into(),
    }
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Self> {
        #[derive(PartialEq)]
        enum Part {
            Header,
            Body,
            Expected,
        }
        let mut part = Part::Header;
        let (mut id, mut kind, mut origin, mut rational, mut seed) = (None, None, None, false, 1u64);
        let mut body = String::new();
        let mut body_line = 0;
        let mut expected = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let n = i + 1;
            let line = raw.trim();
            match line {
                "[body]" => {
                    part = Part::Body;
                    body_line = n + 1;
                    continue;
                }
                "[expected]" => {
                    part = Part::Expected;
                    continue;
                }
                _ => {}
            }
            match part {
                Part::Body => {
                    body.push_str(raw);
                    body.push('\n');
                }
                _ if line.is_empty() || line.starts_with('#') => {}
                Part::Header => {
                    let (k, v) = line.split_once(':').ok_or_else(|| perr(n, "expected `key: value`"))?;
                    let v = v.trim();
                    match k.trim() {
                        "id" => id = Some(v.to_string()),
                        "kind" => kind = Some(FixtureKind::parse(v).ok_or_else(|| perr(n, format!("unknown kind `{v}`")))?),
                        "origin" => origin = Some(v.to_string()),
                        "rational" => {
                            rational = match v {
                                "yes" => true,
                                "no" => false,
                                _ => return Err(perr(n, "`rational` is `yes` or `no`")),
                            }
                        }
                        "seed" => seed = v.parse().map_err(|_| perr(n, "bad seed"))?,
                        other => return Err(perr(n, format!("unknown header key `{other}`"))),
                    }
                }
                Part::Expected => {
                    let (kv, oracle) = line
                        .rsplit_once('|')
                        .ok_or_else(|| perr(n, "expected value without an oracle (`key = value | oracle`)"))?;
                    let (k, v) = kv.split_once('=').ok_or_else(|| perr(n, "expected `key = value`"))?;
                    let oracle = oracle.trim();
                    if !ORACLES.contains(&oracle) {
                        return Err(perr(n, format!("unknown oracle `{oracle}`")));
                    }
                    expected.push(Expected {
                        key: k.trim().to_string(),
                        value: v.trim().to_string(),
                        oracle: oracle.to_string(),
                        line: n,
                    });
                }
            }
        }
        let id = id.ok_or_else(|| perr(1, "missing `id`"))?;
        let kind = kind.ok_or_else(|| perr(1, "missing `kind`"))?;
        let origin = origin.ok_or_else(|| perr(1, "missing `origin`"))?;
        for e in &expected {
            if !kind.accepts(&e.key) {
                return Err(perr(e.line, format!("`{}` is not a {} check", e.key, kind.as_str())));
            }
        }
        if kind != FixtureKind::Note && expected.is_empty() {
            return Err(perr(1, "fixture has no expected values"));
        }
        Ok(Fixture {
            id,
            kind,
            origin,
            rational,
            seed,
            body,
            body_line,
            expected,
        })
    }
}

const SOURCES: &[&str] = &[
    include_str!("fixtures/identity-pn.fix"),
    include_str!("fixtures/fermat-n1-m2.fix"),
    include_str!("fixtures/fermat-n1-m3.fix"),
    include_str!("fixtures/fermat-n2-m2.fix"),
    include_str!("fixtures/fermat-n2-m3.fix"),
    include_str!("fixtures/steiner-web.fix"),
    include_str!("fixtures/steiner-web-literal.fix"),
    include_str!("fixtures/cone-web.fix"),
    include_str!("fixtures/complete-conics.fix"),
    include_str!("fixtures/veronese-dual.fix"),
    include_str!("fixtures/net-generic.fix"),
    include_str!("fixtures/net-special.fix"),
    include_str!("fixtures/net-trilateral.fix"),
    include_str!("fixtures/net-tangent.fix"),
    include_str!("fixtures/cubic-flex-projection.fix"),
    include_str!("fixtures/plane-cubic-dual.fix"),
    include_str!("fixtures/nodal-cubic-dual.fix"),
    include_str!("fixtures/rnc-projection-r3.fix"),
    include_str!("fixtures/monomial-pencil-r4.fix"),
    include_str!("fixtures/hyperelliptic-g2.fix"),
    include_str!("fixtures/delpezzo-degree-one.fix"),
    include_str!("fixtures/cyclic-cover-grid.fix"),
    include_str!("fixtures/elliptic-scroll.fix"),
    include_str!("fixtures/symmetric-product.fix"),
    include_str!("fixtures/kummer-numeric.fix"),
    include_str!("fixtures/segre-product.fix"),
    include_str!("fixtures/segre-curve-line.fix"),
    include_str!("fixtures/cyclic-product-note.fix"),
    include_str!("fixtures/cuspidal-product-note.fix"),
];

/// All bundled fixtures, in roster order.
pub fn roster() -> Vec<Fixture> {
    let list: Vec<Fixture> = SOURCES
        .iter()
        .map(|s| Fixture::parse(s).expect("bundled fixtures parse"))
        .collect();
    let ids: BTreeSet<&str> = list.iter().map(|f| f.id.as_str()).collect();
    assert_eq!(ids.len(), list.len(), "fixture ids are unique");
    list
}

pub fn get(id: &str) -> Result<Fixture> {
    roster()
        .into_iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::UnknownFixture(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    #[test]
    fn roster_parses() {
        let r = roster();
        assert!(r.len() >= 25);
        assert!(r.iter().all(|f| f.expected.iter().all(|e| ORACLES.contains(&e.oracle.as_str()))));
    }

    #[test]
    fn header_errors() {
        let e = Fixture::parse("id: x\nkind: symbolic\norigin: o\n[expected]\ncodegree = 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }));
        let e = Fixture::parse("id: x\nkind: dual\norigin: o\n[expected]\ncodegree = 3 | stated\n").unwrap_err();
        assert!(e.to_string().contains("not a dual check"));
        assert!(Fixture::parse("id: x\nkind: bogus\n").is_err());
    }

    #[test]
    fn roster_passes_mod_p() {
        for (id, r) in run_all::<Fp<32003>>(None) {
            let r = r.unwrap_or_else(|e| panic!("{id}: {e}"));
            assert!(r.status.ok(), "{}", r.to_report());
        }
    }

    #[test]
    fn wrong_expectation_fails() {
        let mut fx = get("cone-web").unwrap();
        fx.expected[0].value = "l*(m*e + n^2)".into();
        let r = run_fixture::<Fp<32003>>(&fx, None).unwrap();
        assert_eq!(r.status, FixtureStatus::Fail);
        assert!(!r.checks[0].pass && r.checks[1..].iter().all(|c| c.pass));
    }

    #[test]
    fn body_errors_carry_fixture_context() {
        let text = "id: broken\nkind: symbolic\norigin: o\nrational: yes\n[body]\nring: [x, y]\nsection: x^2 + q\n[expected]\ncodegree = 2 | hand\n";
        let fx = Fixture::parse(text).unwrap();
        match run_fixture::<Rational>(&fx, None).unwrap_err() {
            Error::Fixture { id, source } => {
                assert_eq!(id, "broken");
                assert!(matches!(*source, Error::Parse { line: 7, .. }), "{source:?}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn prime_only_fixtures_skip_over_q() {
        let mut fx = get("steiner-web").unwrap();
        fx.rational = false;
        let r = run_fixture::<Rational>(&fx, None).unwrap();
        assert!(matches!(r.status, FixtureStatus::Skipped(_)));
    }
}
