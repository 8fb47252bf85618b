//! Linear systems of homogeneous polynomials on projective space or on a
//! hypersurface.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideals::{parse_ring_header, Ideal};
use crate::ideals::RingHeader;
use crate::linalg;
use crate::polyring::{parse_polynomial_at, Monomial, Polynomial, Ring, RingRef};

/// Where the sections live.
#[derive(Clone, Debug)]
pub enum Source<F: Field> {
    /// All of `P^n`.
    Projective,
    /// The hypersurface `V(F)`.
    Hypersurface(Polynomial<F>),
}

/// Sections `s_0, .., s_N` of equal degree spanning `V`.
#[derive(Clone, Debug)]
pub struct LinearSystem<F: Field> {
    ring: RingRef,
    source: Source<F>,
    sections: Vec<Polynomial<F>>,
    dual_names: Vec<String>,
    field_hint: Option<String>,
}

impl<F: Field> LinearSystem<F> {
    /// Validates homogeneity, common degree and linear independence (modulo
    /// the hypersurface equation when there is one). Dual coordinates default
    /// to `l0, .., lN`.
    pub fn new(
        ring: &RingRef,
        source: Source<F>,
        sections: Vec<Polynomial<F>>,
        dual_names: Option<Vec<String>>,
    ) -> Result<Self> {
        if sections.len() < 2 {
            return Err(Error::Invalid("a linear system needs at least two sections".into()));
        }
        let sections = sections
            .into_iter()
            .map(|s| s.with_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        let mut degree = None;
        for s in &sections {
            if s.is_zero() {
                return Err(Error::Invalid("zero section".into()));
            }
            let d = s.homogeneous_degree()?;
            if d == 0 {
                return Err(Error::Invalid("sections must have positive degree".into()));
            }
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(Error::Invalid(format!(
                        "sections have different degrees {e} and {d}"
                    )))
                }
                _ => {}
            }
        }
        let source = match source {
            Source::Projective => Source::Projective,
            Source::Hypersurface(f) => {
                let f = f.with_ring(ring)?;
                f.homogeneous_degree()?;
                if f.is_constant() {
                    return Err(Error::Invalid("hypersurface equation is constant".into()));
                }
                Source::Hypersurface(f)
            }
        };
        let count = sections.len();
        let dual_names = match dual_names {
            Some(d) => d,
            None => {
                let base = if ring.names().iter().any(|n| n.starts_with('l')) {
                    "dual"
                } else {
                    "l"
                };
                Ring::indexed(base, count)
            }
        };
        if dual_names.len() != count {
            return Err(Error::Invalid(format!(
                "{} dual coordinates for {} sections",
                dual_names.len(),
                count
            )));
        }
        if dual_names.iter().any(|d| ring.names().contains(d)) {
            return Err(Error::Invalid(
                "dual coordinates must differ from source coordinates".into(),
            ));
        }
        Ring::grevlex(&dual_names)?;
        let sys = LinearSystem {
            ring: ring.clone(),
            source,
            sections,
            dual_names,
            field_hint: None,
        };
        let rank = sys.section_rank();
        if rank < count {
            return Err(Error::DependentSections { rank, count });
        }
        Ok(sys)
    }

    /// Rank of the coefficient matrix of the sections (reduced modulo the
    /// hypersurface equation).
    fn section_rank(&self) -> usize {
        let reduced: Vec<Polynomial<F>> = match &self.source {
            Source::Projective => self.sections.clone(),
            Source::Hypersurface(f) => {
                let i = Ideal::from_generators(&self.ring, vec![f.clone()]);
                self.sections.iter().map(|s| i.normal_form(s)).collect()
            }
        };
        let mut monos: Vec<Monomial> = reduced
            .iter()
            .flat_map(|s| s.terms().iter().map(|t| t.0))
            .collect();
        monos.sort();
        monos.dedup();
        let rows: Vec<Vec<F>> = reduced
            .iter()
            .map(|s| monos.iter().map(|m| s.coefficient(m)).collect())
            .collect();
        linalg::rank(&rows)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn source(&self) -> &Source<F> {
        &self.source
    }

    pub fn hypersurface(&self) -> Option<&Polynomial<F>> {
        match &self.source {
            Source::Projective => None,
            Source::Hypersurface(f) => Some(f),
        }
    }

    pub fn is_projective_space(&self) -> bool {
        matches!(self.source, Source::Projective)
    }

    pub fn sections(&self) -> &[Polynomial<F>] {
        &self.sections
    }

    pub fn dual_names(&self) -> &[String] {
        &self.dual_names
    }

    /// Field named in the input header, if any.
    pub fn field_hint(&self) -> Option<&str> {
        self.field_hint.as_deref()
    }

    /// Dimension of the source variety.
    pub fn dim(&self) -> usize {
        match self.source {
            Source::Projective => self.ring.nvars() - 1,
            Source::Hypersurface(_) => self.ring.nvars() - 2,
        }
    }

    /// `N = dim V - 1`.
    pub fn big_n(&self) -> usize {
        self.sections.len() - 1
    }

    /// Common degree of the sections.
    pub fn degree(&self) -> u32 {
        self.sections[0].total_degree().unwrap()
    }

    pub fn dual_ring(&self) -> RingRef {
        Ring::grevlex(&self.dual_names).unwrap()
    }

    /// Source coordinates followed by dual coordinates.
    pub fn incidence_ring(&self) -> RingRef {
        let mut names = self.ring.names().to_vec();
        names.extend(self.dual_names.iter().cloned());
        Ring::grevlex(&names).unwrap()
    }

    /// `sum l_j s_j` in the incidence ring.
    pub fn general_section(&self, ring: &RingRef) -> Polynomial<F> {
        let n = self.ring.nvars();
        let mut acc = Polynomial::zero(ring);
        for (j, s) in self.sections.iter().enumerate() {
            let s = s.map_by_name(ring).unwrap();
            acc = &acc + &(&Polynomial::var(ring, n + j) * &s);
        }
        acc
    }

    /// The member `sum c_j s_j` in the source ring.
    pub fn member(&self, coeffs: &[F]) -> Polynomial<F> {
        let mut acc = Polynomial::zero(&self.ring);
        for (c, s) in coeffs.iter().zip(&self.sections) {
            acc = &acc + &s.scale(c);
        }
        acc
    }

    /// Values `(s_0(x), .., s_N(x))`.
    pub fn evaluate(&self, x: &[F]) -> Vec<F> {
        self.sections.iter().map(|s| s.eval(x)).collect()
    }

    /// Ideal of the source variety (zero for projective space).
    pub fn source_ideal(&self) -> Ideal<F> {
        match &self.source {
            Source::Projective => Ideal::zero(&self.ring),
            Source::Hypersurface(f) => Ideal::from_generators(&self.ring, vec![f.clone()]),
        }
    }

    /// Base locus `(sections) + (source)`, or `None` when it is empty.
    pub fn base_locus(&self) -> Option<Ideal<F>> {
        let i = self.source_ideal().with_generators(&self.sections);
        match i.dimension_degree() {
            None | Some((0, _)) => None,
            Some(_) => Some(i.reduced()),
        }
    }

    /// Fails with the base-locus ideal as witness when `V` has base points.
    pub fn ensure_base_point_free(&self) -> Result<()> {
        match self.base_locus() {
            None => Ok(()),
            Some(w) => Err(Error::BasePoints {
                witness: w
                    .generators()
                    .iter()
                    .map(|g| g.normalized().to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            }),
        }
    }

    /// Same system after the linear change of source coordinates
    /// `x <- M x` (rows of `m` give the images of the variables).
    pub fn transformed(&self, m: &[Vec<F>]) -> Result<Self> {
        let n = self.ring.nvars();
        let images: Vec<Polynomial<F>> = (0..n)
            .map(|i| {
                let vars: Vec<usize> = (0..n).collect();
                crate::polyring::linear_form(&self.ring, &vars, &m[i])
            })
            .collect();
        let sections = self
            .sections
            .iter()
            .map(|s| s.substitute_all(&self.ring, &images))
            .collect::<Result<Vec<_>>>()?;
        let source = match &self.source {
            Source::Projective => Source::Projective,
            Source::Hypersurface(f) => Source::Hypersurface(f.substitute_all(&self.ring, &images)?),
        };
        LinearSystem::new(&self.ring, source, sections, Some(self.dual_names.clone()))
    }

    /// Text form accepted by [`LinearSystem::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("ring: {}[{}]\n", F::name(), self.ring.names().join(", "));
        out.push_str(&format!("dual: {}\n", self.dual_names.join(", ")));
        if let Source::Hypersurface(f) = &self.source {
            out.push_str(&format!("hypersurface: {f}\n"));
        }
        for s in &self.sections {
            out.push_str(&format!("section: {s}\n"));
        }
        out
    }

    /// Parses
    ///
    /// ```text
    /// ring: QQ[u, x, y]
    /// dual: l, m, n, e          # optional
    /// hypersurface: F           # optional
    /// section: u^2 + x^2 + y^2
    /// section: ...
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<RingHeader> = None;
        let mut ring: Option<RingRef> = None;
        let mut dual: Option<Vec<String>> = None;
        let mut hyper: Option<Polynomial<F>> = None;
        let mut sections = Vec::new();
        for (n, line) in crate::ideals::content_lines(text) {
            let (key, value) = line.split_once(':').ok_or_else(|| Error::Parse {
                line: n,
                column: 1,
                message: "expected `key: value`".into(),
            })?;
            let column = key.len() + 1;
            let value_at = |r: &RingRef| -> Result<Polynomial<F>> {
                parse_polynomial_at(r, value, n).map_err(|e| match e {
                    Error::Parse { line, column: c, message } => Error::Parse {
                        line,
                        column: c + column,
                        message,
                    },
                    other => other,
                })
            };
            match key.trim() {
                "ring" => {
                    if header.is_some() {
                        return Err(parse_err(n, 1, "duplicate ring header"));
                    }
                    let h = parse_ring_header(line, n)?;
                    ring = Some(h.ring()?);
                    header = Some(h);
                }
                "dual" => {
                    dual = Some(value.split(',').map(|s| s.trim().to_string()).collect());
                }
                "hypersurface" => {
                    let r = ring.as_ref().ok_or_else(|| parse_err(n, 1, "ring header must come first"))?;
                    hyper = Some(value_at(r)?);
                }
                "section" => {
                    let r = ring.as_ref().ok_or_else(|| parse_err(n, 1, "ring header must come first"))?;
                    sections.push(value_at(r)?);
                }
                other => return Err(parse_err(n, 1, &format!("unknown key `{other}`"))),
            }
        }
        let ring = ring.ok_or_else(|| parse_err(1, 1, "missing ring header"))?;
        let source = match hyper {
            Some(f) => Source::Hypersurface(f),
            None => Source::Projective,
        };
        let mut sys = LinearSystem::new(&ring, source, sections, dual)?;
        sys.field_hint = header.and_then(|h| h.field);
        Ok(sys)
    }
}

fn parse_err(line: usize, column: usize, message: &str) -> Error {
    Error::Parse {
        line,
        column,
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    #[test]
    fn parses_web() {
        let sys: LinearSystem<Rational> = LinearSystem::parse(
            "ring: QQ[u, x, y]\ndual: l, m, n, e\nsection: u^2+x^2+y^2\nsection: x*y\nsection: u*y\nsection: u*x\n",
        )
        .unwrap();
        assert_eq!(sys.big_n(), 3);
        assert_eq!(sys.dim(), 2);
        assert_eq!(sys.degree(), 2);
        assert!(sys.ensure_base_point_free().is_ok());
        assert_eq!(sys.field_hint(), Some("QQ"));
    }

    #[test]
    fn rejects_dependent_and_mixed_degrees() {
        let e = LinearSystem::<Rational>::parse("ring: QQ[x,y]\nsection: x^2\nsection: 2x^2\n").unwrap_err();
        assert_eq!(e, Error::DependentSections { rank: 1, count: 2 });
        assert!(LinearSystem::<Rational>::parse("ring: QQ[x,y]\nsection: x^2\nsection: y\n").is_err());
    }

    #[test]
    fn base_points_have_a_witness() {
        let sys: LinearSystem<Fp<32003>> =
            LinearSystem::parse("ring: [x, y, z]\nsection: x^2\nsection: x*y\nsection: y^2\n").unwrap();
        match sys.ensure_base_point_free() {
            Err(Error::BasePoints { witness }) => assert!(witness.contains('x')),
            other => panic!("expected base points, got {other:?}"),
        }
    }

    #[test]
    fn parse_errors_point_at_the_value() {
        let e = LinearSystem::<Rational>::parse("ring: QQ[x,y]\nsection: x + q\n").unwrap_err();
        match e {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, 14);
            }
            other => panic!("{other:?}"),
        }
    }
}
