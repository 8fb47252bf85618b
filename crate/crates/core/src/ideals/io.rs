//! Text form of ideals: a ring header followed by one generator per line.
//!
//! ```text
//! ring: GF(32003)[x, y, z]
//! x*y - z^2
//! x^3 - y*z^2
//! ```

use super::Ideal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{parse_polynomial_at, Ring, RingRef};

/// Parsed `ring:` line. `field` is `None` when the header leaves the field
/// open (`ring: [x, y]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHeader {
    pub field: Option<String>,
    pub names: Vec<String>,
}

impl RingHeader {
    pub fn ring(&self) -> Result<RingRef> {
        Ring::grevlex(&self.names)
    }
}

/// Parses `ring: FIELD[v1, v2, ...]` (the `ring:` prefix is optional).
pub fn parse_ring_header(line: &str, line_no: usize) -> Result<RingHeader> {
    let err = |column: usize, message: &str| Error::Parse {
        line: line_no,
        column,
        message: message.to_string(),
    };
    let body = line.trim();
    let body = body.strip_prefix("ring:").unwrap_or(body).trim();
    let open = body.find('[').ok_or_else(|| err(1, "expected `[` in ring header"))?;
    if !body.ends_with(']') {
        return Err(err(line.len(), "expected `]` closing the ring header"));
    }
    let field = body[..open].trim();
    let names: Vec<String> = body[open + 1..body.len() - 1]
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if names.is_empty() {
        return Err(err(open + 1, "ring has no variables"));
    }
    Ring::grevlex(&names).map_err(|e| err(open + 1, &e.to_string()))?;
    Ok(RingHeader {
        field: (!field.is_empty()).then(|| field.to_string()),
        names,
    })
}

/// Content lines with their 1-based line numbers; blank lines and `#`
/// comments are skipped.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = match l.find('#') {
            Some(k) => &l[..k],
            None => l,
        };
        let l = l.trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Parses the text form of an ideal.
pub fn parse_ideal<F: Field>(text: &str) -> Result<Ideal<F>> {
    let mut lines = content_lines(text);
    let (n, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing ring header".into(),
    })?;
    let header = parse_ring_header(first, n)?;
    let ring = header.ring()?;
    let mut gens = Vec::new();
    for (n, l) in lines {
        gens.push(parse_polynomial_at(&ring, l, n)?);
    }
    Ideal::new(&ring, gens)
}

impl<F: Field> Ideal<F> {
    /// Header plus one normalized generator per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("ring: {}[{}]\n", F::name(), self.ring().names().join(", "));
        for g in self.generators() {
            out.push_str(&format!("{}\n", g.normalized()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn round_trip() {
        let text = "# twisted cubic\nring: QQ[a, b, c, d]\na*c - b^2\na*d-b*c\n\nb*d - c^2\n";
        let i: Ideal<Rational> = parse_ideal(text).unwrap();
        assert_eq!(i.generators().len(), 3);
        let j: Ideal<Rational> = parse_ideal(&i.to_text()).unwrap();
        assert!(i.equals(&j));
    }

    #[test]
    fn header_errors() {
        assert!(parse_ring_header("ring: QQ x, y", 1).is_err());
        assert!(parse_ring_header("ring: QQ[x, x]", 1).is_err());
        let h = parse_ring_header("ring: GF(7)[x,y]", 1).unwrap();
        assert_eq!(h.field.as_deref(), Some("GF(7)"));
        let e = parse_ideal::<Rational>("ring: QQ[x]\nx+\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }
}
