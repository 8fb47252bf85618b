//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer ['/' integer] | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2x y`) is multiplication. Printing emits terms in
//! decreasing grevlex order with explicit `*`, and parses back to the same
//! polynomial.

use std::fmt;


use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use super::ring::RingRef;
use crate::error::{Error, Result};
use crate::field::{parse_rational, Field};

/// Parses `text` into a polynomial of `ring`.
pub fn parse_polynomial<F: Field>(ring: &RingRef, text: &str) -> Result<Polynomial<F>> {
    parse_polynomial_at(ring, text, 1)
}

/// As [`parse_polynomial`], reporting errors against line `line`.
pub fn parse_polynomial_at<F: Field>(
    ring: &RingRef,
    text: &str,
    line: usize,
) -> Result<Polynomial<F>> {
    let mut p = Parser {
        ring,
        src: text.as_bytes(),
        pos: 0,
        line,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(value)
}

struct Parser<'a> {
    ring: &'a RingRef,
    src: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: String) -> Error {
        Error::Parse {
            line: self.line,
            column: self.pos + 1,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected exponent".into()));
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.error("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom<F: Field>(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                self.digits();
                let mut end = self.pos;
                // rational literal a/b
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    if matches!(self.src.get(self.pos), Some(d) if d.is_ascii_digit()) {
                        self.digits();
                        end = self.pos;
                    } else {
                        self.pos = save;
                    }
                }
                let text: String = std::str::from_utf8(&self.src[start..end])
                    .unwrap()
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .collect();
                let r = parse_rational(&text)
                    .ok_or_else(|| self.error(format!("bad number `{text}`")))?;
                let c = F::from_rational(&r).ok_or_else(|| {
                    self.error(format!("`{text}` is not defined over {}", F::name()))
                })?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Ok(i) => Ok(Polynomial::var(self.ring, i)),
                    Err(_) => {
                        self.pos = start;
                        Err(self.error(format!("unknown variable `{name}`")))
                    }
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn digits(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let ring = self.ring();
        let n = ring.nvars();
        let mut terms: Vec<_> = self.terms().iter().collect();
        if ring.order() != MonomialOrder::GrevLex {
            terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(&b.0, &a.0, n));
        }
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = mag == "1";
            let mut parts: Vec<String> = Vec::new();
            if !unit || m.is_one() {
                parts.push(mag);
            }
            for i in m.support() {
                let e = m.exp(i);
                if e == 1 {
                    parts.push(ring.name(i).to_string());
                } else {
                    parts.push(format!("{}^{}", ring.name(i), e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Display helper for a list of polynomials, one per line.
pub fn format_lines<F: Field>(polys: &[Polynomial<F>]) -> String {
    polys.iter().map(|p| format!("{p}\n")).collect()
}
