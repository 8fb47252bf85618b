use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

/// Variable names plus the ambient monomial order of a polynomial ring.
///
/// The coefficient field is a type parameter of [`super::Polynomial`], so it
/// does not appear here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S], order: MonomialOrder) -> Result<RingRef> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !is_identifier(n) {
                return Err(Error::Invalid(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(Ring { names, order }))
    }

    /// Ring with grevlex order.
    pub fn grevlex<S: AsRef<str>>(names: &[S]) -> Result<RingRef> {
        Self::new(names, MonomialOrder::GrevLex)
    }

    /// Variables named `prefix0 .. prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize) -> Vec<String> {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Same variables under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring {
            names: self.names.clone(),
            order,
        })
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, self.names.len())
    }

    /// Same variable names (the order may differ).
    pub fn same_variables(&self, other: &Ring) -> bool {
        self.names == other.names
    }

    /// Concatenation of two variable lists under `order`.
    pub fn join(&self, other: &Ring, order: MonomialOrder) -> Result<RingRef> {
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        Ring::new(&names, order)
    }

    /// Picks a variable name not already used, starting from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if !self.names.iter().any(|n| n == base) {
            return base.to_string();
        }
        (0..)
            .map(|i| format!("{base}{i}"))
            .find(|c| !self.names.contains(c))
            .expect("infinite supply of names")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))?;
        match self.order {
            MonomialOrder::GrevLex => Ok(()),
            MonomialOrder::Lex => write!(f, " lex"),
            MonomialOrder::Elimination(k) => write!(f, " elim({k})"),
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}
