//! Plain-text reports with an optional `key: value` block for harnesses.

use std::fmt::{self, Display};

use crate::error::{Error, Result};

pub const MACHINE_BEGIN: &str = "--- machine ---";
pub const MACHINE_END: &str = "--- end ---";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    lines: Vec<String>,
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Default::default()
        }
    }

    /// Human-only line.
    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    /// Shown as `key: value` and recorded in the machine block.
    pub fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        let v = value.to_string();
        self.lines.push(format!("{key}: {v}"));
        self.entries.push((key.to_string(), v));
        self
    }

    /// Machine block only.
    pub fn hidden(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.entries.push((key.to_string(), value.to_string()));
        self
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self, machine: bool) -> String {
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&format!("== {} ==\n", self.title));
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        if machine {
            out.push_str(MACHINE_BEGIN);
            out.push('\n');
            for (k, v) in &self.entries {
                out.push_str(&format!("{k}: {v}\n"));
            }
            out.push_str(MACHINE_END);
            out.push('\n');
        }
        out
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Extracts every machine block of `text`, in order.
pub fn parse_machine(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    let mut inside = false;
    let mut found = false;
    for (i, line) in text.lines().enumerate() {
        if line == MACHINE_BEGIN {
            inside = true;
            found = true;
            continue;
        }
        if line == MACHINE_END {
            inside = false;
            continue;
        }
        if inside {
            let (k, v) = line.split_once(": ").ok_or_else(|| Error::Parse {
                line: i + 1,
                column: 1,
                message: "expected `key: value`".into(),
            })?;
            out.push((k.to_string(), v.to_string()));
        }
    }
    if inside || !found {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: "no complete machine block".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_round_trip() {
        let mut r = Report::new("t");
        r.field("codegree", 3).field("equation", "l^3 - l*m^2").hidden("seed", 7);
        let text = r.render(true);
        assert_eq!(parse_machine(&text).unwrap(), r.entries());
        assert!(parse_machine(&r.render(false)).is_err());
    }
}
