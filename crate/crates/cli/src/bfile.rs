//! OEIS b-file text: `#` comment lines and `<index> <value>` data lines with
//! consecutive indices.

use std::fmt::Write as _;

use losanitsch_core::Integer;

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub id: Option<String>,
    entries: Vec<(i64, Integer)>,
}

impl BFile {
    /// Entries indexed consecutively from `offset`.
    pub fn from_values(id: Option<String>, offset: i64, values: impl IntoIterator<Item = Integer>) -> Self {
        let entries = values.into_iter().enumerate().map(|(i, v)| (offset + i as i64, v)).collect();
        Self { id, entries }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(i64, Integer)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.starts_with('#') || line.trim().is_empty() {
                continue;
            }
            let malformed = || CliError::MalformedLine { line: i + 1, text: line.to_string() };
            let (idx, val) = line.split_once(' ').ok_or_else(malformed)?;
            let idx: i64 = parse_integer_token(idx).and_then(|s| s.parse().ok()).ok_or_else(malformed)?;
            let val: Integer = parse_integer_token(val).and_then(|s| s.parse().ok()).ok_or_else(malformed)?;
            if let Some(&(prev, _)) = entries.last() {
                if idx != prev + 1 {
                    return Err(CliError::NonConsecutive { line: i + 1, previous: prev, found: idx });
                }
            }
            entries.push((idx, val));
        }
        Ok(Self { id: None, entries })
    }

    pub fn entries(&self) -> &[(i64, Integer)] {
        &self.entries
    }

    /// Index of the first entry, or 0 when empty.
    pub fn offset(&self) -> i64 {
        self.entries.first().map_or(0, |e| e.0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(id) = &self.id {
            writeln!(out, "# {id}").unwrap();
        }
        for (i, v) in &self.entries {
            writeln!(out, "{i} {v}").unwrap();
        }
        out
    }
}

/// Accepts an optional leading `-` and at least one ASCII digit.
fn parse_integer_token(s: &str) -> Option<&str> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    (!digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())).then_some(s)
}
