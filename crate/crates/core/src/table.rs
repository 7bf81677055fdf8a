//! Two-column comma-separated text files with a fixed header line.

use std::path::Path;

use crate::error::{Error, Result};

/// Parses `path`, whose first line must be `h1,h2`; returns (line number, a, b)
/// per data row. Blank lines are skipped.
pub(crate) fn read_two_columns(path: &Path, header: (&str, &str)) -> Result<Vec<(usize, f64, f64)>> {
    let text = std::fs::read_to_string(path)?;
    parse_two_columns(&text, &path.display().to_string(), header)
}

pub(crate) fn parse_two_columns(text: &str, path: &str, header: (&str, &str)) -> Result<Vec<(usize, f64, f64)>> {
    let err = |line: usize, message: String| Error::Parse { path: path.to_string(), line, message };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (hl, h) = lines.next().ok_or_else(|| err(1, "empty file".into()))?;
    let cols: Vec<&str> = h.split(',').map(str::trim).collect();
    if cols != [header.0, header.1] {
        return Err(err(hl, format!("expected header `{},{}`, found `{h}`", header.0, header.1)));
    }
    lines
        .map(|(n, l)| {
            let mut it = l.split(',').map(str::trim);
            let (a, b) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(err(n, format!("expected two comma-separated fields, found `{l}`"))),
            };
            let parse = |s: &str| s.parse::<f64>().map_err(|e| err(n, format!("`{s}`: {e}")));
            let (a, b) = (parse(a)?, parse(b)?);
            if !a.is_finite() || !b.is_finite() {
                return Err(err(n, "non-finite value".into()));
            }
            Ok((n, a, b))
        })
        .collect()
}
