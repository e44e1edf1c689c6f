//! Plain-text Cayley table format.
//!
//! ```text
//! # comment lines and blank lines are skipped
//! 2
//! 0 1
//! 1 0
//! ```
//!
//! The first significant line holds the order `n`; the next `n` significant
//! lines hold row `i` as `n` space-separated products `i·j`. The file must end
//! with a newline. Corpus files concatenate tables separated by `---` lines.

use crate::error::{Error, Result};
use crate::semigroup::{validate_semigroup, FiniteSemigroup};

pub const CORPUS_SEPARATOR: &str = "---";

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Significant lines with their 1-based line numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, t))
    })
}

pub fn parse_cayley(text: &str) -> Result<FiniteSemigroup> {
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(parse_err(text.lines().count(), "missing trailing newline"));
    }
    let mut lines = significant_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing order line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(first, format!("expected an order, found {header:?}")))?;
    if n == 0 {
        return Err(parse_err(first, "order must be at least 1"));
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = first;
    for _ in 0..n {
        let (line, text) = lines.next().ok_or_else(|| {
            parse_err(last + 1, format!("expected {n} rows, found {}", rows.len()))
        })?;
        last = line;
        let row = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| parse_err(line, format!("invalid entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(parse_err(
                line,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        if let Some(bad) = row.iter().find(|&&v| v >= n) {
            return Err(parse_err(line, format!("entry {bad} out of range 0..{n}")));
        }
        rows.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "unexpected content after the table"));
    }
    validate_semigroup(&rows)
}

pub fn format_cayley(s: &FiniteSemigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Concatenated tables separated by `---` lines.
pub fn format_corpus<'a>(tables: impl IntoIterator<Item = &'a FiniteSemigroup>) -> String {
    let parts: Vec<String> = tables.into_iter().map(format_cayley).collect();
    parts.join(&format!("{CORPUS_SEPARATOR}\n"))
}

pub fn parse_corpus(text: &str) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    let mut chunk = String::new();
    for line in text.split_inclusive('\n') {
        if line.trim() == CORPUS_SEPARATOR {
            out.push(parse_cayley(&chunk)?);
            chunk.clear();
        } else {
            chunk.push_str(line);
        }
    }
    if !chunk.trim().is_empty() {
        out.push(parse_cayley(&chunk)?);
    }
    Ok(out)
}
