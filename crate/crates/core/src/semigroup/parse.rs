//! The Cayley-table text format.
//!
//! ```text
//! # Brandt semigroup B2
//! elements: 0 e11 e12 e21 e22
//! table:
//! 0 0   0   0   0
//! 0 e11 e12 0   0
//! 0 0   0   e11 e12
//! 0 e21 e22 0   0
//! 0 0   0   e21 e22
//! ```
//!
//! Lines whose first non-blank character is `#` are comments; blank lines are
//! ignored. Row `i`, column `j` holds the product of element `i` with element
//! `j`.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{validate, InverseSemigroup, ValidationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: expected `elements:` header")]
    MissingElements { line: usize, column: usize },
    #[error("{line}:{column}: no element names")]
    NoElements { line: usize, column: usize },
    #[error("{line}:{column}: duplicate element name `{name}`")]
    DuplicateName { line: usize, column: usize, name: String },
    #[error("{line}:{column}: expected `table:`")]
    MissingTable { line: usize, column: usize },
    #[error("{line}:{column}: unknown element `{name}`")]
    UnknownElement { line: usize, column: usize, name: String },
    #[error("{line}:{column}: row has {found} entries, expected {expected}")]
    RowLength { line: usize, column: usize, found: usize, expected: usize },
    #[error("{line}:{column}: table has {found} rows, expected {expected}")]
    MissingRows { line: usize, column: usize, found: usize, expected: usize },
    #[error("{line}:{column}: unexpected content after the table")]
    Trailing { line: usize, column: usize },
    #[error("{0}")]
    Invalid(#[from] ValidationError),
}

impl ParseError {
    /// `(line, column)`, 1-based, when the error points into the text.
    pub fn position(&self) -> Option<(usize, usize)> {
        use ParseError::*;
        match self {
            MissingElements { line, column }
            | NoElements { line, column }
            | DuplicateName { line, column, .. }
            | MissingTable { line, column }
            | UnknownElement { line, column, .. }
            | RowLength { line, column, .. }
            | MissingRows { line, column, .. }
            | Trailing { line, column } => Some((*line, *column)),
            Invalid(_) => None,
        }
    }
}

/// Whitespace-separated tokens with their 1-based column.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in text.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col, i)),
            (true, Some((scol, si))) => {
                out.push((scol + 1, &text[si..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((scol, si)) = start {
        out.push((scol + 1, &text[si..]));
    }
    out.into_iter()
}

fn first_column(text: &str) -> usize {
    text.chars().take_while(|c| c.is_whitespace()).count() + 1
}

/// Parses the text into names and a raw table without checking any algebra.
pub fn parse_raw(text: &str) -> Result<(Vec<String>, Vec<Vec<usize>>), ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });
    let last_line = text.lines().count().max(1);

    let (hline, header) = lines
        .next()
        .ok_or(ParseError::MissingElements { line: last_line, column: 1 })?;
    let hcol = first_column(header);
    let rest = header
        .trim_start()
        .strip_prefix("elements:")
        .ok_or(ParseError::MissingElements { line: hline, column: hcol })?;
    let offset = header.chars().count() - rest.chars().count();
    let mut names = Vec::new();
    let mut index = HashMap::new();
    for (col, name) in tokens(rest) {
        if index.insert(name.to_string(), names.len()).is_some() {
            return Err(ParseError::DuplicateName {
                line: hline,
                column: col + offset,
                name: name.to_string(),
            });
        }
        names.push(name.to_string());
    }
    if names.is_empty() {
        return Err(ParseError::NoElements { line: hline, column: header.chars().count() + 1 });
    }

    let (tline, tline_text) = lines
        .next()
        .ok_or(ParseError::MissingTable { line: last_line, column: 1 })?;
    if tline_text.trim() != "table:" {
        return Err(ParseError::MissingTable { line: tline, column: first_column(tline_text) });
    }

    let n = names.len();
    let mut rows = Vec::with_capacity(n);
    let mut last = tline;
    for _ in 0..n {
        let (line, text) = lines.next().ok_or(ParseError::MissingRows {
            line: last + 1,
            column: 1,
            found: rows.len(),
            expected: n,
        })?;
        last = line;
        let mut row = Vec::with_capacity(n);
        for (column, tok) in tokens(text) {
            if row.len() == n {
                return Err(ParseError::RowLength { line, column, found: tokens(text).count(), expected: n });
            }
            let &v = index.get(tok).ok_or_else(|| ParseError::UnknownElement {
                line,
                column,
                name: tok.to_string(),
            })?;
            row.push(v);
        }
        if row.len() < n {
            return Err(ParseError::RowLength {
                line,
                column: text.chars().count() + 1,
                found: row.len(),
                expected: n,
            });
        }
        rows.push(row);
    }
    if let Some((line, text)) = lines.next() {
        return Err(ParseError::Trailing { line, column: first_column(text) });
    }
    Ok((names, rows))
}

/// Parses and validates a Cayley table.
pub fn parse_cayley(text: &str) -> Result<InverseSemigroup, ParseError> {
    let (names, rows) = parse_raw(text)?;
    Ok(validate(&rows, Some(names))?)
}

/// Writes a semigroup in the Cayley format. Unnamed elements are written
/// under their index.
pub fn write_cayley(s: &InverseSemigroup) -> String {
    let names: Vec<String> = (0..s.rows().len())
        .map(|i| s.name(super::ElementId(i)))
        .collect();
    let width = names.iter().map(|n| n.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", names.join(" "));
    out.push_str("table:\n");
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(|&v| format!("{:<width$}", names[v])).collect();
        let _ = writeln!(out, "{}", cells.join(" ").trim_end());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const B2: &str = "\
# Brandt semigroup
elements: 0 e11 e12 e21 e22
table:
0 0   0   0   0
0 e11 e12 0   0
0 0   0   e11 e12
0 e21 e22 0   0
0 0   0   e21 e22
";

    #[test]
    fn parses_brandt() {
        let s = parse_cayley(B2).unwrap();
        assert_eq!(s.names().unwrap().len(), 5);
    }

    #[test]
    fn unknown_element_position() {
        let text = B2.replace("0 e11 e12 0   0", "0 e11 e13 0   0");
        let err = parse_cayley(&text).unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownElement { line: 5, column: 7, name: "e13".into() }
        );
    }

    #[test]
    fn duplicate_name_position() {
        let err = parse_raw("elements: a b a\ntable:\n").unwrap_err();
        assert_eq!(err, ParseError::DuplicateName { line: 1, column: 15, name: "a".into() });
    }

    #[test]
    fn short_and_long_rows() {
        let err = parse_raw("elements: a b\ntable:\na a\na\n").unwrap_err();
        assert!(matches!(err, ParseError::RowLength { line: 4, found: 1, expected: 2, .. }));
        let err = parse_raw("elements: a b\ntable:\na a a\n").unwrap_err();
        assert!(matches!(err, ParseError::RowLength { line: 3, column: 5, .. }));
    }

    #[test]
    fn header_errors() {
        assert!(matches!(parse_raw(""), Err(ParseError::MissingElements { .. })));
        assert!(matches!(parse_raw("  nope"), Err(ParseError::MissingElements { line: 1, column: 3 })));
        assert!(matches!(parse_raw("elements:"), Err(ParseError::NoElements { .. })));
        assert!(matches!(parse_raw("elements: a\nrows:"), Err(ParseError::MissingTable { line: 2, .. })));
        assert!(matches!(
            parse_raw("elements: a\ntable:\n"),
            Err(ParseError::MissingRows { found: 0, expected: 1, .. })
        ));
        assert!(matches!(
            parse_raw("elements: a\ntable:\na\na\n"),
            Err(ParseError::Trailing { line: 4, column: 1 })
        ));
    }

    #[test]
    fn algebra_errors_pass_through() {
        let err = parse_cayley("elements: a b\ntable:\na a\nb b\n").unwrap_err();
        assert!(matches!(err, ParseError::Invalid(ValidationError::NonUniqueInverse { .. })));
        assert_eq!(err.position(), None);
    }

    #[test]
    fn write_then_parse() {
        let s = parse_cayley(B2).unwrap();
        let again = parse_cayley(&write_cayley(&s)).unwrap();
        assert_eq!(s, again);
        assert_eq!(s.names(), again.names());
    }
}
