//! Text format for Cayley tables.
//!
//! ```text
//! # Z3
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! The first significant line holds `n`; each of the next `n` lines holds `n`
//! whitespace-separated indices in `0..n`, row `i` column `j` being `i*j`.
//! `#` starts a comment running to the end of the line and blank lines are
//! ignored. The identity may sit at any index.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::group::{Group, TableError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum CayleyFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Table(#[from] TableError),
}

fn parse_error(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

/// Significant tokens of one line: `(column, text)`, 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &content[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &content[s..]));
    }
    out
}

fn number(line: usize, col: usize, text: &str) -> Result<usize, ParseError> {
    if !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(
            line,
            col,
            format!("expected a base-10 index, found {text:?}"),
        ));
    }
    text.parse()
        .map_err(|_| parse_error(line, col, format!("index {text:?} is too large")))
}

/// Parses the table text into `(n, rows)` without checking the group axioms.
pub fn parse_table(text: &str) -> Result<(usize, Vec<Vec<usize>>), ParseError> {
    let mut n = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        let Some(size) = n else {
            if toks.len() != 1 {
                return Err(parse_error(
                    line,
                    toks[1].0,
                    "expected a single size on the first line",
                ));
            }
            let size = number(line, toks[0].0, toks[0].1)?;
            if size == 0 {
                return Err(parse_error(line, toks[0].0, "size must be at least 1"));
            }
            n = Some(size);
            continue;
        };
        if rows.len() == size {
            return Err(parse_error(
                line,
                toks[0].0,
                format!("more than {size} rows"),
            ));
        }
        if toks.len() != size {
            let col = toks.get(size).map_or(raw.len() + 1, |t| t.0);
            return Err(parse_error(
                line,
                col,
                format!("expected {size} entries, found {}", toks.len()),
            ));
        }
        let mut row = Vec::with_capacity(size);
        for (col, text) in toks {
            let v = number(line, col, text)?;
            if v >= size {
                return Err(parse_error(
                    line,
                    col,
                    format!("entry {v} is out of range 0..{size}"),
                ));
            }
            row.push(v);
        }
        rows.push(row);
    }
    let Some(size) = n else {
        return Err(parse_error(last_line.max(1), 1, "missing table size"));
    };
    if rows.len() != size {
        return Err(parse_error(
            last_line + 1,
            1,
            format!("expected {size} rows, found {}", rows.len()),
        ));
    }
    Ok((size, rows))
}

pub fn parse_cayley_str(text: &str) -> Result<Group, CayleyFileError> {
    let (n, rows) = parse_table(text)?;
    Ok(Group::from_cayley_table(n, &rows)?)
}

pub fn read_cayley_file(path: &Path) -> Result<Group, CayleyFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| CayleyFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_cayley_str(&text)
}

/// Renders a group in the file format.
pub fn to_cayley_string(g: &Group) -> String {
    let mut out = format!("{}\n", g.size());
    for row in g.cayley_table() {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    #[test]
    fn trivial_file() {
        let g = parse_cayley_str("1\n0\n").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn z3_file() {
        let g = parse_cayley_str("3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.inv(1), 2);
    }

    #[test]
    fn out_of_range_entry_is_a_parse_error() {
        let err = parse_table("2\n0 1\n1 2\n").unwrap_err();
        assert_eq!((err.line, err.col), (3, 3));
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a comment\n\n  3   # size\n0 1 2\n\n1 2 0 # row\n2\t0 1\n# trailing\n";
        let g = parse_cayley_str(text).unwrap();
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn shape_errors() {
        assert_eq!(parse_table("").unwrap_err().message, "missing table size");
        let short = parse_table("2\n0 1\n").unwrap_err();
        assert!(short.message.contains("expected 2 rows"));
        let wide = parse_table("2\n0 1 1\n1 0\n").unwrap_err();
        assert_eq!((wide.line, wide.col), (2, 5));
        let junk = parse_table("2\n0 x\n1 0\n").unwrap_err();
        assert_eq!((junk.line, junk.col), (2, 3));
        let extra = parse_table("1\n0\n0\n").unwrap_err();
        assert_eq!(extra.line, 3);
        assert!(parse_table("2 2\n").is_err());
        assert!(parse_table("-1\n").is_err());
    }

    #[test]
    fn non_group_table_is_reported_by_validation() {
        let err = parse_cayley_str("2\n0 0\n1 1\n").unwrap_err();
        assert!(matches!(
            err,
            CayleyFileError::Table(TableError::NoIdentity)
        ));
    }

    #[test]
    fn render_and_reparse() {
        let g = GroupSpec::Dihedral(4).build().unwrap();
        let again = parse_cayley_str(&to_cayley_string(&g)).unwrap();
        assert_eq!(again, g);
    }
}
