//! Group references on the command line.
//!
//! ```text
//! ref := cyclic:N | dihedral:N | symmetric:N | q8 | product:(ref,ref) | PATH
//! ```
//!
//! Short forms `cN`, `zN`, `dN`, `sN` and `quaternion8` are accepted too. An
//! argument naming an existing file is always read as a Cayley table.

use std::path::{Path, PathBuf};

use grp_core::GroupSpec;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RefError {
    #[error("empty group reference")]
    Empty,
    #[error("bad size {0:?} in group reference")]
    BadSize(String),
    #[error("unbalanced parentheses in {0:?}")]
    Unbalanced(String),
    #[error("product needs two comma-separated factors, got {0:?}")]
    BadProduct(String),
    #[error("unknown group reference {0:?} (and no such file)")]
    Unknown(String),
}

pub fn parse_group_ref(text: &str) -> Result<GroupSpec, RefError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RefError::Empty);
    }
    if Path::new(text).is_file() {
        return Ok(GroupSpec::CayleyFile(PathBuf::from(text)));
    }
    parse_builtin(text)
}

fn parse_builtin(text: &str) -> Result<GroupSpec, RefError> {
    let lower = text.to_ascii_lowercase();
    if lower == "q8" || lower == "quaternion8" {
        return Ok(GroupSpec::Quaternion8);
    }
    if let Some(rest) = lower.strip_prefix("product:") {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| RefError::BadProduct(text.to_owned()))?;
        let (a, b) = split_top_level(inner, text)?;
        return Ok(GroupSpec::product(parse_builtin(a)?, parse_builtin(b)?));
    }
    if let Some((kind, n)) = lower.split_once(':') {
        let n = size(n)?;
        return match kind {
            "cyclic" => Ok(GroupSpec::Cyclic(n)),
            "dihedral" => Ok(GroupSpec::Dihedral(n)),
            "symmetric" => Ok(GroupSpec::Symmetric(n)),
            _ => Err(RefError::Unknown(text.to_owned())),
        };
    }
    let mut chars = lower.chars();
    let head = chars.next().ok_or(RefError::Empty)?;
    let tail = chars.as_str();
    if !tail.is_empty() && tail.bytes().all(|b| b.is_ascii_digit()) {
        let n = size(tail)?;
        return match head {
            'c' | 'z' => Ok(GroupSpec::Cyclic(n)),
            'd' => Ok(GroupSpec::Dihedral(n)),
            's' => Ok(GroupSpec::Symmetric(n)),
            _ => Err(RefError::Unknown(text.to_owned())),
        };
    }
    Err(RefError::Unknown(text.to_owned()))
}

fn size(text: &str) -> Result<usize, RefError> {
    match text.trim().parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(RefError::BadSize(text.to_owned())),
    }
}

fn split_top_level<'a>(inner: &'a str, whole: &str) -> Result<(&'a str, &'a str), RefError> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                if split.is_some() {
                    return Err(RefError::BadProduct(whole.to_owned()));
                }
                split = Some(i);
            }
            _ => {}
        }
        if depth < 0 {
            return Err(RefError::Unbalanced(whole.to_owned()));
        }
    }
    if depth != 0 {
        return Err(RefError::Unbalanced(whole.to_owned()));
    }
    let i = split.ok_or_else(|| RefError::BadProduct(whole.to_owned()))?;
    Ok((inner[..i].trim(), inner[i + 1..].trim()))
}

/// Generator lists such as `3,5`; empty text gives no generators.
pub fn parse_gens(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad generator index {t:?}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_refs() {
        assert_eq!(parse_group_ref("cyclic:12"), Ok(GroupSpec::Cyclic(12)));
        assert_eq!(parse_group_ref("s4"), Ok(GroupSpec::Symmetric(4)));
        assert_eq!(parse_group_ref("Z6"), Ok(GroupSpec::Cyclic(6)));
        assert_eq!(parse_group_ref("d5"), Ok(GroupSpec::Dihedral(5)));
        assert_eq!(parse_group_ref("q8"), Ok(GroupSpec::Quaternion8));
        assert_eq!(
            parse_group_ref("product:(cyclic:2, product:(s3,q8))"),
            Ok(GroupSpec::product(
                GroupSpec::Cyclic(2),
                GroupSpec::product(GroupSpec::Symmetric(3), GroupSpec::Quaternion8)
            ))
        );
    }

    #[test]
    fn display_round_trips() {
        for spec in GroupSpec::catalog() {
            assert_eq!(parse_group_ref(&spec.to_string()), Ok(spec));
        }
    }

    #[test]
    fn bad_refs() {
        assert_eq!(parse_group_ref(""), Err(RefError::Empty));
        assert_eq!(
            parse_group_ref("cyclic:0"),
            Err(RefError::BadSize("0".into()))
        );
        assert!(matches!(
            parse_group_ref("product:(c2)"),
            Err(RefError::BadProduct(_))
        ));
        assert!(matches!(
            parse_group_ref("product:(c2,(c3)"),
            Err(RefError::Unbalanced(_))
        ));
        assert!(matches!(
            parse_group_ref("no/such/file.cayley"),
            Err(RefError::Unknown(_))
        ));
        assert!(matches!(
            parse_group_ref("alternating:4"),
            Err(RefError::Unknown(_))
        ));
    }

    #[test]
    fn generator_lists() {
        assert_eq!(parse_gens("3, 5"), Ok(vec![3, 5]));
        assert_eq!(parse_gens(""), Ok(vec![]));
        assert!(parse_gens("3,x").is_err());
    }
}
