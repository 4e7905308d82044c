//! Outcomes of exhaustive theorem checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// One side of a checked equation, or a witness component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Int(u64),
    Text(String),
    List(Vec<usize>),
}

impl From<usize> for Quantity {
    fn from(v: usize) -> Self {
        Quantity::Int(v as u64)
    }
}

impl From<u64> for Quantity {
    fn from(v: u64) -> Self {
        Quantity::Int(v)
    }
}

impl From<bool> for Quantity {
    fn from(v: bool) -> Self {
        Quantity::Text(v.to_string())
    }
}

impl From<&str> for Quantity {
    fn from(v: &str) -> Self {
        Quantity::Text(v.to_owned())
    }
}

impl From<String> for Quantity {
    fn from(v: String) -> Self {
        Quantity::Text(v)
    }
}

impl From<Vec<usize>> for Quantity {
    fn from(v: Vec<usize>) -> Self {
        Quantity::List(v)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Int(v) => write!(f, "{v}"),
            Quantity::Text(s) => f.write_str(s),
            Quantity::List(xs) => write!(f, "{xs:?}"),
        }
    }
}

/// Named values that exhibit a failure (or pin down a success).
pub type Witness = BTreeMap<String, Quantity>;

/// Build a [`Witness`] from `name => value` pairs.
#[macro_export]
macro_rules! witness {
    ($($k:expr => $v:expr),* $(,)?) => {{
        let mut w = $crate::verdict::Witness::new();
        $( w.insert(($k).to_string(), $crate::verdict::Quantity::from($v)); )*
        w
    }};
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub witness: Option<Witness>,
}

impl Verdict {
    /// Passes iff `lhs == rhs`.
    pub fn equal(
        name: impl Into<String>,
        lhs: impl Into<Quantity>,
        rhs: impl Into<Quantity>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        Self {
            name: name.into(),
            passed: lhs == rhs,
            lhs,
            rhs,
            witness: None,
        }
    }

    /// A universally quantified law checked over `total` cases of which
    /// `failures` failed; `first_failure` names the first counterexample.
    pub fn law(
        name: impl Into<String>,
        total: usize,
        failures: usize,
        first_failure: Option<Witness>,
    ) -> Self {
        Self {
            name: name.into(),
            passed: failures == 0,
            lhs: Quantity::from(total - failures),
            rhs: Quantity::from(total),
            witness: first_failure,
        }
    }

    /// A boolean claim, reported as `lhs = observed`, `rhs = true`.
    pub fn claim(name: impl Into<String>, holds: bool) -> Self {
        Self::equal(name, holds, true)
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    /// Attach `witness` only when the check failed.
    pub fn witness_on_failure(mut self, witness: impl FnOnce() -> Witness) -> Self {
        if !self.passed {
            self.witness = Some(witness());
        }
        self
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{status} {}: {} vs {}", self.name, self.lhs, self.rhs)?;
        if let Some(w) = &self.witness {
            write!(f, " witness")?;
            for (k, v) in w {
                write!(f, " {k}={v}")?;
            }
        }
        Ok(())
    }
}

/// Accumulates counterexamples of a law while scanning its cases.
#[derive(Debug, Default)]
pub(crate) struct LawScan {
    total: usize,
    failures: usize,
    first: Option<Witness>,
}

impl LawScan {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn case(&mut self, holds: bool, witness: impl FnOnce() -> Witness) {
        self.total += 1;
        if !holds {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    pub(crate) fn finish(self, name: impl Into<String>) -> Verdict {
        Verdict::law(name, self.total, self.failures, self.first)
    }
}

pub fn all_passed(verdicts: &[Verdict]) -> bool {
    verdicts.iter().all(|v| v.passed)
}
