//! Reports: named checks with their outcome, plus construction
//! certificates, rendered as text or JSON.

use std::fmt::Write as _;
use std::time::Instant;

use grp_core::{Quantity, Verdict, Witness};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub witness: Option<Witness>,
    pub elapsed_ms: f64,
    /// Verdicts merged into this record.
    #[serde(skip)]
    cases: u64,
    #[serde(skip)]
    passed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub kind: &'static str,
    pub p: usize,
    pub n: u32,
    pub elements: Vec<usize>,
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub group: String,
    pub order: usize,
    pub checks: Vec<CheckRecord>,
    pub certificates: Vec<Certificate>,
    /// Free-form lines for the text rendering.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(group: impl Into<String>, order: usize) -> Self {
        Self {
            group: group.into(),
            order,
            checks: Vec::new(),
            certificates: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Runs `f`, timing it, and records its verdicts. Verdicts sharing a
    /// name are merged into one record; `context` is added to the witness of
    /// the first failure.
    pub fn run<E>(
        &mut self,
        context: impl FnOnce() -> Witness,
        f: impl FnOnce() -> Result<Vec<Verdict>, E>,
    ) -> Result<(), E> {
        let start = Instant::now();
        let verdicts = f()?;
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        self.add(verdicts, elapsed, context);
        Ok(())
    }

    pub fn add(
        &mut self,
        verdicts: Vec<Verdict>,
        elapsed_ms: f64,
        context: impl FnOnce() -> Witness,
    ) {
        let mut context = Some(context);
        let mut context_value: Option<Witness> = None;
        for v in verdicts {
            let idx = match self.checks.iter().position(|c| c.name == v.name) {
                Some(i) => i,
                None => {
                    self.checks.push(CheckRecord {
                        name: v.name.clone(),
                        status: Status::Pass,
                        lhs: v.lhs.clone(),
                        rhs: v.rhs.clone(),
                        witness: None,
                        elapsed_ms: 0.0,
                        cases: 0,
                        passed: 0,
                    });
                    self.checks.len() - 1
                }
            };
            let record = &mut self.checks[idx];
            record.cases += 1;
            record.elapsed_ms += elapsed_ms;
            if v.passed {
                record.passed += 1;
            } else if record.status == Status::Pass {
                record.status = Status::Fail;
                let mut witness = v.witness.clone().unwrap_or_default();
                if context_value.is_none() {
                    context_value = context.take().map(|f| f());
                }
                for (k, q) in context_value.iter().flatten() {
                    witness.entry(k.clone()).or_insert_with(|| q.clone());
                }
                witness.insert("lhs".into(), v.lhs.clone());
                witness.insert("rhs".into(), v.rhs.clone());
                record.witness = Some(witness);
            }
            if record.cases == 1 {
                record.lhs = v.lhs;
                record.rhs = v.rhs;
            } else {
                record.lhs = Quantity::Int(record.passed);
                record.rhs = Quantity::Int(record.cases);
            }
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("group {} (order {})\n", self.group, self.order);
        for line in &self.notes {
            let _ = writeln!(out, "{line}");
        }
        for cert in &self.certificates {
            let _ = writeln!(
                out,
                "{} certificate, p = {}, n = {}: {:?}",
                cert.kind, cert.p, cert.n, cert.elements
            );
            for line in &cert.trace {
                let _ = writeln!(out, "  {line}");
            }
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let detail = if c.cases > 1 {
                format!("{} of {} cases", c.lhs, c.rhs)
            } else {
                format!("{} vs {}", c.lhs, c.rhs)
            };
            let _ = writeln!(out, "{tag} {}: {detail}", c.name);
            if let Some(w) = &c.witness {
                let _ = writeln!(
                    out,
                    "     witness: {}",
                    serde_json::to_string(w).unwrap_or_default()
                );
            }
        }
        let _ = writeln!(
            out,
            "{} checks, {} failed",
            self.checks.len(),
            self.failures()
        );
        out
    }
}
