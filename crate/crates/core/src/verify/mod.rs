//! Property suites: defining relations, dimension counts, irreducibility,
//! induction, the finite-group oracle and the specialization checks.

mod oracle;
mod suites;

use serde::Serialize;
use serde_json::Value;

pub use oracle::{oracle_compare, FiniteField};
pub use suites::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named identity and, on failure, the data needed to reproduce it.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records a check; the witness is only rendered on failure.
    pub fn check(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.checks.push(Check {
            check: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: if ok { None } else { Some(witness()) },
        });
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn absorb(&mut self, other: Report) {
        let prefix = other.name.clone();
        for mut c in other.checks {
            c.check = format!("{prefix}: {}", c.check);
            self.checks.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn passed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    /// `name: k/m checks pass`.
    pub fn summary(&self) -> String {
        format!(
            "{}: {}/{} checks pass",
            self.name,
            self.passed(),
            self.checks.len()
        )
    }
}
