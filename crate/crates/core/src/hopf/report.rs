use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;

/// Outcome of one named identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First basis index (column of the compared matrices) where the two
    /// sides differ.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Records `lhs == rhs`, with the first differing column as witness.
    pub fn compare(&mut self, name: &str, lhs: &Matrix, rhs: &Matrix) {
        let witness = lhs.first_differing_column(rhs);
        self.checks.push(Check { name: name.to_string(), passed: witness.is_none(), witness, detail: None });
    }

    pub fn flag(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.checks.push(Check { name: name.to_string(), passed, witness: None, detail });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// Prefixes every check name, for aggregated reports.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for c in &mut self.checks {
            c.name = format!("{prefix}: {}", c.name);
        }
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            write!(f, "{status}  {}", c.name)?;
            if let Some(w) = c.witness {
                write!(f, " (witness {w})")?;
            }
            if let Some(d) = &c.detail {
                write!(f, " [{d}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
