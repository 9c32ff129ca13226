use std::fmt;

use serde::{Deserialize, Serialize};

/// One failed entry of a check. `indices` are 0-based positions whose meaning
/// depends on the check (tensor entry, basis triple, matrix/pair).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub residual: f64,
}

/// Outcome of a tolerance-based check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub check: String,
    pub tolerance: f64,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(check: impl Into<String>, tolerance: f64) -> Self {
        Self {
            check: check.into(),
            tolerance,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, indices: Vec<usize>, residual: f64) {
        self.violations.push(Violation { indices, residual });
    }

    pub fn max_residual(&self) -> f64 {
        self.violations
            .iter()
            .map(|v| v.residual)
            .fold(0.0, f64::max)
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{}: pass (tol {:e})", self.check, self.tolerance);
        }
        write!(
            f,
            "{}: FAIL, {} violation(s), max residual {:e}",
            self.check,
            self.violations.len(),
            self.max_residual()
        )?;
        for v in self.violations.iter().take(8) {
            let idx: Vec<String> = v.indices.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "\n  at ({}) residual {:e}", idx.join(", "), v.residual)?;
        }
        if self.violations.len() > 8 {
            write!(f, "\n  ... {} more", self.violations.len() - 8)?;
        }
        Ok(())
    }
}
