//! Pass/fail reports shared by the verifiers.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maxdeg: Option<usize>,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(check: &str, instance: impl Into<String>) -> Self {
        CheckReport { check: check.into(), instance: instance.into(), maxdeg: None, cases: 0, failures: Vec::new() }
    }

    pub fn with_maxdeg(mut self, maxdeg: usize) -> Self {
        self.maxdeg = Some(maxdeg);
        self
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}
