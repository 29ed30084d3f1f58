//! Structured pass/fail records produced by the verification suites.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One verification check with an optional counterexample payload
/// (symbolic expressions rendered canonically).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: CheckStatus::Pass,
            details: details.into(),
            counterexample: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        details: impl Into<String>,
        counterexample: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            status: CheckStatus::Fail,
            details: details.into(),
            counterexample: Some(counterexample.into()),
        }
    }

    pub fn from_result(name: impl Into<String>, result: Result<String, (String, String)>) -> Self {
        match result {
            Ok(details) => Check::pass(name, details),
            Err((details, counterexample)) => Check::fail(name, details, counterexample),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass || self.status == CheckStatus::Skipped
    }
}

/// A named bundle of checks; `checks` are kept sorted by name so report
/// content is deterministic regardless of execution order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}
