//! Pass/fail records shared by the verification routines and the CLI.

use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Context on success, counterexample on failure, reason on skip.
    pub detail: Value,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, name: impl Into<String>, detail: Value) {
        self.checks.push(Check { name: name.into(), status: Status::Pass, detail });
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: Value) {
        self.checks.push(Check { name: name.into(), status: Status::Fail, detail });
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Skip, detail: json!({ "reason": reason.into() }) });
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, detail: Value) {
        if ok {
            self.pass(name, detail)
        } else {
            self.fail(name, detail)
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// No failures (skips are allowed but stay visible in the output).
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }
}
