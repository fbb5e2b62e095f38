use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Machine-readable outcome of one command. `status` is `"pass"` iff every
/// check passed.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub status: &'static str,
    pub checks: Vec<Check>,
    pub stats: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_seconds: Option<f64>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report { command, status: "pass", checks: Vec::new(), stats: BTreeMap::new(), timing_seconds: None }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        if !passed {
            self.status = "fail";
        }
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    /// `check` for an expected value, with the observed one as detail on failure.
    pub fn expect<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, actual: T, expected: T) {
        let detail = if actual == expected { String::new() } else { format!("got {actual:?}, expected {expected:?}") };
        self.check(name, actual == expected, detail);
    }

    pub fn stat(&mut self, key: &str, value: impl Serialize) {
        self.stats.insert(key.to_string(), serde_json::to_value(value).expect("stats serialize"));
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}
