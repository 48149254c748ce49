//! Check outcomes and suite reports.

use std::fmt::{self, Display, Write as _};

use serde::{Deserialize, Serialize};

/// Result of one exact identity check. A failing check carries the printed
/// nonzero difference as its witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub id: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass(id: impl Into<String>) -> Self {
        Self { id: id.into(), passed: true, witness: None }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Self { id: id.into(), passed: false, witness: Some(witness.into()) }
    }

    /// Passes iff `diff` is zero.
    pub fn zero<D: Display>(id: impl Into<String>, is_zero: bool, diff: &D) -> Self {
        if is_zero {
            Self::pass(id)
        } else {
            Self::fail(id, diff.to_string())
        }
    }

    /// Negative control: passes iff the perturbed identity is violated; the
    /// nonzero defect is kept as witness either way.
    pub fn violated<D: Display>(id: impl Into<String>, is_zero: bool, diff: &D) -> Self {
        let id = id.into();
        if is_zero {
            Self { id, passed: false, witness: Some("perturbed identity unexpectedly holds".into()) }
        } else {
            Self { id, passed: true, witness: Some(diff.to_string()) }
        }
    }

    pub fn with_prefix(mut self, prefix: &str) -> Self {
        self.id = format!("{prefix}{}", self.id);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub preset: String,
    pub checks: Vec<CheckRecord>,
    pub status: Status,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, preset: impl Into<String>, checks: Vec<CheckRecord>) -> Self {
        let status = if checks.iter().all(|c| c.status == Status::Pass) { Status::Pass } else { Status::Fail };
        Self { suite: suite.into(), preset: preset.into(), checks, status }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (preset {}): {}", self.suite, self.preset, self.status);
        let _ = writeln!(out, "{:<width$}  {:<6}  {:>8}  witness", "check", "status", "ms");
        for c in &self.checks {
            let _ = writeln!(out, "{:<width$}  {:<6}  {:>8}  {}", c.id, c.status, c.ms, c.witness.as_deref().unwrap_or(""));
        }
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn format_report(report: &SuiteReport, mode: Format) -> String {
    match mode {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_passes() {
        let r = SuiteReport::new("empty", "none", vec![]);
        assert!(r.passed());
        assert!(r.to_text().contains("0 checks"));
    }

    #[test]
    fn one_failure_fails_suite() {
        let checks = vec![
            CheckRecord { id: "ok".into(), status: Status::Pass, witness: None, ms: 1 },
            CheckRecord { id: "bad".into(), status: Status::Fail, witness: Some("t b".into()), ms: 2 },
        ];
        let r = SuiteReport::new("s", "rplus", checks);
        assert_eq!(r.status, Status::Fail);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["status"], "fail");
        assert_eq!(json["checks"][1]["witness"], "t b");
        assert!(json["checks"][0].get("witness").is_none());
        assert_eq!(SuiteReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn negative_control_keeps_witness() {
        let o = Outcome::violated("neg", false, &"b");
        assert!(o.passed);
        assert_eq!(o.witness.as_deref(), Some("b"));
        assert!(!Outcome::violated("neg", true, &"0").passed);
    }
}
