//! The CLI report schema.
//!
//! JSON output follows {"command", "config", "results": [{"name",
//! "pass", "detail"}], "elapsed_ms"}. Output is byte-reproducible for a
//! fixed configuration, so `elapsed_ms` is always reported as 0.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ReportLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub config: serde_json::Value,
    pub results: Vec<ReportLine>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, config: serde_json::Value) -> Self {
        Report {
            command: command.into(),
            config,
            results: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.results.push(ReportLine {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
