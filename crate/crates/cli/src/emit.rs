//! Deterministic report serialization.
//!
//! The comparison-relevant body carries no timestamps: identical configs
//! and tool version produce byte-identical body serializations. Wall time
//! lives in a separate `meta` object.

use serde::Serialize;
use sha2::{Digest, Sha256};
use ywkit::report::{CheckStatus, Report};

#[derive(Clone, Debug, Serialize)]
pub struct ReportBody {
    pub suite: String,
    pub tool_version: String,
    pub config_hash: String,
    pub config: serde_json::Value,
    pub checks: Vec<ywkit::report::Check>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub body: ReportBody,
    pub meta: Meta,
}

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub wall_time_ms: u128,
}

pub fn config_hash(config: &serde_json::Value) -> String {
    let canonical = serde_json::to_string(config).expect("config serializes");
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn document(report: Report, config: serde_json::Value, wall_time_ms: u128) -> ReportDocument {
    ReportDocument {
        body: ReportBody {
            suite: report.suite.clone(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config_hash: config_hash(&config),
            config,
            checks: report.checks,
        },
        meta: Meta { wall_time_ms },
    }
}

pub fn to_json(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}

/// Human-readable summary: counterexamples first.
pub fn to_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let body = &doc.body;
    let failures: Vec<_> = body
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Fail)
        .collect();
    out.push_str(&format!(
        "suite {} (tool {}, config {})\n",
        body.suite,
        body.tool_version,
        &body.config_hash[..12]
    ));
    if !failures.is_empty() {
        out.push_str(&format!("FAILURES ({}):\n", failures.len()));
        for c in &failures {
            out.push_str(&format!("  FAIL {}: {}\n", c.name, c.details));
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("       counterexample: {ce}\n"));
            }
        }
    }
    for c in &body.checks {
        if c.status != CheckStatus::Fail {
            let tag = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Skipped => "skip",
                CheckStatus::Fail => unreachable!(),
            };
            out.push_str(&format!("  {tag} {}: {}\n", c.name, c.details));
        }
    }
    let passed = body
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Pass)
        .count();
    out.push_str(&format!(
        "{} checks: {} passed, {} failed ({} ms)\n",
        body.checks.len(),
        passed,
        failures.len(),
        doc.meta.wall_time_ms
    ));
    out
}
