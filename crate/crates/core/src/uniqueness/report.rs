//! Machine-readable certificate reports.
//!
//! Every check records an expected and an actual value as strings holding
//! exact data (integers, rationals as `p/q`, value lists); a report passes
//! iff every check passes. Reports are deterministic for fixed inputs and
//! options; wall-clock timings are excluded from that contract.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// Short identifier of the mathematical claim the check certifies.
    pub anchor: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportMeta {
    pub pipeline: String,
    pub frame_seed: usize,
    pub extended: bool,
    pub deterministic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub meta: ReportMeta,
    pub checks: Vec<Check>,
    pub annotations: Vec<String>,
    pub pass: bool,
    pub timings: BTreeMap<String, f64>,
}

impl CertificateReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// JSON with the timing map removed: byte-identical across runs with
    /// identical inputs and options.
    pub fn to_json_deterministic(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serialization cannot fail");
        value.as_object_mut().unwrap().remove("timings");
        serde_json::to_string_pretty(&value).unwrap()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "pipeline {} (frame seed {}, extended: {})",
            self.meta.pipeline, self.meta.frame_seed, self.meta.extended
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "  [{}] {:<28} {:<24} expected {} | actual {}",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                format!("({})", c.anchor),
                c.expected,
                c.actual,
            );
        }
        for a in &self.annotations {
            let _ = writeln!(out, "  note: {a}");
        }
        let _ = writeln!(out, "overall: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

/// Incrementally assembles a report, stamping per-phase timings.
pub(crate) struct ReportBuilder {
    meta: ReportMeta,
    checks: Vec<Check>,
    annotations: Vec<String>,
    timings: BTreeMap<String, f64>,
}

impl ReportBuilder {
    pub fn new(meta: ReportMeta) -> Self {
        ReportBuilder {
            meta,
            checks: Vec::new(),
            annotations: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    pub fn check(
        &mut self,
        name: &str,
        anchor: &str,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) {
        self.checks.push(Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
    }

    /// A check that is equality of the rendered values.
    pub fn check_eq(
        &mut self,
        name: &str,
        anchor: &str,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        let (e, a) = (expected.to_string(), actual.to_string());
        let pass = e == a;
        self.checks.push(Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            expected: e,
            actual: a,
            pass,
        });
    }

    pub fn skip(&mut self, name: &str, anchor: &str, reason: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            expected: "check to run".into(),
            actual: format!("skipped: {reason}"),
            pass: false,
        });
    }

    pub fn annotate(&mut self, note: impl ToString) {
        self.annotations.push(note.to_string());
    }

    pub fn time(&mut self, phase: &str, seconds: f64) {
        self.timings.insert(phase.to_string(), seconds);
    }

    pub fn finish(self) -> CertificateReport {
        let pass = self.checks.iter().all(|c| c.pass);
        CertificateReport {
            meta: self.meta,
            checks: self.checks,
            annotations: self.annotations,
            pass,
            timings: self.timings,
        }
    }
}
