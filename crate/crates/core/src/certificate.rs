//! Machine-readable verdicts of verification sweeps.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = concat!("injcat ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub counts: BTreeMap<String, u64>,
    /// Minimal reproducer for the first failing check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Value>,
    /// Command-specific payload, e.g. per-object rank records or matrix dumps.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub elapsed_ms: u64,
    pub tool_version: String,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    /// Zeroes the timing so that repeated runs compare byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

/// Accumulates counts and the first failure of a sweep.
#[derive(Debug)]
pub struct CertificateBuilder {
    command: String,
    parameters: BTreeMap<String, Value>,
    counts: BTreeMap<String, u64>,
    first_failure: Option<Value>,
    details: Option<Value>,
    started: Instant,
}

impl CertificateBuilder {
    pub fn new(command: impl Into<String>) -> Self {
        CertificateBuilder {
            command: command.into(),
            parameters: BTreeMap::new(),
            counts: BTreeMap::new(),
            first_failure: None,
            details: None,
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable parameter"));
        self
    }

    pub fn bump(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    pub fn set_count(&mut self, key: &str, value: u64) {
        self.counts.insert(key.to_string(), value);
    }

    /// Records a failure; only the first one is kept.
    pub fn fail(&mut self, locator: Value) {
        if self.first_failure.is_none() {
            self.first_failure = Some(locator);
        }
    }

    pub fn has_failed(&self) -> bool {
        self.first_failure.is_some()
    }

    pub fn details(&mut self, details: Value) {
        self.details = Some(details);
    }

    /// Merges another certificate's counts (prefixed) and failure.
    pub fn absorb(&mut self, prefix: &str, other: &Certificate) {
        for (k, v) in &other.counts {
            self.bump(&format!("{prefix}.{k}"), *v);
        }
        if let Some(f) = &other.first_failure {
            self.fail(serde_json::json!({ "check": prefix, "failure": f }));
        }
    }

    pub fn finish(self) -> Certificate {
        let verdict = if self.first_failure.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        Certificate {
            schema_version: SCHEMA_VERSION,
            command: self.command,
            parameters: self.parameters,
            verdict,
            counts: self.counts,
            first_failure: self.first_failure,
            details: self.details,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            tool_version: TOOL_VERSION.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn fail_implies_first_failure() {
        let mut b = CertificateBuilder::new("demo").param("n", 3);
        b.bump("checked", 2);
        b.fail(json!({"at": "2,1"}));
        b.fail(json!({"at": "3"}));
        let c = b.finish();
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.first_failure, Some(json!({"at": "2,1"})));
    }

    #[test]
    fn round_trip() {
        let mut b = CertificateBuilder::new("demo");
        b.bump("checked", 1);
        let c = b.finish().without_timing();
        let back: Certificate = serde_json::from_str(&c.to_json_pretty()).unwrap();
        assert_eq!(back, c);
        assert!(back.passed());
    }
}
