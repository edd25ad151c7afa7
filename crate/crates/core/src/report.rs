//! Verification reports shared by the library drivers and the CLI.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one verification run.
///
/// `confirmed + refuted == candidates_checked`; `witnesses` lists refuting
/// candidates in candidate order. `details` carries claim-specific data
/// (group orders, lattice bases) and is omitted when empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub parameters: BTreeMap<String, Value>,
    pub candidates_checked: u64,
    pub confirmed: u64,
    pub refuted: u64,
    pub witnesses: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl Report {
    pub fn new(claim: impl Into<String>) -> Self {
        Report {
            claim: claim.into(),
            parameters: BTreeMap::new(),
            candidates_checked: 0,
            confirmed: 0,
            refuted: 0,
            witnesses: Vec::new(),
            details: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_owned(), value.into());
        self
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    /// Records one candidate; `witness` is kept only when the check failed.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.candidates_checked += 1;
        if ok {
            self.confirmed += 1;
        } else {
            self.refuted += 1;
            self.witnesses.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.refuted == 0 && self.confirmed == self.candidates_checked
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim)?;
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(f, "parameters: {}", params.join(" "))?;
        writeln!(
            f,
            "checked {} candidates: {} confirmed, {} refuted",
            self.candidates_checked, self.confirmed, self.refuted
        )?;
        if let Some(Value::Object(details)) = &self.details {
            for (k, v) in details {
                writeln!(f, "  {k}: {v}")?;
            }
        }
        for w in &self.witnesses {
            writeln!(f, "  witness: {w}")?;
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn record_and_shape() {
        let mut r = Report::new("demo").param("n", 4);
        r.record(true, || json!("unused"));
        r.record(false, || json!({"k": 1}));
        assert!(!r.passed());
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in [
            "claim",
            "parameters",
            "candidates_checked",
            "confirmed",
            "refuted",
            "witnesses",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert!(v.get("details").is_none());
        assert_eq!(v["witnesses"], json!([{"k": 1}]));
    }
}
