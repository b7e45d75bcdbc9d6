//! Structured outcome of a verification check.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub notes: String,
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Accumulates sub-checks; the report fails as soon as one sub-check fails.
pub struct ReportBuilder {
    check_id: String,
    params: BTreeMap<String, String>,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
    failed: bool,
    skipped: bool,
}

impl ReportBuilder {
    pub fn new(check_id: &str) -> Self {
        ReportBuilder {
            check_id: check_id.to_string(),
            params: BTreeMap::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            failed: false,
            skipped: false,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn witness(&mut self, label: impl Into<String>, value: impl ToString) {
        self.witnesses.push(Witness { label: label.into(), value: value.to_string() });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Records a sub-check; a failure adds a witness describing it.
    pub fn check(&mut self, ok: bool, label: impl Into<String>, detail: impl ToString) -> bool {
        if !ok {
            self.failed = true;
            self.witness(format!("FAILED {}", label.into()), detail);
        }
        ok
    }

    pub fn fail(&mut self, label: impl Into<String>, detail: impl ToString) {
        self.check(false, label, detail);
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        self.skipped = true;
        self.note(reason);
    }

    pub fn has_failed(&self) -> bool {
        self.failed
    }

    pub fn finish(self) -> VerificationReport {
        let status = if self.failed {
            Status::Fail
        } else if self.skipped {
            Status::Skipped
        } else {
            Status::Pass
        };
        VerificationReport {
            check_id: self.check_id,
            params: self.params,
            status,
            witnesses: self.witnesses,
            notes: self.notes.join("; "),
            elapsed_ms: None,
        }
    }
}
