//! Structured pass/fail reports shared by all verifiers.
//!
//! Every verifier emits [`CheckRecord`]s naming one exact identity from the
//! registry in [`crate::checks`], so a failing run always points at the first
//! violated law together with a witness (a basis index, pair or scalar).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::checks::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub check: &'static Check,
    pub status: CheckStatus,
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn pass(check: &'static Check) -> Self {
        CheckRecord {
            check,
            status: CheckStatus::Pass,
            witness: None,
        }
    }

    pub fn pass_noted(check: &'static Check, note: String) -> Self {
        CheckRecord {
            check,
            status: CheckStatus::Pass,
            witness: Some(note),
        }
    }

    pub fn fail(check: &'static Check, witness: String) -> Self {
        CheckRecord {
            check,
            status: CheckStatus::Fail,
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
        };
        write!(f, "{status} {} [{}]", self.check.name, self.check.law)?;
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        Ok(())
    }
}

/// An ordered list of check records.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub records: Vec<CheckRecord>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport {
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    /// Record a boolean outcome for `check`, with `witness` kept on failure.
    pub fn record(&mut self, check: &'static Check, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.push(CheckRecord::pass(check));
        } else {
            self.push(CheckRecord::fail(check, witness()));
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.records.extend(other.records);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.records.iter().find(|r| !r.passed())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
