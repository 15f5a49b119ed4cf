// SPDX-License-Identifier: MIT OR Apache-2.0

//! Structured verification records.
//!
//! Every identity check in the library reduces to a list of
//! [`CheckRecord`]s: one row per `(check, γ, n)` with the exact value
//! rendered as a string, the computed numeric value, the relative error,
//! and a three-state status. `Warn` is reserved for documented
//! discrepancies in published displays — values the library reproduces
//! and reports but does not propagate.

use alloc::string::String;

/// Outcome of a single check row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckStatus {
    /// Identity holds within tolerance.
    Pass,
    /// Documented discrepancy in a published display (not an error of
    /// the library).
    Warn,
    /// Identity violated.
    Fail,
}

impl core::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Warn => "WARN",
            CheckStatus::Fail => "FAIL",
        })
    }
}

/// One verification row.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckRecord {
    /// Check family (e.g. `"moment"`, `"kernel-row"`).
    pub check: String,
    /// Parameter value the row was evaluated at, rendered exactly
    /// (`"0"`, `"1"`, `"5/2"`, …), when applicable.
    pub gamma: Option<String>,
    /// Index within the check, when applicable.
    pub n: Option<u32>,
    /// Exact reference value, rendered as text.
    pub exact: String,
    /// Computed floating-point value.
    pub numeric: f64,
    /// Relative error of `numeric` against the exact value.
    pub rel_err: f64,
    /// Row status.
    pub status: CheckStatus,
    /// Optional annotation (convention notes, erratum pointers).
    pub note: Option<String>,
}

impl CheckRecord {
    /// Grade a relative error against a tolerance.
    pub fn grade(rel_err: f64, tol: f64) -> CheckStatus {
        if rel_err.is_finite() && rel_err <= tol {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

impl core::fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} {}", self.status, self.check)?;
        if let Some(g) = &self.gamma {
            write!(f, " gamma={g}")?;
        }
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        write!(f, ": exact {} numeric {:.12e} rel {:.3e}", self.exact, self.numeric, self.rel_err)?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Most severe status in a batch (`Pass` for an empty batch).
pub fn worst(records: &[CheckRecord]) -> CheckStatus {
    records.iter().map(|r| r.status).max().unwrap_or(CheckStatus::Pass)
}
