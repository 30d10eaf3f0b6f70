//! Machine-readable run reports.
//!
//! Every type here serializes with a fixed field order and uses ordered maps,
//! so a serialized report parses back and re-serializes to the same bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cut::IdentityReport;
use crate::hcd::EmbeddingReport;
use crate::nccd::InequalityReport;
use crate::poset::{write_poset, Poset};

/// One asserted check: pass/fail, with a witness when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn pass(name: &str) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: &str, witness: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: false,
            witness: Some(witness.into()),
        }
    }

    pub fn from_result(name: &str, result: Result<(), String>) -> Self {
        match result {
            Ok(()) => Self::pass(name),
            Err(w) => Self::fail(name, w),
        }
    }
}

/// Something worth reporting that is not asserted (open questions,
/// unmet hypotheses, strictness patterns).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub kind: String,
    pub detail: String,
}

impl Finding {
    pub fn new(kind: &str, detail: impl Into<String>) -> Self {
        Finding {
            kind: kind.to_string(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSummary {
    pub n: usize,
    pub covers: usize,
    /// The poset in the text format, lines joined by `"; "`.
    pub text: String,
}

impl PosetSummary {
    pub fn of(p: &Poset) -> Self {
        PosetSummary {
            n: p.len(),
            covers: p.covers().len(),
            text: compact(p),
        }
    }
}

/// The text format on one line.
pub fn compact(p: &Poset) -> String {
    write_poset(p).trim_end().replace('\n', "; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilworthResult {
    pub min: usize,
    pub chains: Vec<Vec<String>>,
    pub antichain: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MhcdResult {
    pub min_h: usize,
    pub chains: Vec<Vec<String>>,
    /// `(size, number of chains)` per size class.
    pub length_classes: Vec<(usize, usize)>,
    pub graph_edges: Vec<(usize, usize)>,
    pub orientation_arcs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutEntry {
    pub heights: Vec<usize>,
    pub report: IdentityReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCheckResult {
    pub admissible_cuts: usize,
    pub identity_holds: usize,
    pub j_invertible: bool,
    /// The first few cuts in full.
    pub cuts: Vec<CutEntry>,
}

/// Output of `analyze`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub poset: PosetSummary,
    pub analyses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dilworth: Option<DilworthResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mhcd: Option<MhcdResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cut_check: Option<CutCheckResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub embedding: Option<EmbeddingReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inequalities: Option<InequalityReport>,
    pub checks: Vec<CheckOutcome>,
    pub findings: Vec<Finding>,
    pub timings_us: BTreeMap<String, u64>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// One poset of a verification suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetOutcome {
    pub index: usize,
    pub family: String,
    pub poset: PosetSummary,
    pub passed: bool,
    /// Failed checks only.
    pub failures: Vec<CheckOutcome>,
    pub findings: Vec<Finding>,
    pub skipped: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

/// Closing line of a verification suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub posets: usize,
    pub passed: bool,
    pub checks: BTreeMap<String, Tally>,
    pub findings: BTreeMap<String, u64>,
    pub timings_us: BTreeMap<String, u64>,
}
