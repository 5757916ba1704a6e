//! Machine-readable suite reports.
//!
//! Reports are deterministic given (config, seed): cases are sorted by
//! name and wall-clock timings never enter the serialized form (they are
//! printed to stderr instead).

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "exact-pass")]
    ExactPass,
    #[serde(rename = "pass(tol)")]
    PassTol,
    #[serde(rename = "fail")]
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub name: String,
    /// Digest of the model(s) the case ran on.
    pub model: String,
    pub status: Status,
    /// Key witness values (exact strings or high-precision decimals).
    pub witness: BTreeMap<String, String>,
    /// Wall-clock runtime; reported on stderr only to keep the serialized
    /// report byte-identical across runs.
    #[serde(skip)]
    pub runtime_ms: u128,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub precision_bits: usize,
    pub cases: Vec<CaseReport>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, precision_bits: usize, mut cases: Vec<CaseReport>) -> Self {
        cases.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = cases.iter().all(|c| c.passed());
        SuiteReport {
            suite: suite.to_string(),
            seed,
            precision_bits,
            cases,
            passed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn print_timings(&self) {
        for c in &self.cases {
            eprintln!(
                "  [{:>10}] {:<44} {} ms",
                match c.status {
                    Status::ExactPass => "exact-pass",
                    Status::PassTol => "pass(tol)",
                    Status::Fail => "FAIL",
                },
                c.name,
                c.runtime_ms
            );
        }
    }
}

/// Short digest of a canonical model serialization.
pub fn model_digest(canonical: &str) -> String {
    use sha2::{Digest, Sha256};
    let hash = Sha256::digest(canonical.as_bytes());
    hash.iter().take(6).map(|b| format!("{b:02x}")).collect()
}
