use std::io::Write;

use serde::Serialize;
use serde_json::Value;
use sge_core::io::write_edge_list;
use sge_core::Graph;
use sha2::{Digest, Sha256};

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Internal = 1,
    Input = 2,
    Budget = 3,
    /// Crosscheck disagreement or a rejected witness.
    Failed = 4,
}

#[derive(Debug, Serialize)]
pub struct BudgetUse {
    pub limit: u64,
    pub used: u64,
}

/// The JSON document every command prints on stdout.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub args: Vec<String>,
    pub input_fingerprint: Option<String>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<BudgetUse>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: &str, result: Value) -> Self {
        RunReport {
            command: command.to_string(),
            args: std::env::args().skip(1).collect(),
            input_fingerprint: None,
            result,
            budget: None,
            timing_ms: None,
        }
    }

    /// Writes the report to stdout; a closed pipe is not an error.
    pub fn print(&self) {
        let text = serde_json::to_string_pretty(self).expect("report serializes");
        let _ = writeln!(std::io::stdout().lock(), "{text}");
    }
}

/// SHA-256 of the canonical edge list.
pub fn fingerprint(g: &Graph) -> String {
    let digest = Sha256::digest(write_edge_list(g).as_bytes());
    format!("sha256:{}", hex::encode(digest))
}
