use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::io::ModuleSpec;

pub const TOOL: &str = "nakayama";
pub const REPORT_SCHEMA: &str = "report.v1";

/// The output of every command. Apart from `timing_ms` the serialized form
/// depends only on the inputs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub tool: String,
    pub version: String,
    pub command: String,
    /// sha256 of the canonical JSON of the inputs.
    pub input_digest: String,
    pub bound: Option<usize>,
    pub results: serde_json::Value,
    /// Every module the results talk about, in a form `--modules` accepts.
    pub tested_set: Vec<ModuleSpec>,
    pub timing_ms: f64,
}

impl ReportDocument {
    pub fn new(
        command: &str,
        inputs: &[serde_json::Value],
        bound: Option<usize>,
        results: serde_json::Value,
        tested_set: Vec<ModuleSpec>,
    ) -> ReportDocument {
        ReportDocument {
            schema: REPORT_SCHEMA.into(),
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input_digest: digest(inputs),
            bound,
            results,
            tested_set,
            timing_ms: 0.0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<ReportDocument> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }
}

/// Key order in `serde_json::Value` maps is sorted, so equal documents
/// digest equally however they were written.
pub fn digest(inputs: &[serde_json::Value]) -> String {
    let mut h = Sha256::new();
    for v in inputs {
        h.update(serde_json::to_vec(v).expect("values serialize"));
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}
