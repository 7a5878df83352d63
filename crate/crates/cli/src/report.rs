use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use polychrome::bits;
use polychrome::error::{AxiomViolation, Error};

/// The document every successful or incomplete command prints.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: CommandEcho,
    pub input_digest: String,
    pub results: Map<String, Value>,
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommandEcho {
    pub name: String,
    pub args: Vec<String>,
}

/// SHA-256 over every input, each prefixed by its byte length so that
/// different splits of the same bytes hash differently.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    hex::encode(h.finalize())
}

pub enum Failure {
    Engine(Error),
    Io { path: String, message: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Engine(Error::Incomplete { .. }) => 3,
            Failure::Engine(Error::CapExceeded { .. }) => 4,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Failure::Io { path, message } => json!({
                "error": { "kind": "io", "path": path, "message": message }
            }),
            Failure::Engine(e) => {
                let mut body = json!({ "kind": kind(e), "message": e.to_string() });
                if let Error::Axiom(v) = e {
                    if let Some((a, b)) = v.witness() {
                        body["witness"] = json!({
                            "a": bits::elements(a).collect::<Vec<_>>(),
                            "b": bits::elements(b).collect::<Vec<_>>(),
                        });
                    }
                    body["axiom"] = json!(axiom_name(v));
                }
                if let Error::CapExceeded { size, cap, .. } = e {
                    body["size"] = json!(size);
                    body["cap"] = json!(cap);
                }
                if let Error::Incomplete { budget } = e {
                    body["budget"] = json!(budget);
                }
                json!({ "error": body })
            }
        }
    }
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::Axiom(_) => "axiom",
        Error::CapExceeded { .. } => "cap_exceeded",
        Error::NotSubset { .. } => "not_subset",
        Error::OutOfRange(_) => "out_of_range",
        Error::NotKPolymatroid { .. } => "not_k_polymatroid",
        Error::NotMatroid(_) => "not_matroid",
        Error::GroundMismatch { .. } => "ground_mismatch",
        Error::Incomplete { .. } => "incomplete",
        Error::Precondition(_) => "precondition",
        Error::InvalidNames(_) => "invalid_names",
        Error::Format(_) => "format",
        Error::Json(_) => "json",
    }
}

fn axiom_name(v: &AxiomViolation) -> &'static str {
    match v {
        AxiomViolation::TableLength { .. } => "table_length",
        AxiomViolation::NotNormalized(_) => "not_normalized",
        AxiomViolation::NegativeRank(_) => "negative_rank",
        AxiomViolation::NotMonotone { .. } => "not_monotone",
        AxiomViolation::NotSubmodular { .. } => "not_submodular",
    }
}
