//! Input and output documents.
//!
//! The input schema (version "1") is a named list of group specs:
//!
//! ```json
//! {
//!   "version": "1",
//!   "groups": [
//!     { "name": "torus", "group": { "tag": "free_abelian", "n": 2 } }
//!   ]
//! }
//! ```
//!
//! Matrix entries may be JSON integers or decimal strings; strings are
//! the lossless path for values beyond 64 bits.
//!
//! Reports are deterministic: groups are sorted by name, encoding is
//! canonical `serde_json` pretty-printing, and a report re-encodes
//! byte-identically after a round trip through its own JSON.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use vcyc_core::cohomology::{CohomologyTable, MvCertificate};
use vcyc_core::engine::DimReport;
use vcyc_core::group::{validate_spec, GroupSpec};

pub const SCHEMA_VERSION: &str = "1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Document-level failure: the whole input is rejected.
#[derive(Debug)]
pub enum DocError {
    Json(String),
    Version(String),
    DuplicateName(String),
}

impl std::fmt::Display for DocError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DocError::Json(e) => write!(f, "malformed JSON: {e}"),
            DocError::Version(v) => {
                write!(f, "unsupported schema version {v:?} (expected {SCHEMA_VERSION:?})")
            }
            DocError::DuplicateName(n) => write!(f, "duplicate group name {n:?}"),
        }
    }
}

#[derive(Deserialize)]
struct RawDocument {
    version: String,
    groups: Vec<RawEntry>,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    group: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub name: String,
    pub rule: String,
    pub message: String,
}

/// A parsed spec document: entries that survived per-entry validation,
/// plus diagnostics for those that did not. An invalid entry never
/// affects the others.
pub struct SpecDocument {
    pub entries: Vec<(String, GroupSpec)>,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn parse_spec(bytes: &[u8]) -> Result<SpecDocument, DocError> {
    let raw: RawDocument =
        serde_json::from_slice(bytes).map_err(|e| DocError::Json(e.to_string()))?;
    if raw.version != SCHEMA_VERSION {
        return Err(DocError::Version(raw.version));
    }
    let mut seen = std::collections::HashSet::new();
    for e in &raw.groups {
        if !seen.insert(e.name.clone()) {
            return Err(DocError::DuplicateName(e.name.clone()));
        }
    }
    let mut entries = Vec::new();
    let mut diagnostics = Vec::new();
    for e in raw.groups {
        match serde_json::from_value::<GroupSpec>(e.group) {
            Err(err) => diagnostics.push(Diagnostic {
                name: e.name,
                rule: "schema".to_string(),
                message: format!("unrecognized group spec: {err}"),
            }),
            Ok(spec) => {
                let report = validate_spec(&spec);
                if report.ok {
                    entries.push((e.name, spec));
                } else {
                    for v in report.violations {
                        diagnostics.push(Diagnostic {
                            name: e.name.clone(),
                            rule: v.rule,
                            message: v.message,
                        });
                    }
                }
            }
        }
    }
    Ok(SpecDocument { entries, diagnostics })
}

/// Per-group section of a report document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupReport {
    pub name: String,
    pub report: DimReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologyTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mv_certificate: Option<MvCertificate>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_depth: Option<u64>,
    pub groups: Vec<GroupReport>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ReportDocument {
    pub fn new(groups: Vec<GroupReport>, diagnostics: Vec<Diagnostic>) -> Self {
        let mut groups = groups;
        groups.sort_by(|a, b| a.name.cmp(&b.name));
        let mut diagnostics = diagnostics;
        diagnostics.sort_by(|a, b| (&a.name, &a.rule).cmp(&(&b.name, &b.rule)));
        ReportDocument {
            tool_version: TOOL_VERSION.to_string(),
            oracle_depth: None,
            groups,
            diagnostics,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization is total");
        s.push('\n');
        s
    }
}
