//! Machine-readable reports.

use serde::{Deserialize, Serialize};

use crate::bench::BenchTable;
use crate::decide::{DecideConfig, Findings, Verdict};
use crate::graph::Problem;
use crate::poly::RunStats;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSummary {
    pub name: Option<String>,
    pub vertices: usize,
    pub edges: usize,
    pub sizes: Vec<u32>,
}

impl From<&Problem> for ProblemSummary {
    fn from(p: &Problem) -> Self {
        ProblemSummary {
            name: p.name().map(str::to_owned),
            vertices: p.vertex_count(),
            edges: p.edge_count(),
            sizes: p.sizes().to_vec(),
        }
    }
}

/// The effective settings of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunSettings {
    pub command: String,
    pub mode: Option<String>,
    #[serde(flatten)]
    pub decide: DecideConfig,
    pub format: String,
}

/// Report of a decision run. The verdict fields are flattened to the top
/// level (`verdict`, then `certificate`, `witness` or `reason`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub problem: ProblemSummary,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub findings: Findings,
    pub stats: RunStats,
    pub config: RunSettings,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bench: Option<BenchTable>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}
