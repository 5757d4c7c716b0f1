//! Choosability decisions: the standard coefficient test, constraint
//! extraction, candidate assignments and the combined pipeline.

mod basis;
mod constraints;
mod feasible;
mod pattern;
mod patterns;
mod pipeline;
mod standard;
mod verdict;

use serde::{Deserialize, Serialize};

use crate::graph::Heuristic;
use crate::poly::DEFAULT_BRANCH_LIMIT;

pub use basis::{ConstraintBasis, ConstraintRow, FIELD_PRIME};
pub use constraints::{collect_constraints, Constraints};
pub use feasible::{enumerate_feasible_vectors, find_deletable_edges};
pub use pattern::{AssignmentPattern, CharVector, PatternPart};
pub use patterns::{enumerate_assignment_patterns, PatternSearch};
pub use pipeline::{decide_with_mode, pipeline_decide, DecideMode, Decision, Findings};
pub use standard::standard_alon_tarsi;
pub use verdict::{Certificate, UnknownReason, Verdict};

pub const DEFAULT_PATTERN_CAP: usize = 100;
pub const DEFAULT_FEASIBLE_CAP: usize = 25;

/// Settings shared by every decision stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecideConfig {
    pub heuristic: Heuristic,
    pub branch_limit: usize,
    pub pattern_cap: usize,
    /// Largest vertex count for the exhaustive feasible-vector scan.
    pub feasible_cap: usize,
    pub prune_matching: bool,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            heuristic: Heuristic::default(),
            branch_limit: DEFAULT_BRANCH_LIMIT,
            pattern_cap: DEFAULT_PATTERN_CAP,
            feasible_cap: DEFAULT_FEASIBLE_CAP,
            prune_matching: false,
        }
    }
}

impl DecideConfig {
    pub fn validate(&self) -> crate::Result<()> {
        let bad = |m: &str| Err(crate::Error::InvalidArgument(m.into()));
        if self.branch_limit == 0 {
            return bad("branch limit must be positive");
        }
        if self.pattern_cap == 0 {
            return bad("pattern cap must be positive");
        }
        if self.feasible_cap == 0 || self.feasible_cap >= CharVector::MAX_LEN {
            return bad("feasible cap must be between 1 and 63");
        }
        Ok(())
    }
}
