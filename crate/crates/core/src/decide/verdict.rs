use std::fmt;

use serde::{Deserialize, Serialize};

use super::pattern::AssignmentPattern;
use crate::graph::Edge;

/// Why a problem was found choosable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// A monomial with every degree below the list size and non-zero coefficient.
    WitnessMonomial { degrees: Vec<u32>, coefficient: i64 },
    /// The constraints admit no non-zero characteristic vector.
    NoFeasibleVectors,
    /// No combination of feasible vectors gives the list sizes.
    NoComposition,
    /// Every candidate assignment was colored.
    AllPatternsColorable { count: usize },
    /// The edges are deletable and the smaller problem is choosable.
    EdgeDeletion { edges: Vec<Edge>, inner: Box<Certificate> },
    /// Every assignment up to renaming was colored.
    Exhaustive { assignments: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum UnknownReason {
    TooManyPatterns { cap: usize },
    NoConstraints,
    Overflow,
    FeasibleSearchTooLarge { n: usize, cap: usize },
    /// A single stage was requested and it did not settle the question.
    StageInconclusive { stage: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    #[serde(rename = "CHOOSABLE")]
    Choosable { certificate: Certificate },
    #[serde(rename = "NOT_CHOOSABLE")]
    NotChoosable { witness: AssignmentPattern },
    #[serde(rename = "UNKNOWN")]
    Unknown { reason: UnknownReason },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Choosable { .. } => "CHOOSABLE",
            Verdict::NotChoosable { .. } => "NOT_CHOOSABLE",
            Verdict::Unknown { .. } => "UNKNOWN",
        }
    }

    pub fn is_decisive(&self) -> bool {
        !matches!(self, Verdict::Unknown { .. })
    }

    /// Process exit code: 0 choosable, 1 not choosable, 2 unknown.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Choosable { .. } => 0,
            Verdict::NotChoosable { .. } => 1,
            Verdict::Unknown { .. } => 2,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::WitnessMonomial {
                degrees,
                coefficient,
            } => {
                let d: Vec<String> = degrees.iter().map(u32::to_string).collect();
                write!(f, "witness monomial f = ({}), coefficient {coefficient}", d.join(","))
            }
            Certificate::NoFeasibleVectors => write!(f, "no non-zero feasible characteristic vector"),
            Certificate::NoComposition => write!(f, "feasible vectors cannot compose the list sizes"),
            Certificate::AllPatternsColorable { count } => {
                write!(f, "all {count} candidate assignment(s) are colorable")
            }
            Certificate::EdgeDeletion { edges, inner } => {
                let e: Vec<String> = edges.iter().map(Edge::to_string).collect();
                write!(f, "deletable edges [{}]; reduced problem: {inner}", e.join(", "))
            }
            Certificate::Exhaustive { assignments } => {
                write!(f, "all {assignments} assignment(s) colorable")
            }
        }
    }
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnknownReason::TooManyPatterns { cap } => write!(f, "more than {cap} candidate assignments"),
            UnknownReason::NoConstraints => write!(f, "all constraint coefficients are zero"),
            UnknownReason::Overflow => write!(f, "coefficient overflow"),
            UnknownReason::FeasibleSearchTooLarge { n, cap } => {
                write!(f, "{n} vertices exceed the feasible-vector search cap {cap}")
            }
            UnknownReason::StageInconclusive { stage } => write!(f, "{stage} stage is inconclusive"),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Choosable { certificate } => write!(f, "CHOOSABLE: {certificate}"),
            Verdict::NotChoosable { witness } => write!(f, "NOT_CHOOSABLE: witness {witness}"),
            Verdict::Unknown { reason } => write!(f, "UNKNOWN: {reason}"),
        }
    }
}
