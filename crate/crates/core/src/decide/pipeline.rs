use serde::{Deserialize, Serialize};

use super::constraints::{collect_constraints, Constraints};
use super::feasible::{enumerate_feasible_vectors, find_deletable_edges};
use super::pattern::CharVector;
use super::patterns::{enumerate_assignment_patterns, PatternSearch};
use super::standard::standard_alon_tarsi;
use super::verdict::{Certificate, UnknownReason, Verdict};
use super::DecideConfig;
use crate::error::{Error, Result};
use crate::graph::{Edge, Problem};
use crate::oracle::color_from_pattern;
use crate::poly::RunStats;

/// What each stage learned, kept even when no verdict is reached.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Findings {
    pub constraint_rank: Option<usize>,
    /// Number of base-degree groups the extended run produced.
    pub constraint_groups: Option<usize>,
    /// Non-zero feasible vectors.
    pub feasible_vectors: Option<Vec<CharVector>>,
    pub deletable_edges: Vec<Edge>,
    pub pattern_count: Option<usize>,
    /// Findings on the problem with the deletable edges removed.
    pub reduced: Option<Box<Findings>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub findings: Findings,
    /// Polynomial work summed over every run.
    pub stats: RunStats,
}

/// Decides `s`-choosability by chaining the stages.
///
/// 1. Standard test: a surviving monomial proves choosability.
/// 2. Extended run: constraint rows on characteristic vectors.
/// 3. Feasible vectors; none non-zero proves choosability.
/// 4. Deletable edges: pairs no feasible vector covers together.
/// 5. Candidate assignments, each checked by the list colorer.
/// 6. Only if there are too many candidates and some edge is deletable,
///    the whole pipeline restarts without those edges.
pub fn pipeline_decide(p: &Problem, cfg: &DecideConfig) -> Result<Decision> {
    cfg.validate()?;
    let mut stats = RunStats::default();
    let (verdict, findings) = match decide_once(p, cfg, &mut stats) {
        Err(Error::Overflow) => (
            Verdict::Unknown {
                reason: UnknownReason::Overflow,
            },
            Findings::default(),
        ),
        other => other?,
    };
    Ok(Decision {
        verdict,
        findings,
        stats,
    })
}

/// Which stages a decision runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecideMode {
    /// Only the standard coefficient test.
    Standard,
    /// Constraint extraction and feasible vectors, without assignments.
    Extended,
    #[default]
    Pipeline,
}

impl std::str::FromStr for DecideMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "standard" => Ok(DecideMode::Standard),
            "extended" => Ok(DecideMode::Extended),
            "pipeline" => Ok(DecideMode::Pipeline),
            _ => Err(Error::InvalidArgument(format!("unknown mode `{s}`"))),
        }
    }
}

/// Runs the stages selected by `mode`.
pub fn decide_with_mode(p: &Problem, cfg: &DecideConfig, mode: DecideMode) -> Result<Decision> {
    if mode == DecideMode::Pipeline {
        return pipeline_decide(p, cfg);
    }
    cfg.validate()?;
    let mut stats = RunStats::default();
    let result = match mode {
        DecideMode::Standard => standard_only(p, cfg, &mut stats),
        _ => extended_only(p, cfg, &mut stats),
    };
    let (verdict, findings) = match result {
        Err(Error::Overflow) => (
            Verdict::Unknown {
                reason: UnknownReason::Overflow,
            },
            Findings::default(),
        ),
        other => other?,
    };
    Ok(Decision {
        verdict,
        findings,
        stats,
    })
}

fn inconclusive(stage: &str) -> Verdict {
    Verdict::Unknown {
        reason: UnknownReason::StageInconclusive { stage: stage.into() },
    }
}

fn standard_only(p: &Problem, cfg: &DecideConfig, stats: &mut RunStats) -> Result<(Verdict, Findings)> {
    let (cert, s) = standard_alon_tarsi(p, cfg)?;
    stats.absorb(&s);
    let verdict = match cert {
        Some(certificate) => Verdict::Choosable { certificate },
        None => inconclusive("standard"),
    };
    Ok((verdict, Findings::default()))
}

fn extended_only(p: &Problem, cfg: &DecideConfig, stats: &mut RunStats) -> Result<(Verdict, Findings)> {
    let mut findings = Findings::default();
    let (constraints, s) = collect_constraints(p, cfg)?;
    stats.absorb(&s);
    let (basis, groups) = match constraints {
        Constraints::Choosable(certificate) => return Ok((Verdict::Choosable { certificate }, findings)),
        Constraints::Rows { basis, groups } => (basis, groups),
    };
    findings.constraint_rank = Some(basis.rank());
    findings.constraint_groups = Some(groups);
    let vectors = match enumerate_feasible_vectors(&basis, cfg.feasible_cap) {
        Ok(v) => v,
        Err(reason) => return Ok((Verdict::Unknown { reason }, findings)),
    };
    let nonzero: Vec<CharVector> = vectors.into_iter().filter(|v| !v.is_zero()).collect();
    findings.deletable_edges = find_deletable_edges(&nonzero, p);
    let empty = nonzero.is_empty();
    findings.feasible_vectors = Some(nonzero);
    if empty {
        let certificate = Certificate::NoFeasibleVectors;
        return Ok((Verdict::Choosable { certificate }, findings));
    }
    Ok((inconclusive("extended"), findings))
}

fn decide_once(p: &Problem, cfg: &DecideConfig, stats: &mut RunStats) -> Result<(Verdict, Findings)> {
    let mut findings = Findings::default();
    let choosable = |certificate| Verdict::Choosable { certificate };
    let unknown = |reason| Verdict::Unknown { reason };

    let (cert, s) = standard_alon_tarsi(p, cfg)?;
    stats.absorb(&s);
    if let Some(c) = cert {
        return Ok((choosable(c), findings));
    }

    let (constraints, s) = collect_constraints(p, cfg)?;
    stats.absorb(&s);
    let (basis, groups) = match constraints {
        Constraints::Choosable(c) => return Ok((choosable(c), findings)),
        Constraints::Rows { basis, groups } => (basis, groups),
    };
    findings.constraint_rank = Some(basis.rank());
    findings.constraint_groups = Some(groups);

    let vectors = match enumerate_feasible_vectors(&basis, cfg.feasible_cap) {
        Ok(v) => v,
        Err(reason) => return Ok((unknown(reason), findings)),
    };
    let nonzero: Vec<CharVector> = vectors.into_iter().filter(|v| !v.is_zero()).collect();
    findings.feasible_vectors = Some(nonzero.clone());
    if nonzero.is_empty() {
        return Ok((choosable(Certificate::NoFeasibleVectors), findings));
    }

    let deletable = find_deletable_edges(&nonzero, p);
    findings.deletable_edges = deletable.clone();

    match enumerate_assignment_patterns(&nonzero, p.sizes(), cfg.pattern_cap) {
        PatternSearch::Complete(patterns) => {
            findings.pattern_count = Some(patterns.len());
            if patterns.is_empty() {
                return Ok((choosable(Certificate::NoComposition), findings));
            }
            for pattern in &patterns {
                if color_from_pattern(p, pattern).is_none() {
                    let witness = pattern.clone();
                    return Ok((Verdict::NotChoosable { witness }, findings));
                }
            }
            let count = patterns.len();
            Ok((choosable(Certificate::AllPatternsColorable { count }), findings))
        }
        PatternSearch::TooMany { cap } if deletable.is_empty() => {
            let reason = if basis.rank() == 0 {
                UnknownReason::NoConstraints
            } else {
                UnknownReason::TooManyPatterns { cap }
            };
            Ok((unknown(reason), findings))
        }
        PatternSearch::TooMany { .. } => {
            // every bad assignment keeps these endpoints' lists disjoint, so a
            // bad assignment of the reduced problem is bad here too, and the
            // reduced problem is choosable only if this one is
            let reduced = p.without_edges(&deletable);
            let (inner, inner_findings) = decide_once(&reduced, cfg, stats)?;
            findings.reduced = Some(Box::new(inner_findings));
            let verdict = match inner {
                Verdict::Choosable { certificate } => choosable(Certificate::EdgeDeletion {
                    edges: deletable,
                    inner: Box::new(certificate),
                }),
                other => other,
            };
            Ok((verdict, findings))
        }
    }
}
