use super::basis::{ConstraintBasis, ConstraintRow};
use super::verdict::Certificate;
use super::DecideConfig;
use crate::error::Result;
use crate::graph::{order_vertices, Problem};
use crate::poly::{run_truncated_product, DegreeLayout, Flow, RunConfig, RunOutcome, RunStats, TermList, NO_MARKER};

/// Result of the extended run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraints {
    /// An unmarked final term exists, so the problem is choosable outright.
    Choosable(Certificate),
    /// Independent constraint rows, plus the number of base groups seen.
    Rows { basis: ConstraintBasis, groups: usize },
}

/// Runs the extended product and turns each group of tight terms sharing a
/// base degree into one constraint row.
///
/// For a base `f` with every `f(v) < s(v)` except `f(w) = s(w) - 1` somewhere,
/// the row is `[x^(f + 1_z)] P` for each vertex `z`. Rows are offered to the
/// basis by decreasing base degree in processing order.
pub fn collect_constraints(p: &Problem, cfg: &DecideConfig) -> Result<(Constraints, RunStats)> {
    let n = p.vertex_count();
    let ordering = order_vertices(p, cfg.heuristic);
    let run = RunConfig::extended()
        .with_branch_limit(cfg.branch_limit)
        .with_pruning(cfg.prune_matching);
    let mut basis = ConstraintBasis::new(n);
    let mut groups = 0;
    let mut sink = |layout: &DegreeLayout, terms: &TermList| -> Result<Flow> {
        // decreasing key order keeps the retained rows independent of splitting
        for g in terms.key_groups().into_iter().rev() {
            let mut row = vec![0i64; n];
            for i in g.clone() {
                let m = terms.raw_marker(i);
                debug_assert_ne!(m, NO_MARKER);
                row[layout.vertex(m as usize - 1)] = terms.coefficient(i);
            }
            groups += 1;
            basis.insert(ConstraintRow {
                coefficients: row,
                base: layout.unpack(terms.key(g.start)),
            });
        }
        Ok(Flow::Continue)
    };
    let (outcome, stats) = run_truncated_product(p, &ordering, &run, &mut sink)?;
    let result = match outcome {
        RunOutcome::Witness(m) => Constraints::Choosable(Certificate::WitnessMonomial {
            degrees: m.base,
            coefficient: m.coefficient,
        }),
        _ => Constraints::Rows { basis, groups },
    };
    Ok((result, stats))
}
