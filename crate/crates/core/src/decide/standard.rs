use super::verdict::Certificate;
use super::DecideConfig;
use crate::error::Result;
use crate::graph::{order_vertices, Problem};
use crate::poly::{run_truncated_product, DegreeLayout, Flow, RunConfig, RunOutcome, RunStats, TermList};

/// Looks for a monomial with every degree below its list size and non-zero
/// coefficient. Returns a `WitnessMonomial` certificate when one exists.
pub fn standard_alon_tarsi(p: &Problem, cfg: &DecideConfig) -> Result<(Option<Certificate>, RunStats)> {
    let ordering = order_vertices(p, cfg.heuristic);
    let run = RunConfig::standard()
        .with_branch_limit(cfg.branch_limit)
        .with_pruning(cfg.prune_matching);
    // in standard mode every final term is unmarked, so early stop catches it
    let (outcome, stats) = run_truncated_product(p, &ordering, &run, &mut |_: &DegreeLayout, _: &TermList| Ok(Flow::Continue))?;
    let cert = match outcome {
        RunOutcome::Witness(m) => Some(Certificate::WitnessMonomial {
            degrees: m.base,
            coefficient: m.coefficient,
        }),
        _ => None,
    };
    Ok((cert, stats))
}
