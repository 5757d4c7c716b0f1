//! Compares vertex-ordering heuristics by the work of a full standard run.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{order_vertices, Heuristic, Problem};
use crate::poly::{run_truncated_product, DegreeLayout, Flow, RunConfig, RunStats, TermList};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub heuristic: Heuristic,
    /// `None` when the run failed, see `error`.
    pub stats: Option<RunStats>,
    /// Monomial count as a percentage of the `INPUT` ordering's count.
    pub relative_percent: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchTable {
    pub baseline: Option<RunStats>,
    pub rows: Vec<BenchRow>,
}

/// Total work of a full standard run: no early stop and no splitting.
pub fn full_run_stats(p: &Problem, h: Heuristic) -> Result<RunStats> {
    let cfg = RunConfig::standard()
        .with_early_stop(false)
        .with_branch_limit(usize::MAX);
    let ordering = order_vertices(p, h);
    let (_, stats) = run_truncated_product(p, &ordering, &cfg, &mut |_: &DegreeLayout, _: &TermList| {
        Ok(Flow::Continue)
    })?;
    Ok(stats)
}

/// Runs every heuristic, plus `INPUT` as the baseline when `with_baseline`.
pub fn bench_orderings(p: &Problem, heuristics: &[Heuristic], with_baseline: bool) -> BenchTable {
    let mut cache: Vec<(Heuristic, Result<RunStats>)> = Vec::new();
    let mut run = |h: Heuristic| -> Result<RunStats> {
        if let Some((_, r)) = cache.iter().find(|(k, _)| *k == h) {
            return r.clone();
        }
        let r = full_run_stats(p, h);
        cache.push((h, r.clone()));
        r
    };
    let baseline = if with_baseline {
        run(Heuristic::Input).ok()
    } else {
        None
    };
    let rows = heuristics
        .iter()
        .map(|&h| {
            let r = run(h);
            let relative_percent = match (&r, &baseline) {
                (Ok(s), Some(b)) if b.monomials > 0 => Some(100.0 * s.monomials as f64 / b.monomials as f64),
                _ => None,
            };
            BenchRow {
                heuristic: h,
                stats: r.as_ref().ok().copied(),
                relative_percent,
                error: r.err().map(|e| e.to_string()),
            }
        })
        .collect();
    BenchTable { baseline, rows }
}
