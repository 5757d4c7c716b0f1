use serde::{Deserialize, Serialize};

use super::layout::DegreeLayout;
use super::multiply::{multiply_edge, Mode};
use super::terms::{Monomial, TermList, NO_MARKER};
use crate::error::Result;
use crate::graph::{Edge, Problem, VertexOrdering};
use crate::matching::max_edge_assignment;

pub const DEFAULT_BRANCH_LIMIT: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub mode: Mode,
    /// Live term count above which the list is split into branches.
    pub branch_limit: usize,
    /// Stop at the first monomial with every degree below its list size.
    pub early_stop: bool,
    /// Drop terms that can no longer reach a surviving final monomial.
    pub prune_matching: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: Mode::Standard,
            branch_limit: DEFAULT_BRANCH_LIMIT,
            early_stop: true,
            prune_matching: false,
        }
    }
}

impl RunConfig {
    pub fn standard() -> Self {
        RunConfig::default()
    }

    pub fn extended() -> Self {
        RunConfig {
            mode: Mode::Extended,
            ..RunConfig::default()
        }
    }

    pub fn with_branch_limit(mut self, n: usize) -> Self {
        self.branch_limit = n;
        self
    }

    pub fn with_early_stop(mut self, on: bool) -> Self {
        self.early_stop = on;
        self
    }

    pub fn with_pruning(mut self, on: bool) -> Self {
        self.prune_matching = on;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RunStats {
    /// Non-zero terms produced by all edge multiplications.
    pub monomials: u64,
    /// Largest term list seen.
    pub peak_terms: u64,
    /// Number of branches, counting the root.
    pub branches: u64,
}

impl RunStats {
    pub fn absorb(&mut self, other: &RunStats) {
        self.monomials += other.monomials;
        self.peak_terms = self.peak_terms.max(other.peak_terms);
        self.branches += other.branches;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flow {
    Continue,
    Stop,
}

/// Receives the final term list of every completed branch.
///
/// Within one call terms are sorted, so terms sharing a base degree are
/// adjacent, and no base degree is split across calls. Calls arrive in
/// decreasing order of their keys: reading each list from the back gives
/// one decreasing sequence whatever the branch limit.
pub trait TermSink {
    fn accept(&mut self, layout: &DegreeLayout, terms: &TermList) -> Result<Flow>;
}

impl<F> TermSink for F
where
    F: FnMut(&DegreeLayout, &TermList) -> Result<Flow>,
{
    fn accept(&mut self, layout: &DegreeLayout, terms: &TermList) -> Result<Flow> {
        self(layout, terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunOutcome {
    /// Every branch ran to completion.
    Completed,
    /// Early stop on an unmarked final monomial (all degrees below list
    /// sizes), the largest in processing order.
    Witness(Monomial),
    /// The sink asked to stop.
    Stopped,
}

/// Computes the truncated graph polynomial vertex by vertex.
///
/// At position `i` of the ordering, all edges from `v_i` to later vertices are
/// multiplied in, by increasing position of the other endpoint. Afterwards the
/// degrees of `v_1..v_i` are final, and if more than `branch_limit` terms are
/// live the list is split by those degrees and each part is continued
/// separately, lexicographically largest part first.
pub fn run_truncated_product(
    p: &Problem,
    ordering: &VertexOrdering,
    cfg: &RunConfig,
    sink: &mut dyn TermSink,
) -> Result<(RunOutcome, RunStats)> {
    assert!(cfg.branch_limit >= 1, "branch limit must be positive");
    let layout = DegreeLayout::new(p, ordering);
    let n = p.vertex_count();
    let mut later: Vec<Vec<(usize, Edge)>> = vec![Vec::new(); n];
    for &e in p.edges() {
        let (a, b) = (layout.position(e.tail), layout.position(e.head));
        later[a.min(b)].push((a.max(b), e));
    }
    for list in &mut later {
        list.sort_unstable_by_key(|&(pos, _)| pos);
    }
    let mut runner = Runner {
        layout,
        later: later
            .into_iter()
            .map(|l| l.into_iter().map(|(_, e)| e).collect())
            .collect(),
        cfg: *cfg,
        stats: RunStats {
            branches: 1,
            ..RunStats::default()
        },
    };
    let unit = TermList::unit(&runner.layout);
    runner.stats.peak_terms = 1;
    let outcome = runner.run_from(unit, 0, sink)?;
    Ok((outcome.unwrap_or(RunOutcome::Completed), runner.stats))
}

/// Runs to completion and returns every final monomial in sorted order.
pub fn final_terms(p: &Problem, ordering: &VertexOrdering, cfg: &RunConfig) -> Result<(Vec<Monomial>, RunStats)> {
    let mut out = Vec::new();
    let cfg = RunConfig {
        early_stop: false,
        ..*cfg
    };
    let (_, stats) = run_truncated_product(
        p,
        ordering,
        &cfg,
        &mut |layout: &DegreeLayout, terms: &TermList| {
            out.extend(terms.decode_all(layout));
            Ok(Flow::Continue)
        },
    )?;
    out.sort();
    Ok((out, stats))
}

struct Runner {
    layout: DegreeLayout,
    /// Edges to later vertices, per processing position.
    later: Vec<Vec<Edge>>,
    cfg: RunConfig,
    stats: RunStats,
}

impl Runner {
    fn run_from(&mut self, mut terms: TermList, start: usize, sink: &mut dyn TermSink) -> Result<Option<RunOutcome>> {
        let n = self.layout.vertex_count();
        for i in start..n {
            for k in 0..self.later[i].len() {
                let e = self.later[i][k];
                terms = multiply_edge(&terms, &self.layout, e, self.cfg.mode)?;
                self.stats.monomials += terms.len() as u64;
                self.stats.peak_terms = self.stats.peak_terms.max(terms.len() as u64);
                if terms.is_empty() {
                    return Ok(None);
                }
            }
            if self.cfg.prune_matching && i + 1 < n {
                self.prune(&mut terms, i + 1);
                if terms.is_empty() {
                    return Ok(None);
                }
            }
            if i + 1 < n && terms.len() > self.cfg.branch_limit {
                let groups = terms.prefix_groups(&self.layout, i + 1);
                if groups.len() > 1 {
                    // take parts from the back so the parent shrinks as we go
                    for g in groups.into_iter().rev() {
                        let part = terms.slice(g.clone());
                        terms.truncate(g.start);
                        self.stats.branches += 1;
                        if let Some(stop) = self.run_from(part, i + 1, sink)? {
                            return Ok(Some(stop));
                        }
                    }
                    return Ok(None);
                }
            }
        }
        self.finish(terms, sink)
    }

    fn finish(&mut self, terms: TermList, sink: &mut dyn TermSink) -> Result<Option<RunOutcome>> {
        if terms.is_empty() {
            return Ok(None);
        }
        if self.cfg.early_stop {
            // the largest unmarked term: branches arrive in decreasing prefix
            // order, so this is the same term for every branch limit
            if let Some(i) = (0..terms.len()).rev().find(|&i| terms.raw_marker(i) == NO_MARKER) {
                return Ok(Some(RunOutcome::Witness(terms.decode(&self.layout, i))));
            }
        }
        match sink.accept(&self.layout, &terms)? {
            Flow::Continue => Ok(None),
            Flow::Stop => Ok(Some(RunOutcome::Stopped)),
        }
    }

    /// Removes terms whose remaining edges (both endpoints at positions
    /// `>= from`) cannot be distributed without exceeding the truncation.
    fn prune(&self, terms: &mut TermList, from: usize) {
        let n = self.layout.vertex_count();
        let rest: Vec<(usize, usize)> = (from..n)
            .flat_map(|i| {
                self.later[i]
                    .iter()
                    .map(move |e| (i, *e))
            })
            .map(|(i, e)| {
                let other = self.layout.position(e.other(self.layout.vertex(i)));
                (i - from, other - from)
            })
            .collect();
        if rest.is_empty() {
            return;
        }
        let extended = self.cfg.mode == Mode::Extended;
        let layout = &self.layout;
        let m = rest.len();
        terms.retain(|key, marker| {
            let mut cap: Vec<usize> = (from..n)
                .map(|pos| {
                    let mut d = layout.field(key, pos);
                    if marker != NO_MARKER && marker as usize - 1 == pos {
                        d += 1;
                    }
                    (layout.size_at(pos) as usize).saturating_sub(d as usize + 1)
                })
                .collect();
            let best = max_edge_assignment(&rest, &cap);
            if best == m {
                return true;
            }
            if !extended || marker != NO_MARKER || best + 1 < m {
                return false;
            }
            (0..cap.len()).any(|j| {
                cap[j] += 1;
                let ok = max_edge_assignment(&rest, &cap) == m;
                cap[j] -= 1;
                ok
            })
        });
    }
}
