use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::color::color_from_lists;
use crate::decide::{AssignmentPattern, CharVector, Certificate, Verdict};
use crate::error::{Error, Result};
use crate::graph::Problem;

/// Guards for the exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteLimits {
    pub max_vertices: usize,
    pub max_total_size: u32,
}

impl Default for BruteLimits {
    fn default() -> Self {
        BruteLimits {
            max_vertices: 8,
            max_total_size: 24,
        }
    }
}

impl BruteLimits {
    fn check(&self, p: &Problem) -> Result<()> {
        let total: u32 = p.sizes().iter().sum();
        if p.vertex_count() > self.max_vertices || total > self.max_total_size {
            return Err(Error::LimitExceeded(format!(
                "brute force needs n <= {} and sum of list sizes <= {} (got n = {}, sum = {total})",
                self.max_vertices,
                self.max_total_size,
                p.vertex_count()
            )));
        }
        Ok(())
    }
}

/// Visits every list assignment with `|L_v| = s(v)` up to renaming colors,
/// given as the characteristic vectors (bitmasks) of its colors.
///
/// Each multiset is produced once: vectors are grouped by their lowest
/// vertex, groups come in increasing vertex order, and masks within a group
/// are non-decreasing. A group for vertex `v` must use up all of `v`'s size.
pub fn for_each_assignment<B>(
    sizes: &[u32],
    mut visit: impl FnMut(&[u64]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    assert!(sizes.len() < 64);
    let mut residual = sizes.to_vec();
    let mut chosen = Vec::new();
    walk(&mut residual, &mut chosen, &mut visit)
}

fn walk<B>(
    residual: &mut [u32],
    chosen: &mut Vec<u64>,
    visit: &mut impl FnMut(&[u64]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let Some(v) = residual.iter().position(|&r| r > 0) else {
        return visit(chosen);
    };
    let floor = match chosen.last() {
        Some(&m) if m.trailing_zeros() as usize == v => m,
        _ => 0,
    };
    let allowed: u64 = (v + 1..residual.len())
        .filter(|&w| residual[w] > 0)
        .fold(0, |m, w| m | 1 << w);
    let mut sub = allowed;
    loop {
        let mask = 1u64 << v | sub;
        if mask >= floor {
            for w in 0..residual.len() {
                if mask >> w & 1 == 1 {
                    residual[w] -= 1;
                }
            }
            chosen.push(mask);
            let flow = walk(residual, chosen, visit);
            chosen.pop();
            for w in 0..residual.len() {
                if mask >> w & 1 == 1 {
                    residual[w] += 1;
                }
            }
            flow?;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & allowed;
    }
    ControlFlow::Continue(())
}

fn lists_from_masks(n: usize, masks: &[u64]) -> Vec<Vec<usize>> {
    (0..n)
        .map(|v| (0..masks.len()).filter(|&c| masks[c] >> v & 1 == 1).collect())
        .collect()
}

fn pattern_from_masks(n: usize, masks: &[u64]) -> AssignmentPattern {
    AssignmentPattern::from_vectors(masks.iter().map(|&m| CharVector::new(m, n)))
}

/// Decides `s`-choosability by trying every list assignment up to renaming.
pub fn brute_force_choosable(p: &Problem, limits: &BruteLimits) -> Result<Verdict> {
    limits.check(p)?;
    let n = p.vertex_count();
    let mut checked = 0u64;
    let flow = for_each_assignment(p.sizes(), |masks| {
        checked += 1;
        match color_from_lists(p, &lists_from_masks(n, masks)) {
            Some(_) => ControlFlow::Continue(()),
            None => ControlFlow::Break(pattern_from_masks(n, masks)),
        }
    });
    Ok(match flow {
        ControlFlow::Break(witness) => Verdict::NotChoosable { witness },
        ControlFlow::Continue(()) => Verdict::Choosable {
            certificate: Certificate::Exhaustive {
                assignments: checked,
            },
        },
    })
}

/// Every list assignment (up to renaming) from which `p` is not colorable.
pub fn bad_assignments(p: &Problem, limits: &BruteLimits) -> Result<Vec<AssignmentPattern>> {
    limits.check(p)?;
    let n = p.vertex_count();
    let mut bad = Vec::new();
    let _ = for_each_assignment::<()>(p.sizes(), |masks| {
        if color_from_lists(p, &lists_from_masks(n, masks)).is_none() {
            bad.push(pattern_from_masks(n, masks));
        }
        ControlFlow::Continue(())
    });
    Ok(bad)
}
