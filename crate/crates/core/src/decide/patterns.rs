use super::pattern::{AssignmentPattern, CharVector, PatternPart};

/// Outcome of the candidate-assignment search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternSearch {
    Complete(Vec<AssignmentPattern>),
    /// More than `cap` patterns exist.
    TooMany { cap: usize },
}

/// All multisets of the given non-zero vectors summing to `sizes`, up to `cap`.
///
/// Depth-first over vectors in the given order, choosing each multiplicity
/// from largest to smallest. A branch is cut when some vertex with residual
/// demand is covered by none of the remaining vectors.
pub fn enumerate_assignment_patterns(vectors: &[CharVector], sizes: &[u32], cap: usize) -> PatternSearch {
    assert!(cap >= 1);
    let vectors: Vec<CharVector> = vectors.iter().copied().filter(|v| !v.is_zero()).collect();
    let mut suffix_cover = vec![0u64; vectors.len() + 1];
    for i in (0..vectors.len()).rev() {
        suffix_cover[i] = suffix_cover[i + 1] | vectors[i].mask();
    }
    let mut search = Search {
        vectors: &vectors,
        suffix_cover,
        residual: sizes.to_vec(),
        chosen: Vec::new(),
        found: Vec::new(),
        cap,
    };
    if search.go(0) {
        PatternSearch::Complete(search.found)
    } else {
        PatternSearch::TooMany { cap }
    }
}

struct Search<'a> {
    vectors: &'a [CharVector],
    suffix_cover: Vec<u64>,
    residual: Vec<u32>,
    chosen: Vec<PatternPart>,
    found: Vec<AssignmentPattern>,
    cap: usize,
}

impl Search<'_> {
    fn demand(&self) -> u64 {
        self.residual
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r > 0)
            .fold(0, |m, (v, _)| m | 1 << v)
    }

    /// Returns false once the cap is exceeded.
    fn go(&mut self, i: usize) -> bool {
        let demand = self.demand();
        if demand == 0 {
            self.found.push(AssignmentPattern::new(self.chosen.clone()));
            return self.found.len() <= self.cap;
        }
        if demand & !self.suffix_cover[i] != 0 {
            return true;
        }
        let v = self.vectors[i];
        let max = (0..self.residual.len())
            .filter(|&z| v.get(z))
            .map(|z| self.residual[z])
            .min()
            .unwrap_or(0);
        for m in (0..=max).rev() {
            self.apply(v, m, false);
            if m > 0 {
                self.chosen.push(PatternPart {
                    vector: v,
                    multiplicity: m,
                });
            }
            let ok = self.go(i + 1);
            if m > 0 {
                self.chosen.pop();
            }
            self.apply(v, m, true);
            if !ok {
                return false;
            }
        }
        true
    }

    fn apply(&mut self, v: CharVector, m: u32, undo: bool) {
        for (z, r) in self.residual.iter_mut().enumerate() {
            if v.get(z) {
                if undo {
                    *r += m;
                } else {
                    *r -= m;
                }
            }
        }
    }
}
