use serde::{Deserialize, Serialize};

use crate::graph::Problem;

/// State of one edge during orientation enumeration.
///
/// An edge `tail -> head` taken as in the reference orientation credits its
/// head with one unit of degree (the `x_head` term of `x_head - x_tail`); a
/// flipped edge credits its tail and contributes a sign of -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeState {
    Unoriented,
    AsReference,
    Flipped,
}

/// Parity of flipped edges relative to the reference orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrientationSign {
    Positive,
    Negative,
}

impl OrientationSign {
    pub fn value(self) -> i64 {
        match self {
            OrientationSign::Positive => 1,
            OrientationSign::Negative => -1,
        }
    }
}

/// Partially oriented edges with the resulting per-vertex outdegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrientation {
    states: Vec<EdgeState>,
    outdegree: Vec<u32>,
}

impl PartialOrientation {
    pub fn empty(p: &Problem) -> Self {
        PartialOrientation {
            states: vec![EdgeState::Unoriented; p.edge_count()],
            outdegree: vec![0; p.vertex_count()],
        }
    }

    /// Sets the state of edge `index` (into `p.edges()`), keeping outdegrees in sync.
    pub fn set(&mut self, p: &Problem, index: usize, state: EdgeState) {
        let e = p.edges()[index];
        match self.states[index] {
            EdgeState::Unoriented => {}
            EdgeState::AsReference => self.outdegree[e.head] -= 1,
            EdgeState::Flipped => self.outdegree[e.tail] -= 1,
        }
        match state {
            EdgeState::Unoriented => {}
            EdgeState::AsReference => self.outdegree[e.head] += 1,
            EdgeState::Flipped => self.outdegree[e.tail] += 1,
        }
        self.states[index] = state;
    }

    pub fn state(&self, index: usize) -> EdgeState {
        self.states[index]
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.states
    }

    pub fn outdegree(&self) -> &[u32] {
        &self.outdegree
    }

    pub fn sign(&self) -> OrientationSign {
        let flips = self
            .states
            .iter()
            .filter(|&&s| s == EdgeState::Flipped)
            .count();
        if flips % 2 == 0 {
            OrientationSign::Positive
        } else {
            OrientationSign::Negative
        }
    }
}

/// Signed and unsigned counts of the `f`-orientations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OrientationCount {
    pub signed: i64,
    pub total: u64,
}

/// The coefficient of `x^f` in the graph polynomial: the sum of the signs of
/// all `f`-orientations, by direct enumeration.
pub fn direct_coefficient(p: &Problem, f: &[u32]) -> i64 {
    count_f_orientations(p, f).signed
}

/// Enumerates `f`-orientations by backtracking over edges.
///
/// Branches die as soon as a vertex exceeds `f(v)` or can no longer reach it.
/// Forced edges are oriented first: those at a vertex already at `f(v)`, or at
/// a vertex that needs every remaining incident edge.
pub fn count_f_orientations(p: &Problem, f: &[u32]) -> OrientationCount {
    assert_eq!(f.len(), p.vertex_count());
    let total: u64 = f.iter().map(|&d| u64::from(d)).sum();
    if total != p.edge_count() as u64 {
        return OrientationCount::default();
    }
    let mut search = Search {
        p,
        f,
        orientation: PartialOrientation::empty(p),
        remaining: p.degrees().iter().map(|&d| d as u32).collect(),
        count: OrientationCount::default(),
    };
    if search.viable() {
        search.run(p.edge_count());
    }
    search.count
}

struct Search<'a> {
    p: &'a Problem,
    f: &'a [u32],
    orientation: PartialOrientation,
    /// Unoriented incident edges per vertex.
    remaining: Vec<u32>,
    count: OrientationCount,
}

impl Search<'_> {
    fn viable(&self) -> bool {
        let out = self.orientation.outdegree();
        (0..self.f.len()).all(|v| out[v] <= self.f[v] && out[v] + self.remaining[v] >= self.f[v])
    }

    fn run(&mut self, left: usize) {
        if left == 0 {
            self.count.signed += self.orientation.sign().value();
            self.count.total += 1;
            return;
        }
        let (index, forced) = self.pick_edge();
        let e = self.p.edges()[index];
        self.remaining[e.tail] -= 1;
        self.remaining[e.head] -= 1;
        let choices = match forced {
            Some(state) => vec![state],
            None => vec![EdgeState::AsReference, EdgeState::Flipped],
        };
        for state in choices {
            self.orientation.set(self.p, index, state);
            if self.viable() {
                self.run(left - 1);
            }
        }
        self.orientation.set(self.p, index, EdgeState::Unoriented);
        self.remaining[e.tail] += 1;
        self.remaining[e.head] += 1;
    }

    /// Picks the next edge; returns its forced state when one exists.
    fn pick_edge(&self) -> (usize, Option<EdgeState>) {
        let out = self.orientation.outdegree();
        let mut best: Option<(u32, usize)> = None;
        for (i, e) in self.p.edges().iter().enumerate() {
            if self.orientation.state(i) != EdgeState::Unoriented {
                continue;
            }
            for (v, toward, away) in [
                (e.head, EdgeState::AsReference, EdgeState::Flipped),
                (e.tail, EdgeState::Flipped, EdgeState::AsReference),
            ] {
                let need = self.f[v] - out[v];
                if need == 0 {
                    return (i, Some(away));
                }
                if need == self.remaining[v] {
                    return (i, Some(toward));
                }
                if best.is_none_or(|(b, _)| need < b) {
                    best = Some((need, i));
                }
            }
        }
        (best.expect("an unoriented edge remains").1, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Problem {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Problem::new(n, &edges, vec![2; n]).unwrap()
    }

    #[test]
    fn single_edge() {
        let p = Problem::new(2, &[(0, 1)], vec![2, 1]).unwrap();
        assert_eq!(direct_coefficient(&p, &[1, 0]), -1);
        assert_eq!(direct_coefficient(&p, &[0, 1]), 1);
        assert_eq!(direct_coefficient(&p, &[1, 1]), 0);
    }

    #[test]
    fn four_cycle_has_two_orientations() {
        let c = count_f_orientations(&cycle(4), &[1; 4]);
        assert_eq!(c.total, 2);
        assert_eq!(c.signed.abs(), 2);
    }

    #[test]
    fn triangle_cancels() {
        let c = count_f_orientations(&cycle(3), &[1; 3]);
        assert_eq!(c, OrientationCount { signed: 0, total: 2 });
    }

    #[test]
    fn partial_orientation_bookkeeping() {
        let p = cycle(3);
        let mut o = PartialOrientation::empty(&p);
        o.set(&p, 0, EdgeState::Flipped);
        o.set(&p, 1, EdgeState::AsReference);
        assert_eq!(o.outdegree(), &[1, 0, 1]);
        assert_eq!(o.sign(), OrientationSign::Negative);
        o.set(&p, 0, EdgeState::AsReference);
        assert_eq!(o.outdegree(), &[0, 1, 1]);
        assert_eq!(o.sign(), OrientationSign::Positive);
    }
}
