use super::coefficient::{EdgeState, PartialOrientation};
use crate::graph::Problem;
use crate::matching::max_edge_assignment;

/// Whether the unoriented edges of `partial` can be oriented so that every
/// vertex ends with outdegree exactly `f(v)`.
///
/// Reduces to bipartite matching: each unoriented edge must be matched to one
/// of the `f(v) - outdeg(v)` slots of one of its endpoints, and the slots
/// must be used up exactly.
pub fn extendable_to_f_orientation(p: &Problem, partial: &PartialOrientation, f: &[u32]) -> bool {
    assert_eq!(f.len(), p.vertex_count());
    let out = partial.outdegree();
    if (0..f.len()).any(|v| out[v] > f[v]) {
        return false;
    }
    let open: Vec<(usize, usize)> = p
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| partial.state(i) == EdgeState::Unoriented)
        .map(|(_, e)| (e.tail, e.head))
        .collect();
    let capacity: Vec<usize> = (0..f.len()).map(|v| (f[v] - out[v]) as usize).collect();
    if capacity.iter().sum::<usize>() != open.len() {
        return false;
    }
    max_edge_assignment(&open, &capacity) == open.len()
}
