//! Augmenting-path maximum matching in bipartite graphs.
//!
//! Used to decide whether the unprocessed edges can still be distributed
//! among their endpoints within per-vertex capacities: every edge becomes a
//! left node, every unit of capacity of a vertex becomes a right node.

/// Maximum matching size for a bipartite graph given by left adjacency lists.
pub fn maximum_matching(left_adj: &[Vec<usize>], right_count: usize) -> usize {
    let mut match_right: Vec<Option<usize>> = vec![None; right_count];
    let mut size = 0;
    let mut visited = vec![false; right_count];
    for l in 0..left_adj.len() {
        visited.iter_mut().for_each(|x| *x = false);
        if augment(l, left_adj, &mut match_right, &mut visited) {
            size += 1;
        }
    }
    size
}

fn augment(
    l: usize,
    left_adj: &[Vec<usize>],
    match_right: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &r in &left_adj[l] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        let free = match match_right[r] {
            None => true,
            Some(other) => augment(other, left_adj, match_right, visited),
        };
        if free {
            match_right[r] = Some(l);
            return true;
        }
    }
    false
}

/// Size of a maximum assignment of `edges` to one of their endpoints such that
/// vertex `v` receives at most `capacity[v]` edges.
///
/// Each vertex is blown up into `capacity[v]` slots and each edge is joined to
/// all slots of both endpoints.
pub fn max_edge_assignment(edges: &[(usize, usize)], capacity: &[usize]) -> usize {
    let mut first_slot = Vec::with_capacity(capacity.len() + 1);
    let mut total = 0;
    for &c in capacity {
        first_slot.push(total);
        total += c;
    }
    first_slot.push(total);
    let slots = |v: usize| first_slot[v]..first_slot[v + 1];
    let left_adj: Vec<Vec<usize>> = edges
        .iter()
        .map(|&(u, v)| slots(u).chain(slots(v)).collect())
        .collect();
    maximum_matching(&left_adj, total)
}
