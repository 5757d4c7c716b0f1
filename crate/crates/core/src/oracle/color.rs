use crate::decide::AssignmentPattern;
use crate::graph::Problem;

/// Finds a proper coloring with `colors[v]` taken from `lists[v]`, by
/// backtracking on the vertex with the fewest available colors.
pub fn color_from_lists(p: &Problem, lists: &[Vec<usize>]) -> Option<Vec<usize>> {
    assert_eq!(lists.len(), p.vertex_count());
    let adj = p.adjacency();
    let mut colors: Vec<Option<usize>> = vec![None; p.vertex_count()];
    if extend(&adj, lists, &mut colors) {
        Some(colors.into_iter().map(|c| c.expect("all vertices colored")).collect())
    } else {
        None
    }
}

fn available(adj: &[Vec<usize>], lists: &[Vec<usize>], colors: &[Option<usize>], v: usize) -> Vec<usize> {
    lists[v]
        .iter()
        .copied()
        .filter(|&c| adj[v].iter().all(|&w| colors[w] != Some(c)))
        .collect()
}

fn extend(adj: &[Vec<usize>], lists: &[Vec<usize>], colors: &mut [Option<usize>]) -> bool {
    let mut pick: Option<(usize, Vec<usize>)> = None;
    for v in 0..colors.len() {
        if colors[v].is_some() {
            continue;
        }
        let avail = available(adj, lists, colors, v);
        if avail.is_empty() {
            return false;
        }
        if pick.as_ref().is_none_or(|(_, best)| avail.len() < best.len()) {
            pick = Some((v, avail));
        }
    }
    let Some((v, avail)) = pick else {
        return true;
    };
    for c in avail {
        colors[v] = Some(c);
        if extend(adj, lists, colors) {
            return true;
        }
    }
    colors[v] = None;
    false
}

/// Colors `p` from the lists described by `pattern`, if possible.
pub fn color_from_pattern(p: &Problem, pattern: &AssignmentPattern) -> Option<Vec<usize>> {
    color_from_lists(p, &pattern.lists(p.vertex_count()))
}

/// Checks that `colors` is a proper coloring from `lists`.
pub fn is_proper_list_coloring(p: &Problem, lists: &[Vec<usize>], colors: &[usize]) -> bool {
    colors.len() == p.vertex_count()
        && (0..colors.len()).all(|v| lists[v].contains(&colors[v]))
        && p.edges().iter().all(|e| colors[e.tail] != colors[e.head])
}
