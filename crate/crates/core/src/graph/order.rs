use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Problem;

/// Greedy vertex-ordering rules for processing the graph polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Heuristic {
    /// Input order.
    #[serde(rename = "INPUT")]
    Input,
    /// Fewest unprocessed vertices with a processed neighbor, then minimum degree.
    #[serde(rename = "VSEP")]
    Vsep,
    /// Minimum degree in the unprocessed graph.
    #[serde(rename = "MD")]
    Md,
    /// Minimum degree, then most processed neighbors.
    #[default]
    #[serde(rename = "MD+PROC")]
    MdProc,
    /// Fewest edges leaving the processed prefix.
    #[serde(rename = "OVER")]
    Over,
    /// Smallest list size, then minimum degree.
    #[serde(rename = "LIST")]
    List,
    /// Smallest list size plus degree.
    #[serde(rename = "LIST+DEG")]
    ListDeg,
    /// Reverse of [`Heuristic::Md`].
    #[serde(rename = "MDR")]
    Mdr,
}

impl Heuristic {
    pub const ALL: [Heuristic; 8] = [
        Heuristic::Input,
        Heuristic::Vsep,
        Heuristic::Md,
        Heuristic::MdProc,
        Heuristic::Over,
        Heuristic::List,
        Heuristic::ListDeg,
        Heuristic::Mdr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Heuristic::Input => "INPUT",
            Heuristic::Vsep => "VSEP",
            Heuristic::Md => "MD",
            Heuristic::MdProc => "MD+PROC",
            Heuristic::Over => "OVER",
            Heuristic::List => "LIST",
            Heuristic::ListDeg => "LIST+DEG",
            Heuristic::Mdr => "MDR",
        }
    }
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Heuristic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace(['_', '-'], "+");
        Heuristic::ALL
            .into_iter()
            .find(|h| h.name().replace('-', "+") == norm)
            .ok_or_else(|| format!("unknown heuristic `{s}`"))
    }
}

/// A processing order `v_1, ..., v_n` of the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexOrdering {
    pub order: Vec<usize>,
    pub heuristic: Heuristic,
}

impl VertexOrdering {
    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            heuristic: Heuristic::Input,
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `position[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.order.len()];
        self.order
            .iter()
            .all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
    }
}

/// Computes a vertex ordering. Remaining ties go to the smallest index.
pub fn order_vertices(p: &Problem, h: Heuristic) -> VertexOrdering {
    let order = match h {
        Heuristic::Input => (0..p.vertex_count()).collect(),
        Heuristic::Mdr => {
            let mut order = greedy(p, Heuristic::Md);
            order.reverse();
            order
        }
        _ => greedy(p, h),
    };
    VertexOrdering { order, heuristic: h }
}

fn greedy(p: &Problem, h: Heuristic) -> Vec<usize> {
    let n = p.vertex_count();
    let adj = p.adjacency();
    let mut processed = vec![false; n];
    // degree into the unprocessed part, and count of processed neighbors
    let mut remaining: Vec<i64> = adj.iter().map(|a| a.len() as i64).collect();
    let mut done_nbrs = vec![0i64; n];
    let mut order = Vec::with_capacity(n);

    for _ in 0..n {
        let frontier = if h == Heuristic::Vsep {
            Some(frontier_flags(&adj, &processed))
        } else {
            None
        };
        let key = |v: usize| -> (i64, i64) {
            let s = i64::from(p.size(v));
            match h {
                Heuristic::Md => (remaining[v], 0),
                Heuristic::MdProc => (remaining[v], -done_nbrs[v]),
                Heuristic::Over => (remaining[v] - done_nbrs[v], 0),
                Heuristic::List => (s, remaining[v]),
                Heuristic::ListDeg => (s + remaining[v], 0),
                Heuristic::Vsep => {
                    let frontier = frontier.as_ref().unwrap();
                    (frontier_after(&adj, &processed, frontier, v), remaining[v])
                }
                Heuristic::Input | Heuristic::Mdr => unreachable!(),
            }
        };
        let best = (0..n)
            .filter(|&v| !processed[v])
            .min_by_key(|&v| (key(v), v))
            .expect("an unprocessed vertex remains");
        processed[best] = true;
        order.push(best);
        for &w in &adj[best] {
            remaining[w] -= 1;
            done_nbrs[w] += 1;
        }
    }
    order
}

/// Unprocessed vertices that have at least one processed neighbor.
fn frontier_flags(adj: &[Vec<usize>], processed: &[bool]) -> Vec<bool> {
    (0..adj.len())
        .map(|v| !processed[v] && adj[v].iter().any(|&w| processed[w]))
        .collect()
}

/// Frontier size after additionally processing `v`.
fn frontier_after(adj: &[Vec<usize>], processed: &[bool], frontier: &[bool], v: usize) -> i64 {
    let mut count = frontier.iter().filter(|&&f| f).count() as i64;
    if frontier[v] {
        count -= 1;
    }
    for &w in &adj[v] {
        if !processed[w] && !frontier[w] {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Problem {
        Problem::new(3, &[(0, 1), (1, 2)], vec![2, 2, 2]).unwrap()
    }

    fn star() -> Problem {
        Problem::new(4, &[(0, 1), (0, 2), (0, 3)], vec![2, 2, 2, 2]).unwrap()
    }

    #[test]
    fn path_orders() {
        assert_eq!(order_vertices(&path3(), Heuristic::Md).order, vec![0, 1, 2]);
        assert_eq!(order_vertices(&path3(), Heuristic::Mdr).order, vec![2, 1, 0]);
        assert_eq!(order_vertices(&path3(), Heuristic::Input).order, vec![0, 1, 2]);
    }

    #[test]
    fn star_vsep_delays_center() {
        // the center would open a frontier of three; once two leaves are done
        // center and last leaf tie and the index breaks it
        assert_eq!(order_vertices(&star(), Heuristic::Vsep).order, vec![1, 2, 0, 3]);
    }

    #[test]
    fn md_proc_prefers_processed_neighbors() {
        // path 0-1-2-3 plus isolated 4: after 0, vertex 1 (deg 1, one processed
        // neighbor) beats 3 (deg 1, none); isolated 4 has degree 0 and goes first.
        let p = Problem::new(5, &[(0, 1), (1, 2), (2, 3)], vec![2; 5]).unwrap();
        assert_eq!(order_vertices(&p, Heuristic::MdProc).order, vec![4, 0, 1, 2, 3]);
    }

    #[test]
    fn list_uses_sizes() {
        let p = Problem::new(3, &[(0, 1), (1, 2)], vec![3, 1, 2]).unwrap();
        assert_eq!(order_vertices(&p, Heuristic::List).order, vec![1, 2, 0]);
        assert_eq!(order_vertices(&p, Heuristic::ListDeg).order, vec![1, 2, 0]);
    }

    #[test]
    fn heuristic_names_parse() {
        for h in Heuristic::ALL {
            assert_eq!(h.name().parse::<Heuristic>().unwrap(), h);
        }
        assert_eq!("md-proc".parse::<Heuristic>().unwrap(), Heuristic::MdProc);
        assert!("bogus".parse::<Heuristic>().is_err());
    }
}
