//! Graphs with prescribed list sizes.

mod family;
mod order;

pub use family::{generate_family, Family};
pub use order::{order_vertices, Heuristic, VertexOrdering};

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An edge under the reference orientation: `tail < head` in input indices.
///
/// The graph polynomial is the product of `(x_head - x_tail)` over all edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    /// Orients `{u, v}` from the smaller index to the larger one.
    pub fn new(u: usize, v: usize) -> Self {
        Edge {
            tail: u.min(v),
            head: u.max(v),
        }
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.tail {
            self.head
        } else {
            self.tail
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.tail, self.head)
    }
}

/// A simple graph on vertices `0..n` together with a list size per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Problem {
    n: usize,
    edges: Vec<Edge>,
    sizes: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl Problem {
    /// Builds a validated problem. Edges keep their input order.
    pub fn new(n: usize, edges: &[(usize, usize)], sizes: Vec<u32>) -> Result<Self> {
        if sizes.len() != n {
            return Err(Error::SizeCount {
                expected: n,
                got: sizes.len(),
            });
        }
        if let Some(v) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::NonPositiveListSize(v));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = Edge::new(u, v);
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.tail, e.head));
            }
            out.push(e);
        }
        Ok(Problem {
            n,
            edges: out,
            sizes,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in input order, each under the reference orientation.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn size(&self, v: usize) -> u32 {
        self.sizes[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.tail] += 1;
            deg[e.head] += 1;
        }
        deg
    }

    /// Sorted neighbor lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.tail].push(e.head);
            adj[e.head].push(e.tail);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = Edge::new(u, v);
        self.edges.contains(&e)
    }

    /// The same problem with the given edges removed.
    pub fn without_edges(&self, removed: &[Edge]) -> Problem {
        let removed: HashSet<Edge> = removed.iter().copied().collect();
        Problem {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !removed.contains(e))
                .collect(),
            sizes: self.sizes.clone(),
            name: self.name.clone(),
        }
    }

    /// Serializes in the problem file format accepted by [`parse_problem`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("# {name}\n"));
        }
        out.push_str(&format!("{} {}\n", self.n, self.edges.len()));
        let sizes: Vec<String> = self.sizes.iter().map(u32::to_string).collect();
        out.push_str(&sizes.join(" "));
        out.push('\n');
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.tail, e.head));
        }
        out
    }
}

/// Parses the text problem format.
///
/// Lines starting with `#` and blank lines are ignored. The first line holds
/// `n m`, the second the `n` list sizes, followed by `m` lines `u v`.
pub fn parse_problem(text: &str) -> Result<Problem> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Syntax {
        line: 1,
        message: "missing header `n m`".into(),
    })?;
    let header = parse_numbers(line, header)?;
    let [n, m] = header[..] else {
        return Err(Error::Syntax {
            line,
            message: format!("header needs 2 integers, found {}", header.len()),
        });
    };
    let (n, m) = (n as usize, m as usize);

    let sizes = match lines.next() {
        Some((line, l)) => {
            let sizes = parse_numbers(line, l)?;
            if sizes.len() != n {
                return Err(Error::Syntax {
                    line,
                    message: format!("expected {n} list sizes, found {}", sizes.len()),
                });
            }
            if let Some(v) = sizes.iter().position(|&s| s <= 0) {
                return Err(Error::NonPositiveListSize(v));
            }
            sizes
                .into_iter()
                .map(|s| {
                    u32::try_from(s).map_err(|_| Error::Syntax {
                        line,
                        message: format!("list size {s} too large"),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
        None if n == 0 => Vec::new(),
        None => {
            return Err(Error::Syntax {
                line: line + 1,
                message: "missing list sizes".into(),
            })
        }
    };

    let mut edges = Vec::with_capacity(m);
    let mut last_line = line;
    for (line, l) in lines {
        last_line = line;
        let pair = parse_numbers(line, l)?;
        let [u, v] = pair[..] else {
            return Err(Error::Syntax {
                line,
                message: format!("edge line needs 2 integers, found {}", pair.len()),
            });
        };
        if edges.len() == m {
            return Err(Error::Syntax {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        if u < 0 || v < 0 {
            return Err(Error::Syntax {
                line,
                message: "negative vertex index".into(),
            });
        }
        edges.push((u as usize, v as usize));
    }
    if edges.len() != m {
        return Err(Error::Syntax {
            line: last_line,
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Problem::new(n, &edges, sizes)
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<i64>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>().map_err(|_| Error::Syntax {
                line,
                message: format!("not an integer: `{tok}`"),
            })
        })
        .collect()
}
