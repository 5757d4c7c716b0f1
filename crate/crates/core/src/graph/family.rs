use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Problem;
use crate::error::{Error, Result};

/// Parametrized test families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// `a` copies of `K_b` glued path-like over distinct vertices, `s = deg`.
    GluedCliques { a: usize, b: usize },
    /// As [`Family::GluedCliques`] with one edge of the last copy removed.
    GluedCliquesMinusEdge { a: usize, b: usize },
    /// `a x a` grid with one diagonal per cell and four apex vertices.
    GridDiag { a: usize },
    /// Cycle on `3n` vertices plus the `n` triangles `{i, i+n, i+2n}`.
    CycleTriangles { n: usize },
}

impl Family {
    /// Builds a family from its command-line name and integer parameters.
    pub fn from_args(name: &str, params: &[usize]) -> Result<Family> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        match name {
            "glued-cliques" => {
                want(2)?;
                Ok(Family::GluedCliques {
                    a: params[0],
                    b: params[1],
                })
            }
            "glued-cliques-minus-edge" => {
                want(2)?;
                Ok(Family::GluedCliquesMinusEdge {
                    a: params[0],
                    b: params[1],
                })
            }
            "grid-diag" => {
                want(1)?;
                Ok(Family::GridDiag { a: params[0] })
            }
            "cycle-triangles" => {
                want(1)?;
                Ok(Family::CycleTriangles { n: params[0] })
            }
            other => Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::GluedCliques { a, b } => write!(f, "glued-cliques({a},{b})"),
            Family::GluedCliquesMinusEdge { a, b } => write!(f, "glued-cliques-minus-edge({a},{b})"),
            Family::GridDiag { a } => write!(f, "grid-diag({a})"),
            Family::CycleTriangles { n } => write!(f, "cycle-triangles({n})"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name(p1,p2)` as printed by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("cannot parse `{s}`"));
        let (name, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let params = args
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Family::from_args(name, &params)
    }
}

pub fn generate_family(family: Family) -> Result<Problem> {
    let p = match family {
        Family::GluedCliques { a, b } => glued_cliques(a, b, false)?,
        Family::GluedCliquesMinusEdge { a, b } => glued_cliques(a, b, true)?,
        Family::GridDiag { a } => grid_diag(a)?,
        Family::CycleTriangles { n } => cycle_triangles(n)?,
    };
    Ok(p.with_name(family.to_string()))
}

fn glued_cliques(a: usize, b: usize, minus_edge: bool) -> Result<Problem> {
    if a < 2 || b < 3 {
        return Err(Error::InvalidFamily(format!(
            "glued cliques need a >= 2 and b >= 3, got a = {a}, b = {b}"
        )));
    }
    // copy i occupies vertices i(b-1) ..= i(b-1) + b - 1; its last vertex is
    // the first vertex of copy i + 1
    let n = a * (b - 1) + 1;
    let mut edges = Vec::with_capacity(a * b * (b - 1) / 2);
    for copy in 0..a {
        let base = copy * (b - 1);
        for i in 0..b {
            for j in i + 1..b {
                edges.push((base + i, base + j));
            }
        }
    }
    if minus_edge {
        // the two highest vertices of the last copy are not shared
        edges.retain(|&e| e != (n - 2, n - 1));
    }
    let mut deg = vec![0u32; n];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    Problem::new(n, &edges, deg)
}

fn grid_diag(a: usize) -> Result<Problem> {
    if a < 2 {
        return Err(Error::InvalidFamily(format!("grid-diag needs a >= 2, got {a}")));
    }
    // grid vertex (row, col) = row * a + col, rows numbered top to bottom;
    // apexes: top, bottom, left, right
    let id = |r: usize, c: usize| r * a + c;
    let (top, bottom, left, right) = (a * a, a * a + 1, a * a + 2, a * a + 3);
    let n = a * a + 4;
    let mut edges = Vec::new();
    for r in 0..a {
        for c in 0..a {
            if c + 1 < a {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < a {
                edges.push((id(r, c), id(r + 1, c)));
            }
            if r + 1 < a && c + 1 < a {
                // lower-left to upper-right corner of the cell
                edges.push((id(r + 1, c), id(r, c + 1)));
            }
        }
    }
    for i in 0..a {
        edges.push((top, id(0, i)));
        edges.push((bottom, id(a - 1, i)));
        edges.push((left, id(i, 0)));
        edges.push((right, id(i, a - 1)));
    }
    let mut sizes = vec![5u32; n];
    for v in [top, bottom, left, right, id(0, 0), id(0, a - 1), id(a - 1, 0), id(a - 1, a - 1)] {
        sizes[v] = 3;
    }
    Problem::new(n, &edges, sizes)
}

fn cycle_triangles(n: usize) -> Result<Problem> {
    // n = 1 would repeat the cycle edges as chords
    if n < 2 {
        return Err(Error::InvalidFamily(format!(
            "cycle-triangles needs n >= 2, got {n}"
        )));
    }
    let len = 3 * n;
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    edges.extend((0..len).map(|i| (i, (i + n) % len)));
    Problem::new(len, &edges, vec![3; len])
}
