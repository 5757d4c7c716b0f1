use super::basis::ConstraintBasis;
use super::pattern::CharVector;
use super::verdict::UnknownReason;
use crate::graph::{Edge, Problem};

/// All 0/1 vectors satisfying every retained row exactly, in increasing mask
/// order. The zero vector is always included.
///
/// The scan walks all `2^n` vectors in Gray-code order so each step updates
/// the row sums by a single column.
pub fn enumerate_feasible_vectors(basis: &ConstraintBasis, cap: usize) -> Result<Vec<CharVector>, UnknownReason> {
    let n = basis.vertex_count();
    if n > cap || n >= CharVector::MAX_LEN {
        return Err(UnknownReason::FeasibleSearchTooLarge { n, cap });
    }
    let rows = basis.rows();
    // column-major copy: columns[z][r]
    let columns: Vec<Vec<i128>> = (0..n)
        .map(|z| rows.iter().map(|r| i128::from(r.coefficients[z])).collect())
        .collect();
    let mut sums = vec![0i128; rows.len()];
    let mut out = vec![CharVector::new(0, n)];
    let mut gray = 0u64;
    for step in 1..1u64 << n {
        let z = step.trailing_zeros() as usize;
        gray ^= 1 << z;
        let on = gray >> z & 1 == 1;
        for (s, &c) in sums.iter_mut().zip(&columns[z]) {
            if on {
                *s += c;
            } else {
                *s -= c;
            }
        }
        if sums.iter().all(|&s| s == 0) {
            out.push(CharVector::new(gray, n));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Edges whose endpoints are never both covered by a feasible vector.
pub fn find_deletable_edges(vectors: &[CharVector], p: &Problem) -> Vec<Edge> {
    p.edges()
        .iter()
        .copied()
        .filter(|e| !vectors.iter().any(|v| v.get(e.tail) && v.get(e.head)))
        .collect()
}
