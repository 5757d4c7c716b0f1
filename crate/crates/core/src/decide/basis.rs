use serde::{Deserialize, Serialize};

use super::pattern::CharVector;

/// The Mersenne prime `2^31 - 1` used for independence tests.
pub const FIELD_PRIME: u64 = (1 << 31) - 1;

/// One linear constraint `sum_z row[z] * chi(z) = 0` on characteristic vectors.
///
/// `coefficients[z]` is the coefficient of `x^(base + 1_z)`; it can only be
/// non-zero where `base(z) = s(z) - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintRow {
    pub coefficients: Vec<i64>,
    pub base: Vec<u32>,
}

impl ConstraintRow {
    /// Exact integer value of the left-hand side at `chi`.
    pub fn evaluate(&self, chi: &CharVector) -> i128 {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|&(z, _)| chi.get(z))
            .map(|(_, &c)| i128::from(c))
            .sum()
    }

    pub fn satisfied_by(&self, chi: &CharVector) -> bool {
        self.evaluate(chi) == 0
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct EchelonRow {
    pivot: usize,
    values: Vec<u64>,
}

/// Retained integer constraints, linearly independent over `F_p`.
///
/// Rows are kept exactly; the field is used only to decide whether a new row
/// adds anything. The echelon rows are sorted by pivot, each with a unit
/// pivot and zeros before it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintBasis {
    n: usize,
    rows: Vec<ConstraintRow>,
    echelon: Vec<EchelonRow>,
}

impl ConstraintBasis {
    pub fn new(n: usize) -> Self {
        ConstraintBasis {
            n,
            rows: Vec::new(),
            echelon: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[ConstraintRow] {
        &self.rows
    }

    /// Adds `row` if it is independent of the retained rows mod p.
    pub fn insert(&mut self, row: ConstraintRow) -> bool {
        assert_eq!(row.coefficients.len(), self.n);
        let mut v: Vec<u64> = row.coefficients.iter().map(|&c| to_field(c)).collect();
        for e in &self.echelon {
            let factor = v[e.pivot];
            if factor != 0 {
                for (x, &y) in v.iter_mut().zip(&e.values).skip(e.pivot) {
                    *x = sub(*x, mul(factor, y));
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inverse(v[pivot]);
        for x in &mut v {
            *x = mul(*x, inv);
        }
        let at = self.echelon.partition_point(|e| e.pivot < pivot);
        self.echelon.insert(at, EchelonRow { pivot, values: v });
        self.rows.push(row);
        true
    }

    pub fn satisfied_by(&self, chi: &CharVector) -> bool {
        self.rows.iter().all(|r| r.satisfied_by(chi))
    }
}

fn to_field(c: i64) -> u64 {
    c.rem_euclid(FIELD_PRIME as i64) as u64
}

fn mul(a: u64, b: u64) -> u64 {
    a * b % FIELD_PRIME
}

fn sub(a: u64, b: u64) -> u64 {
    (a + FIELD_PRIME - b) % FIELD_PRIME
}

fn inverse(a: u64) -> u64 {
    // a^(p - 2)
    let mut result = 1;
    let mut base = a;
    let mut exp = FIELD_PRIME - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul(result, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    result
}
