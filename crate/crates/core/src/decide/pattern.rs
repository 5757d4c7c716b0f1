use std::fmt;

use serde::{Deserialize, Serialize};

/// Characteristic vector of a color: bit `v` is set when `v`'s list contains it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u8>", try_from = "Vec<u8>")]
pub struct CharVector {
    mask: u64,
    len: usize,
}

impl CharVector {
    pub const MAX_LEN: usize = 64;

    pub fn new(mask: u64, len: usize) -> Self {
        assert!(len <= Self::MAX_LEN);
        assert!(len == 64 || mask >> len == 0, "mask has bits beyond len");
        CharVector { mask, len }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mask = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .fold(0u64, |m, (i, _)| m | 1 << i);
        CharVector::new(mask, bits.len())
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.mask == 0
    }

    pub fn get(&self, v: usize) -> bool {
        self.mask >> v & 1 == 1
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.len).map(|v| self.get(v) as u8).collect()
    }
}

impl From<CharVector> for Vec<u8> {
    fn from(v: CharVector) -> Self {
        v.bits()
    }
}

impl TryFrom<Vec<u8>> for CharVector {
    type Error = String;

    fn try_from(bits: Vec<u8>) -> Result<Self, Self::Error> {
        if bits.len() > CharVector::MAX_LEN {
            return Err(format!("vector longer than {}", CharVector::MAX_LEN));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err("vector entries must be 0 or 1".into());
        }
        Ok(CharVector::from_bits(&bits))
    }
}

impl fmt::Display for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bits().iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternPart {
    pub vector: CharVector,
    pub multiplicity: u32,
}

/// A list assignment up to renaming of colors: a multiset of characteristic
/// vectors whose componentwise sum is the list-size vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AssignmentPattern {
    pub parts: Vec<PatternPart>,
}

impl AssignmentPattern {
    pub fn new(mut parts: Vec<PatternPart>) -> Self {
        parts.retain(|p| p.multiplicity > 0);
        parts.sort_by_key(|p| p.vector);
        AssignmentPattern { parts }
    }

    pub fn from_vectors(vectors: impl IntoIterator<Item = CharVector>) -> Self {
        let mut parts: Vec<PatternPart> = Vec::new();
        for v in vectors {
            match parts.iter_mut().find(|p| p.vector == v) {
                Some(p) => p.multiplicity += 1,
                None => parts.push(PatternPart {
                    vector: v,
                    multiplicity: 1,
                }),
            }
        }
        AssignmentPattern::new(parts)
    }

    /// Total number of colors.
    pub fn color_count(&self) -> usize {
        self.parts.iter().map(|p| p.multiplicity as usize).sum()
    }

    /// Componentwise sum: the list size of every vertex.
    pub fn sums(&self, n: usize) -> Vec<u32> {
        let mut sums = vec![0; n];
        for p in &self.parts {
            for (v, s) in sums.iter_mut().enumerate() {
                if p.vector.get(v) {
                    *s += p.multiplicity;
                }
            }
        }
        sums
    }

    /// Concrete lists with colors `0..color_count()`.
    pub fn lists(&self, n: usize) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); n];
        let mut color = 0;
        for p in &self.parts {
            for _ in 0..p.multiplicity {
                for (v, list) in lists.iter_mut().enumerate() {
                    if p.vector.get(v) {
                        list.push(color);
                    }
                }
                color += 1;
            }
        }
        lists
    }
}

impl fmt::Display for AssignmentPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| format!("{}x{}", p.vector, p.multiplicity))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
