use std::cmp::Ordering;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::layout::{DegreeLayout, PackedDegree};

/// Raw marker value for "no tight vertex".
pub const NO_MARKER: u32 = 0;

/// One term of a truncated polynomial.
///
/// Without a marker the term stands for `c * x^f`. With marker `w` it stands
/// for `c * x^(f + 1_w)` where `f(w) = s(w) - 1`, so `w` is at its list size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub degree: PackedDegree,
    /// Tight vertex, as an input vertex index.
    pub marker: Option<usize>,
    pub coefficient: i64,
}

/// A term decoded to input vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    /// The base degree function `f`.
    pub base: Vec<u32>,
    /// Tight vertex `w`; the monomial is `x^(f + 1_w)` when present.
    pub marker: Option<usize>,
    pub coefficient: i64,
}

impl Monomial {
    /// The actual exponent vector.
    pub fn exponents(&self) -> Vec<u32> {
        let mut e = self.base.clone();
        if let Some(w) = self.marker {
            e[w] += 1;
        }
        e
    }
}

/// A truncated polynomial as a strictly increasing list of terms.
///
/// Terms are ordered by packed degree, then by marker (none first, then by
/// processing position of the tight vertex). Storage is three flat arrays;
/// the key of term `i` occupies `keys[i * words..(i + 1) * words]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TermList {
    words: usize,
    keys: Vec<u64>,
    markers: Vec<u32>,
    coeffs: Vec<i64>,
}

impl TermList {
    pub fn new(words: usize) -> Self {
        TermList {
            words,
            ..Default::default()
        }
    }

    pub fn with_capacity(words: usize, capacity: usize) -> Self {
        TermList {
            words,
            keys: Vec::with_capacity(capacity * words),
            markers: Vec::with_capacity(capacity),
            coeffs: Vec::with_capacity(capacity),
        }
    }

    /// The constant polynomial 1.
    pub fn unit(layout: &DegreeLayout) -> Self {
        let mut list = TermList::new(layout.words());
        list.keys.resize(layout.words(), 0);
        list.markers.push(NO_MARKER);
        list.coeffs.push(1);
        list
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    #[inline]
    pub fn key(&self, i: usize) -> &[u64] {
        &self.keys[i * self.words..(i + 1) * self.words]
    }

    /// Raw marker: [`NO_MARKER`] or processing position plus one.
    #[inline]
    pub fn raw_marker(&self, i: usize) -> u32 {
        self.markers[i]
    }

    #[inline]
    pub fn coefficient(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    #[inline]
    pub(crate) fn push_raw(&mut self, key: &[u64], marker: u32, coeff: i64) {
        debug_assert_eq!(key.len(), self.words);
        debug_assert_ne!(coeff, 0);
        self.keys.extend_from_slice(key);
        self.markers.push(marker);
        self.coeffs.push(coeff);
    }

    /// Appends a term; fails if it would break strict ordering or is zero.
    pub fn push(&mut self, layout: &DegreeLayout, term: &Term) -> Result<(), String> {
        if term.coefficient == 0 {
            return Err("zero coefficient".into());
        }
        let marker = term
            .marker
            .map_or(NO_MARKER, |v| layout.position(v) as u32 + 1);
        if let Some(last) = self.len().checked_sub(1) {
            let prev = (self.key(last), self.markers[last]);
            if (term.degree.words(), marker) <= prev {
                return Err("terms must be strictly increasing".into());
            }
        }
        self.push_raw(term.degree.words(), marker, term.coefficient);
        Ok(())
    }

    pub fn get(&self, layout: &DegreeLayout, i: usize) -> Term {
        Term {
            degree: PackedDegree(self.key(i).to_vec()),
            marker: marker_vertex(layout, self.markers[i]),
            coefficient: self.coeffs[i],
        }
    }

    pub fn decode(&self, layout: &DegreeLayout, i: usize) -> Monomial {
        Monomial {
            base: layout.unpack(self.key(i)),
            marker: marker_vertex(layout, self.markers[i]),
            coefficient: self.coeffs[i],
        }
    }

    pub fn decode_all(&self, layout: &DegreeLayout) -> Vec<Monomial> {
        (0..self.len()).map(|i| self.decode(layout, i)).collect()
    }

    /// Copies the terms in `range` into a new list.
    pub fn slice(&self, range: Range<usize>) -> TermList {
        TermList {
            words: self.words,
            keys: self.keys[range.start * self.words..range.end * self.words].to_vec(),
            markers: self.markers[range.clone()].to_vec(),
            coeffs: self.coeffs[range].to_vec(),
        }
    }

    /// Drops all terms from index `len` on.
    pub fn truncate(&mut self, len: usize) {
        self.keys.truncate(len * self.words);
        self.markers.truncate(len);
        self.coeffs.truncate(len);
    }

    pub fn compare(&self, i: usize, j: usize) -> Ordering {
        (self.key(i), self.markers[i]).cmp(&(self.key(j), self.markers[j]))
    }

    /// Strictly increasing with non-zero coefficients.
    pub fn is_strictly_sorted(&self) -> bool {
        (1..self.len()).all(|i| self.compare(i - 1, i) == Ordering::Less)
            && self.coeffs.iter().all(|&c| c != 0)
    }

    /// Splits into maximal runs of terms that agree on positions `0..prefix`.
    pub fn prefix_groups(&self, layout: &DegreeLayout, prefix: usize) -> Vec<Range<usize>> {
        let mut groups = Vec::new();
        let mut start = 0;
        for i in 1..=self.len() {
            if i == self.len()
                || layout.prefix_cmp(self.key(start), self.key(i), prefix) != Ordering::Equal
            {
                if start < i {
                    groups.push(start..i);
                }
                start = i;
            }
        }
        groups
    }

    /// Maximal runs of terms with equal packed degree.
    pub fn key_groups(&self) -> Vec<Range<usize>> {
        let mut groups = Vec::new();
        let mut start = 0;
        for i in 1..=self.len() {
            if i == self.len() || self.key(start) != self.key(i) {
                if start < i {
                    groups.push(start..i);
                }
                start = i;
            }
        }
        groups
    }

    /// Keeps only the terms for which `keep` returns true.
    pub fn retain(&mut self, mut keep: impl FnMut(&[u64], u32) -> bool) {
        let w = self.words;
        let mut out = 0;
        for i in 0..self.len() {
            if keep(&self.keys[i * w..(i + 1) * w], self.markers[i]) {
                if out != i {
                    self.keys.copy_within(i * w..(i + 1) * w, out * w);
                    self.markers[out] = self.markers[i];
                    self.coeffs[out] = self.coeffs[i];
                }
                out += 1;
            }
        }
        self.keys.truncate(out * w);
        self.markers.truncate(out);
        self.coeffs.truncate(out);
    }
}

fn marker_vertex(layout: &DegreeLayout, raw: u32) -> Option<usize> {
    (raw != NO_MARKER).then(|| layout.vertex(raw as usize - 1))
}
