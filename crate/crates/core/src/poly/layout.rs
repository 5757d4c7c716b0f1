use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::graph::{Problem, VertexOrdering};

/// A degree vector packed into 64-bit words under a [`DegreeLayout`].
///
/// Comparing two packed vectors as word sequences is the lexicographic order
/// of the degree functions in processing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PackedDegree(pub Vec<u64>);

impl PackedDegree {
    pub fn words(&self) -> &[u64] {
        &self.0
    }
}

/// Bit layout of packed degree vectors.
///
/// Every vertex gets a field of `bits` bits; fields never straddle a word
/// boundary, and the field of the first vertex in processing order is the
/// most significant one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeLayout {
    order: Vec<usize>,
    position: Vec<usize>,
    sizes: Vec<u32>,
    bits: u32,
    per_word: usize,
    words: usize,
    word_of: Vec<usize>,
    shift_of: Vec<u32>,
    mask: u64,
}

impl DegreeLayout {
    pub fn new(p: &Problem, ordering: &VertexOrdering) -> Self {
        assert!(ordering.is_permutation() && ordering.len() == p.vertex_count());
        let order = ordering.order.clone();
        let position = ordering.positions();
        let sizes: Vec<u32> = order.iter().map(|&v| p.size(v)).collect();
        let max_size = sizes.iter().copied().max().unwrap_or(1);
        let bits = (u32::BITS - max_size.leading_zeros()).max(1);
        assert!(bits <= 32, "list sizes too large to pack");
        let per_word = (64 / bits) as usize;
        let n = order.len();
        let words = n.div_ceil(per_word);
        let word_of = (0..n).map(|i| i / per_word).collect();
        let shift_of = (0..n)
            .map(|i| 64 - bits * (i % per_word + 1) as u32)
            .collect();
        DegreeLayout {
            order,
            position,
            sizes,
            bits,
            per_word,
            words,
            word_of,
            shift_of,
            mask: (1u64 << bits) - 1,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn fields_per_word(&self) -> usize {
        self.per_word
    }

    /// Vertex at processing position `pos`.
    pub fn vertex(&self, pos: usize) -> usize {
        self.order[pos]
    }

    /// Processing position of vertex `v`.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// List size of the vertex at processing position `pos`.
    pub fn size_at(&self, pos: usize) -> u32 {
        self.sizes[pos]
    }

    #[inline]
    pub fn field(&self, key: &[u64], pos: usize) -> u32 {
        ((key[self.word_of[pos]] >> self.shift_of[pos]) & self.mask) as u32
    }

    /// Adds one to the field at `pos`. The caller guarantees it does not overflow.
    #[inline]
    pub fn increment(&self, key: &mut [u64], pos: usize) {
        debug_assert!(u64::from(self.field(key, pos)) < self.mask);
        key[self.word_of[pos]] += 1u64 << self.shift_of[pos];
    }

    /// Packs a degree function given in input vertex indices.
    pub fn pack(&self, degrees: &[u32]) -> PackedDegree {
        assert_eq!(degrees.len(), self.vertex_count());
        let mut key = vec![0u64; self.words];
        for (pos, &v) in self.order.iter().enumerate() {
            let d = u64::from(degrees[v]);
            assert!(d <= self.mask, "degree {d} does not fit the layout");
            key[self.word_of[pos]] |= d << self.shift_of[pos];
        }
        PackedDegree(key)
    }

    /// Unpacks into a degree function in input vertex indices.
    pub fn unpack(&self, key: &[u64]) -> Vec<u32> {
        let mut degrees = vec![0; self.vertex_count()];
        for (pos, &v) in self.order.iter().enumerate() {
            degrees[v] = self.field(key, pos);
        }
        degrees
    }

    /// Compares the fields at positions `0..len` only.
    pub fn prefix_cmp(&self, a: &[u64], b: &[u64], len: usize) -> Ordering {
        if len == 0 {
            return Ordering::Equal;
        }
        let full = len / self.per_word;
        match a[..full].cmp(&b[..full]) {
            Ordering::Equal => {}
            other => return other,
        }
        let rest = len % self.per_word;
        if rest == 0 {
            return Ordering::Equal;
        }
        let keep = self.bits * rest as u32;
        let mask = !0u64 << (64 - keep);
        (a[full] & mask).cmp(&(b[full] & mask))
    }

    /// Sum of all fields.
    pub fn total(&self, key: &[u64]) -> u64 {
        (0..self.vertex_count())
            .map(|pos| u64::from(self.field(key, pos)))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{order_vertices, Heuristic};
    use proptest::prelude::*;

    fn problem(sizes: Vec<u32>) -> Problem {
        Problem::new(sizes.len(), &[], sizes).unwrap()
    }

    #[test]
    fn field_widths() {
        let l = DegreeLayout::new(&problem(vec![1, 1]), &VertexOrdering::identity(2));
        assert_eq!(l.bits(), 1);
        let l = DegreeLayout::new(&problem(vec![3; 40]), &VertexOrdering::identity(40));
        assert_eq!(l.bits(), 2);
        assert_eq!(l.words(), 2);
        // 5 needs 3 bits: 21 fields per word, one padding bit
        let l = DegreeLayout::new(&problem(vec![5; 22]), &VertexOrdering::identity(22));
        assert_eq!((l.bits(), l.fields_per_word(), l.words()), (3, 21, 2));
    }

    #[test]
    fn first_vertex_is_most_significant() {
        let p = problem(vec![2, 2, 2]);
        let ord = VertexOrdering {
            order: vec![2, 0, 1],
            heuristic: Heuristic::Input,
        };
        let l = DegreeLayout::new(&p, &ord);
        // vertex 2 first: (0,0,1) beats (1,1,0)
        assert!(l.pack(&[0, 0, 1]) > l.pack(&[1, 1, 0]));
        assert_eq!(l.unpack(&l.pack(&[1, 0, 2]).0), vec![1, 0, 2]);
    }

    fn degrees_strategy() -> impl Strategy<Value = (Vec<u32>, Vec<u32>, Vec<u32>, u64)> {
        (1usize..70).prop_flat_map(|n| {
            (
                prop::collection::vec(1u32..9, n),
                prop::collection::vec(0u32..10_000, n),
                prop::collection::vec(0u32..10_000, n),
                any::<u64>(),
            )
        })
    }

    proptest! {
        #[test]
        fn pack_preserves_lex_order((sizes, r1, r2, seed) in degrees_strategy()) {
            let n = sizes.len();
            let p = problem(sizes.clone());
            let heur = Heuristic::ALL[(seed % 8) as usize];
            let ord = order_vertices(&p, heur);
            let l = DegreeLayout::new(&p, &ord);
            let f1: Vec<u32> = (0..n).map(|v| r1[v] % (sizes[v] + 1)).collect();
            let f2: Vec<u32> = (0..n).map(|v| r2[v] % (sizes[v] + 1)).collect();
            let k1 = l.pack(&f1);
            let k2 = l.pack(&f2);
            prop_assert_eq!(l.unpack(&k1.0), f1.clone());
            let lex1: Vec<u32> = ord.order.iter().map(|&v| f1[v]).collect();
            let lex2: Vec<u32> = ord.order.iter().map(|&v| f2[v]).collect();
            prop_assert_eq!(k1.cmp(&k2), lex1.cmp(&lex2));
            for len in 0..=n {
                prop_assert_eq!(l.prefix_cmp(&k1.0, &k2.0, len), lex1[..len].cmp(&lex2[..len]));
            }
            // adding 1_v on both sides keeps the order
            let v = (seed as usize / 8) % n;
            if f1[v] < sizes[v] && f2[v] < sizes[v] {
                let mut a = k1.0.clone();
                let mut b = k2.0.clone();
                let pos = l.position(v);
                l.increment(&mut a, pos);
                l.increment(&mut b, pos);
                prop_assert_eq!(a.cmp(&b), k1.cmp(&k2));
                prop_assert_eq!(l.field(&a, pos), f1[v] + 1);
            }
        }
    }
}
