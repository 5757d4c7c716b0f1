use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::layout::DegreeLayout;
use super::terms::{TermList, NO_MARKER};
use crate::error::{Error, Result};
use crate::graph::Edge;

/// Which monomials survive truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Keep monomials with every degree below the list size.
    Standard,
    /// Additionally keep monomials where exactly one degree reaches its list size.
    Extended,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Emit {
    /// `(f + 1_x, w, ±c)` for terms with `f(x) <= s(x) - 2`.
    Bump,
    /// `(f, x, ±c)` for unmarked terms with `f(x) = s(x) - 1`.
    Tight,
}

struct Stream<'a> {
    input: &'a TermList,
    layout: &'a DegreeLayout,
    pos: usize,
    emit: Emit,
    negate: bool,
    cursor: usize,
    key: Vec<u64>,
    marker: u32,
    coeff: i64,
    live: bool,
}

impl<'a> Stream<'a> {
    fn new(input: &'a TermList, layout: &'a DegreeLayout, pos: usize, emit: Emit, negate: bool) -> Result<Self> {
        let mut s = Stream {
            input,
            layout,
            pos,
            emit,
            negate,
            cursor: 0,
            key: vec![0; input.words()],
            marker: NO_MARKER,
            coeff: 0,
            live: true,
        };
        s.load()?;
        Ok(s)
    }

    #[inline]
    fn qualifies(&self, i: usize) -> bool {
        let d = self.layout.field(self.input.key(i), self.pos);
        let s = self.layout.size_at(self.pos);
        match self.emit {
            Emit::Bump => d + 2 <= s,
            Emit::Tight => self.input.raw_marker(i) == NO_MARKER && d + 1 == s,
        }
    }

    /// Moves to the first qualifying input term at or after the cursor.
    fn load(&mut self) -> Result<()> {
        while self.cursor < self.input.len() && !self.qualifies(self.cursor) {
            self.cursor += 1;
        }
        if self.cursor == self.input.len() {
            self.live = false;
            return Ok(());
        }
        let i = self.cursor;
        self.key.copy_from_slice(self.input.key(i));
        let c = self.input.coefficient(i);
        self.coeff = if self.negate {
            c.checked_neg().ok_or(Error::Overflow)?
        } else {
            c
        };
        match self.emit {
            Emit::Bump => {
                self.layout.increment(&mut self.key, self.pos);
                self.marker = self.input.raw_marker(i);
            }
            Emit::Tight => self.marker = self.pos as u32 + 1,
        }
        Ok(())
    }

    fn advance(&mut self) -> Result<()> {
        self.cursor += 1;
        self.load()
    }

    #[inline]
    fn cmp(&self, other: &Stream<'_>) -> Ordering {
        self.key.cmp(&other.key).then(self.marker.cmp(&other.marker))
    }
}

/// Multiplies by `(x_head - x_tail)` and truncates, dispatching on `mode`.
pub fn multiply_edge(terms: &TermList, layout: &DegreeLayout, edge: Edge, mode: Mode) -> Result<TermList> {
    let head = layout.position(edge.head);
    let tail = layout.position(edge.tail);
    let bump_head = Stream::new(terms, layout, head, Emit::Bump, false)?;
    let bump_tail = Stream::new(terms, layout, tail, Emit::Bump, true)?;
    match mode {
        Mode::Standard => merge([bump_head, bump_tail], terms.words(), terms.len()),
        Mode::Extended => merge(
            [
                bump_head,
                bump_tail,
                Stream::new(terms, layout, head, Emit::Tight, false)?,
                Stream::new(terms, layout, tail, Emit::Tight, true)?,
            ],
            terms.words(),
            terms.len(),
        ),
    }
}

/// `trunc_s(terms * (x_head - x_tail))` keeping only monomials below `s`.
///
/// Two increasing streams, one per endpoint, are merged; equal degree vectors
/// combine and cancel when their coefficients agree.
pub fn multiply_edge_standard(terms: &TermList, layout: &DegreeLayout, edge: Edge) -> Result<TermList> {
    multiply_edge(terms, layout, edge, Mode::Standard)
}

/// As [`multiply_edge_standard`] but also tracking monomials with one
/// vertex at its list size, stored as a base degree plus tight marker.
///
/// Four streams are merged: a degree bump and a tight transition for each
/// endpoint. Marked terms whose endpoint would reach its list size are dropped.
pub fn multiply_edge_extended(terms: &TermList, layout: &DegreeLayout, edge: Edge) -> Result<TermList> {
    multiply_edge(terms, layout, edge, Mode::Extended)
}

fn merge<const K: usize>(mut streams: [Stream<'_>; K], words: usize, hint: usize) -> Result<TermList> {
    let mut out = TermList::with_capacity(words, hint + hint / 2);
    loop {
        let mut m = K;
        for i in 0..K {
            if streams[i].live && (m == K || streams[i].cmp(&streams[m]) == Ordering::Less) {
                m = i;
            }
        }
        if m == K {
            break;
        }
        let mut equal = [false; K];
        let mut sum: i64 = streams[m].coeff;
        equal[m] = true;
        for i in m + 1..K {
            if streams[i].live && streams[i].cmp(&streams[m]) == Ordering::Equal {
                equal[i] = true;
                sum = sum.checked_add(streams[i].coeff).ok_or(Error::Overflow)?;
            }
        }
        if sum != 0 {
            out.push_raw(&streams[m].key, streams[m].marker, sum);
        }
        for i in 0..K {
            if equal[i] {
                streams[i].advance()?;
            }
        }
    }
    Ok(out)
}
