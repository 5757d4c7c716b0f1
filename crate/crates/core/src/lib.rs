//! Choosability testing for small graphs through coefficients of the graph
//! polynomial.
//!
//! The crate computes the truncated graph polynomial edge by edge over a
//! sorted, bit-packed term list, applies the Alon–Tarsi criterion, and when
//! that fails extracts linear constraints on the characteristic vectors of
//! colors in any bad list assignment. The constraints are used to enumerate
//! the few candidate assignments, which are then checked by a list colorer.
//!
//! Module map:
//! - [`graph`]: problems, parsing, vertex orderings and test families.
//! - [`poly`]: packed degree vectors, term lists and the truncated product.
//! - [`decide`]: the standard test, constraint collection and the pipeline.
//! - [`oracle`]: independent brute-force machinery used for cross-checking.
//! - [`bench`] and [`report`]: ordering comparisons and JSON reports.

pub mod bench;
pub mod decide;
pub mod error;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
