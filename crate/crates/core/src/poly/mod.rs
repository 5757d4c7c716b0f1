//! Truncated graph polynomials over sorted, bit-packed term lists.

mod driver;
mod layout;
mod multiply;
mod terms;

pub use driver::{
    final_terms, run_truncated_product, Flow, RunConfig, RunOutcome, RunStats, TermSink,
    DEFAULT_BRANCH_LIMIT,
};
pub use layout::{DegreeLayout, PackedDegree};
pub use multiply::{multiply_edge, multiply_edge_extended, multiply_edge_standard, Mode};
pub use terms::{Monomial, Term, TermList, NO_MARKER};
