//! Exact combinatorial and metric invariants of partial permutohedra
//! `P(m, n)`, the convex hull of all vectors in `{0, ..., n}^m` whose nonzero
//! entries are pairwise distinct.
//!
//! Every quantity is computed by several independent methods that can be
//! cross-checked against a brute-force lattice-point counter.

pub mod cli;
pub mod combinat;
pub mod ehrhart;
pub mod error;
pub mod exactmath;
pub mod faces;
pub mod polytope;
pub mod reference;
pub mod volume;

pub use error::{Error, Result};
