//! Algebraic machinery of finite graphs: spectra, principal idempotents,
//! predistance polynomials, and distance matrices, with theorem-level
//! checks for regularity, biregularity, walk-regularity, and
//! distance-regularity, cross-validated against an independent
//! combinatorial oracle.

pub mod catalog;
pub mod characterize;
pub mod edgelist;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod spectral;

pub use characterize::{classify, ClassificationReport, CheckResult, Verdict};
pub use graph::{Bipartition, DistanceMatrices, Graph};
pub use spectral::Tolerances;
