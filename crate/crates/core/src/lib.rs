//! Spectral upper bounds for the independence number of a graph and
//! its distance-k generalizations, classical and quantum.
//!
//! The crate computes eigenvalue-based bounds (inertia, polynomial,
//! Hoffman ratio, Laplacian ratio, and weighted-inertia variants),
//! checks them against an exact branch-and-bound oracle, verifies
//! projector-based certificates for quantum independence and
//! projective packings, and searches for edge weightings that make the
//! inertia bound meet the independence number exactly.
//!
//! Zero is a decision, not a number: every bound that counts zero
//! eigenvalues can run either under a relative tolerance or in exact
//! rational arithmetic ([`spectra::ZeroPolicy`]), and tightness claims
//! are only ever made on the exact route.

// Matrix kernels address entries by (row, column) pairs throughout;
// index loops are the clearest way to write them.
#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod catalog;
pub mod cert;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod spectra;
pub mod weights;

pub use bounds::{BoundName, BoundReport, EigenvalueCounts, Polynomial, WalkExtrema};
pub use catalog::CatalogId;
pub use cert::{
    Certificate, PackingCertificate, QuantumCertificate, RationalValue, VerificationReport,
    Violation,
};
pub use error::Error;
pub use graph::{DistanceMatrix, Graph};
pub use oracle::{IndependentSetCert, OracleBudget};
pub use spectra::{Inertia, Spectrum, ZeroPolicy};
pub use weights::{SearchConfig, SearchResult, WeightField, WeightMatrix};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
