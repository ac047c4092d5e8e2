//! Enrichment of C0 Lagrange finite element functions into H2-conforming
//! virtual element functions on simplicial meshes in two and three dimensions.
//!
//! The library is organized around the pipeline
//!
//! ```text
//! mesh -> lagrange (V_h, interpolation, jumps) -> skeleton (compatible
//! boundary data) -> vem (global dof vectors, norms, projections) -> verify
//! (experiment harness and reports)
//! ```
//!
//! All constructions are deterministic: entities are identified by sorted
//! vertex tuples in lexicographic order, and every "choose a cell" rule
//! resolves to the lowest eligible index.

pub mod error;
pub mod lagrange;
pub mod linalg;
pub mod mesh;
pub mod poly;
pub mod quadrature;
pub mod sampler;
pub mod skeleton;
pub mod vem;
pub mod verify;

pub use error::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Highest polynomial order the library is configured for.
pub const MAX_ORDER: usize = 6;
