//! Error type shared by all modules.

use thiserror::Error;

/// Errors surfaced by mesh construction, polynomial algebra, the skeleton
/// construction and the enrichment operator.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A hanging node or an over-shared facet was detected.
    #[error("non-conforming mesh: {0}")]
    NonConforming(String),

    /// A cell has (nearly) zero measure.
    #[error("degenerate cell {cell}: measure {measure:e}")]
    DegenerateCell { cell: usize, measure: f64 },

    /// A vertex index referenced by a cell is out of range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Boundary geometry falls inside the tolerance band of a class boundary.
    #[error("ambiguous boundary geometry: {0}")]
    AmbiguousGeometry(String),

    /// Quadrature exactness beyond the configured maximum was requested.
    #[error("unsupported quadrature degree {0}")]
    UnsupportedDegree(usize),

    /// The Gram matrix of an L2 projection is numerically singular.
    #[error("singular Gram matrix on {0}")]
    SingularGram(String),

    /// Polynomial order outside the supported range.
    #[error("unsupported order k={0}")]
    UnsupportedOrder(usize),

    /// Operands live on different meshes or spaces.
    #[error("mesh mismatch: {0}")]
    MeshMismatch(String),

    /// An interior-facet operation was applied to a boundary facet.
    #[error("facet {0} is on the boundary")]
    BoundaryFacet(usize),

    /// No cell satisfies the eligibility rule of a vertex/edge case.
    #[error("no eligible cell: {0}")]
    NoEligibleCell(String),

    /// The tangential-derivative system at a boundary vertex is singular.
    #[error("singular boundary-edge system at vertex {vertex} (det {det:e})")]
    SingularEdgeSystem { vertex: usize, det: f64 },

    /// An edge/face interpolation system could not be solved to tolerance.
    #[error("singular interpolation system on {0}")]
    SingularInterpolation(String),

    /// The two boundary faces at an edge of the domain are nearly coplanar.
    #[error("singular dihedral angle at edge {0}")]
    SingularDihedral(usize),

    /// Edge traces meeting at a face vertex disagree beyond tolerance.
    #[error("inconsistent edge traces on face {face}: residual {residual:e}")]
    InconsistentEdgeTraces { face: usize, residual: f64 },

    /// A dense solve inside the energy projection failed.
    #[error("singular system in {0}")]
    SingularSystem(String),

    /// A trace pair violates the compatibility conditions.
    #[error("incompatible trace pair on cell {cell}: residual {residual:e}")]
    IncompatiblePair { cell: usize, residual: f64 },

    /// A random sample had no jump content and was discarded.
    #[error("degenerate sample (J(v,v)=0)")]
    DegenerateSample,

    /// Report or mesh file I/O failed.
    #[error("io error: {0}")]
    Io(String),

    /// Malformed input file or CLI argument.
    #[error("usage error: {0}")]
    Usage(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
