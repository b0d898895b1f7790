use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// graph6 parsing failed; `offset` is the byte position in the input line.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// A graph violated a structural invariant (range, loops, vertex count).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// A catalog id had an unknown family or invalid parameters.
    #[error("invalid catalog id: {0}")]
    Catalog(String),

    /// A matrix handed to a Hermitian-only operation was not Hermitian.
    #[error("matrix is not Hermitian: relative asymmetry {asymmetry:.3e} exceeds {limit:.3e}")]
    NotHermitian { asymmetry: f64, limit: f64 },

    /// Exact-mode inertia was asked to work on entries it cannot represent.
    #[error("exact inertia mode: {0}")]
    ExactMode(String),

    /// The exact oracle was invoked beyond its configured budget.
    #[error("oracle budget exceeded: graph has {n} vertices, budget allows {max}")]
    BudgetExceeded { n: usize, max: usize },

    /// A bound that requires a regular graph was given an irregular one.
    #[error("graph is not regular: {0}")]
    NotRegular(String),

    /// Degenerate input for the requested bound (e.g. edgeless graph).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A certificate file or structure did not match the schema.
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    /// A matrix failed the projector contract.
    #[error("not a projector: {kind} residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    Projector {
        kind: &'static str,
        residual: f64,
        tol: f64,
    },

    /// A projector trace was too far from an integer to assign a rank.
    #[error("projector trace {trace} is not within {guard:.1e} of an integer")]
    FractionalRank { trace: f64, guard: f64 },

    /// The two routes of the trace-orthogonality equivalence disagreed.
    #[error(
        "orthogonality equivalence mismatch: |tr| = {trace_abs:.3e} (threshold {trace_tol:.3e}) \
         but max eigenvector cross product = {cross_max:.3e} (threshold {cross_tol:.3e})"
    )]
    OrthogonalityMismatch {
        trace_abs: f64,
        trace_tol: f64,
        cross_max: f64,
        cross_tol: f64,
    },

    /// A weight matrix had support outside the edge set of its graph.
    #[error("weight pattern violation: {0}")]
    PatternViolation(String),

    /// An internal soundness invariant failed; always a bug, never an input problem.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// Invalid polynomial (empty or identically zero).
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
