use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Fewer than two distinct points, or points that do not span a line.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A parameter outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The Cayley complex has a non-simplex mixed face.
    #[error("Cayley complex is not simplicial: offending face {face:?} has {} vertices but dimension {dim}", face.len())]
    NotSimplicial { face: Vec<usize>, dim: i64 },

    /// An f-vector has faces at or above the requested h-vector dimension.
    #[error("dimension overflow: face of dimension {found} but h-vector dimension parameter is {limit}")]
    DimensionOverflow { found: i64, limit: usize },

    /// Lefschetz parameters outside the admissible (i, j) range.
    #[error("out of theorem range: i={i}, j={j} with d={d} (need 2i <= d and 0 <= j <= d - 2i)")]
    OutOfTheoremRange { i: usize, j: usize, d: usize },

    /// Perturbation retries exhausted without preserving vertex counts.
    #[error("perturbation failed: {0}")]
    PerturbationFailed(String),

    /// Ring computation exceeds the configured degree cap.
    #[error("degree cap exceeded: {0}")]
    DegreeCapExceeded(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
