use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("denominator of F vanishes at z = {z}")]
    DegenerateDenominator { z: Complex64 },

    #[error("dilatation {0} is not the square of an analytic function; lifting refused")]
    NotASquare(String),

    #[error("hypergeometric series did not converge within {terms} terms")]
    NoConvergence { terms: usize },

    #[error("{func} evaluated on its branch cut at {z}")]
    BranchCutHit { func: &'static str, z: Complex64 },

    #[error("c = {c} is an endpoint of [-2, 2]; use the special slit formulas")]
    EndpointParameter { c: f64 },

    #[error("shear (c, a) = ({c}, {a}) is degenerate")]
    DegenerateShear { c: f64, a: f64 },

    #[error("adaptive quadrature exhausted depth {depth} on segment {from} -> {to}")]
    QuadratureFailure {
        depth: usize,
        from: Complex64,
        to: Complex64,
    },

    #[error("integration path comes within {distance:e} of a pole")]
    SingularPath { distance: f64 },

    #[error("pole {pole} collides with a partial-fraction root")]
    PoleCollision { pole: Complex64 },

    #[error("parameterization has a pole at {z}")]
    PoleAtBoundary { z: Complex64 },

    #[error("{0} lies outside the domain of the canonical surface")]
    DomainViolation(Complex64),

    #[error("pipeline does not belong to case {0}")]
    PipelineMismatch(i32),

    #[error("unsupported family/dilatation pair: {0}")]
    UnsupportedPair(String),

    #[error("grid node {index} at z = {z} failed: {source}")]
    NodeFailure {
        index: usize,
        z: Complex64,
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
