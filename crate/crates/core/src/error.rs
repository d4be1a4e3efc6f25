use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Input outside the stated parameter range of an operation.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("map has a pole at z = {z}")]
    PoleOfMap { z: Complex64 },

    /// The point lies on the omitted ray of the rotated Koebe image.
    #[error("w = {w} lies on the omitted ray of the Koebe branch")]
    OffBranch { w: Complex64 },

    #[error("degenerate slit angle theta = {theta}")]
    DegenerateAngle { theta: f64 },

    /// The boundary preimage formula does not land on -1 for this angle.
    #[error("boundary preimage branch check failed for theta = {theta} (residual {residual:e})")]
    BranchMismatch { theta: f64, residual: f64 },

    #[error("point {w} is not in the domain")]
    NotInDomain { w: Complex64 },

    #[error("newton iteration did not converge after {iterations} steps (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("contour passes within {distance:e} of the target value")]
    ContourHitsValue { distance: f64 },

    #[error("argument increment not resolvable within {budget} samples")]
    NonResolvable { budget: usize },

    #[error("grid has no admissible samples")]
    EmptyGrid,

    #[error("witness construction requires an unbounded domain")]
    UnboundedRequired,

    #[error("poles {a} and {b} are collinear with the origin on the same ray and cannot be reduced")]
    CollinearDegenerate { a: Complex64, b: Complex64 },

    #[error("computation cancelled")]
    Cancelled,
}

impl Error {
    /// True for failures of an iterative or adaptive numerical scheme, as
    /// opposed to bad inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::NonResolvable { .. } | Error::BranchMismatch { .. }
        )
    }
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
