use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is singular: |det| = {det:e} <= {tol:e}")]
    SingularMatrix { det: f64, tol: f64 },

    #[error("bi-orthogonal system degenerates: |cos theta| = {omega:e} <= {tol:e}")]
    DegenerateSystem { omega: f64, tol: f64 },

    #[error("deformation parameter {gamma} outside [-1, 1]")]
    OutOfRange { gamma: f64 },

    #[error("modulus {kappa} outside [0, 1)")]
    ModulusOutOfRange { kappa: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("step size underflow at u = {u}: h = {step:e}")]
    StepFailure { u: f64, step: f64 },

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    #[error("{what}: routes disagree by {residual:e} (tolerance {tol:e})")]
    RouteDisagreement {
        what: &'static str,
        residual: f64,
        tol: f64,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
