use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the evaluation pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The puncture index must satisfy n >= 2.
    #[error("puncture index must be >= 2, got {0}")]
    InvalidIndex(u32),

    /// Gamma has poles at 0, -1, -2, ...
    #[error("log-gamma pole at z = {0}")]
    GammaPole(Complex64),

    /// The c parameter of a hypergeometric series may not be a non-positive integer.
    #[error("hypergeometric parameter c = {0} is a non-positive integer")]
    InvalidCParameter(f64),

    /// A series failed its truncation criterion within the term cap.
    #[error("hypergeometric series did not converge at z = {z} (a={a}, b={b}, c={c})")]
    NonConvergence { a: f64, b: f64, c: f64, z: Complex64 },

    /// z = 1 is a branch point of 2F1 when c - a - b <= 0.
    #[error("branch point of 2F1 at z = 1 (c - a - b = {0} <= 0)")]
    BranchPoint(f64),

    /// The requested integration path would cross a branch cut.
    #[error("integration path from {from} to {to} crosses a branch cut or singularity")]
    PathCrossesCut { from: Complex64, to: Complex64 },

    /// Adaptive step control shrank the step below the admissible minimum.
    #[error("ODE step size underflow near {0}")]
    StepSizeUnderflow(Complex64),

    /// Metric evaluation at a puncture of the domain.
    #[error("metric density is undefined at the puncture {0}")]
    Puncture(Complex64),

    /// Argument outside an operation's domain of validity.
    #[error("{0}")]
    Domain(String),

    /// The circle minimizer failed to bracket a minimum; indicates a metric bug.
    #[error("failed to bracket the circle minimum for n = {0}")]
    OptimizationFailure(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
