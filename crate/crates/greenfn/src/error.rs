//! Crate-wide error type.

use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the numerical routines and surfaced by the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-domain input (non-finite entries, `t == 0`, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The eigenvalue iteration did not converge within its sweep budget.
    #[error("eigenvalue iteration failed to converge within {0} iterations")]
    EigenFailure(usize),

    /// Argument outside the representable range of the algorithm.
    #[error("range error: {0}")]
    Range(String),

    /// An analytic-function evaluator failed, typically because the
    /// expansion point sits on a pole.
    #[error("evaluation error: {0}")]
    Evaluation(String),

    /// The quadrature contour passes too close to a node or a pole.
    #[error("contour passes within {dist:.3e} of {what}")]
    Contour { what: String, dist: f64 },

    /// An operation requiring pairwise distinct nodes received repeats.
    #[error("nodes are not pairwise distinct (minimum separation {0:.3e})")]
    DistinctnessViolation(f64),

    /// The spectrum touches the imaginary axis, so the bounded-solutions
    /// problem is not well posed.
    #[error("spectrum intersects imaginary axis: eigenvalue {value} has |Re| <= {tol:.3e}")]
    DichotomyViolation { value: Complex64, tol: f64 },

    /// Truncation-window selection or quadrature refinement did not converge.
    #[error("window selection failed: {0}")]
    Window(String),

    /// Random-matrix generation exhausted its rejection budget.
    #[error("matrix generation exhausted after {0} rejections")]
    Generation(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
