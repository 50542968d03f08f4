//! Error types shared across the crate.

use thiserror::Error;

/// Failures in the exact operator-algebra layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(&'static str, &'static str),
    #[error("operation requires the position basis (convert with to_position first)")]
    UnsupportedBasis,
    #[error("adjoint series did not terminate within {max_depth} commutator iterates")]
    NonTerminating { max_depth: usize },
    #[error("graded generator has a nonzero order-0 part")]
    GradingError,
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Failures in the truncated Fock-space numerical layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum FockError {
    #[error("numerical failure in {op}: {detail}")]
    NumericalFailure { op: &'static str, detail: String },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("ground level is degenerate (gap {gap:.3e} below 1e-10)")]
    DegenerateGround { gap: f64 },
    #[error("degenerate metric normalization |<s,Ms>| = {norm:.3e} < 1e-14")]
    DegenerateNormalization { norm: f64 },
    #[error("ground level not converged: |E(N) - E(N-{delta})| = {dev:.3e} exceeds {tol:.1e}")]
    NotConverged { delta: usize, dev: f64, tol: f64 },
}

/// Failures in the model layers (parameter domains, derivations, quadrature).
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("parameter domain violation: {0}")]
    Domain(String),
    #[error("no real solution: discriminant {0:.6e} < 0")]
    NoRealSolution(f64),
    #[error("non-normalizable wavefunction: lambda + mu^2 = {0:.6e} <= 0")]
    NonNormalizable(f64),
    #[error("quadrature did not converge: |I({n1}) - I({n2})| = {dev:.3e}")]
    QuadratureAccuracy { n1: usize, n2: usize, dev: f64 },
    #[error("order-{order} linear system is inconsistent (algebra bug)")]
    DerivationFailure { order: u32 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Fock(#[from] FockError),
}
