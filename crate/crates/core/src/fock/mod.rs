//! Truncated oscillator-basis matrix layer: dense non-Hermitian
//! eigensolving, matrix exponentials, and metric expectation values.
//!
//! Matrixization follows a headroom-then-crop policy: products of cropped
//! matrices corrupt the high corner, so every operator is assembled at
//! dimension N+h and cropped to N×N afterwards, confining the artifact to
//! the discarded block. Default headroom is the operator's total degree.
//!
//! Dense decompositions are delegated to `faer`; the matrix exponential is
//! scaling-and-squaring with a Taylor core (see `expm`).

pub mod build;
pub mod eig;
pub mod expect;
pub mod expm;
pub mod numpoly;
pub mod report;

pub use build::{ladder_matrices, matrixize, matrixize_num, BasisSpec, FockOperator};
pub use eig::{eigenvalues, ground_right_eigenvector};
pub use expect::expectation;
pub use expm::matrix_exp;
pub use numpoly::NumPoly;
pub use report::{spectrum_report, EigenEntry, SpectrumReport};

pub use faer::complex_native::c64;

/// |z| for faer's native complex scalar.
pub fn cabs(z: c64) -> f64 {
    z.re.hypot(z.im)
}
