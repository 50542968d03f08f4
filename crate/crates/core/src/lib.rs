//! Exact operator algebra plus a truncated Fock-space numerical layer for
//! two non-Hermitian quantum models and their Hermitian counterparts:
//! a Bogoliubov-type quadratic Hamiltonian (ω a†a + α a² + β a†²) and the
//! PT-symmetric cubic model ½(p²+x²) + igx³.
//!
//! Layering:
//! - [`opalg`]: exact symbolic kernel (Q(i,√2) coefficients);
//! - [`fock`]: dense truncated-basis numerics (matrices, spectra, metric
//!   expectation values);
//! - [`swanson`], [`ixcubed`]: the two models, built on both layers.

pub mod error;
pub mod fock;
pub mod ixcubed;
pub mod opalg;
pub mod swanson;

pub use error::{AlgebraError, FockError, ModelError};
