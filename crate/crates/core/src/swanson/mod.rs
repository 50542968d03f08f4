//! The Swanson model ω a†a + α a² + β a†²: parameterization, both
//! similarity transforms to scaled oscillators, the Bogoliubov constraint
//! family, wavefunctions with their weighted orthonormality, and the
//! (X, P) observables of the x²-metric theory.

pub mod bogoliubov;
pub mod params;
pub mod transforms;
pub mod wavefn;

pub use bogoliubov::{solve_bogoliubov, verify_swanson_u, BogoliubovFamily, SwansonUReport};
pub use params::{DerivedScales, SwansonParams};
pub use transforms::{
    hamiltonian, hermitian_equiv_n, hermitian_equiv_x2, observables, pseudo_hermiticity_check,
};
pub use wavefn::{gauss_hermite, wavefunction, weighted_overlap};
