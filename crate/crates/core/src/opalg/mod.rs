//! Exact noncommutative polynomial algebra over one canonical pair with
//! [x, p] = i: canonical orderings, involutions, Weyl symmetrization,
//! basis conversion, and terminating / graded BCH similarity transforms.
//! Coefficients live in the exact ring Q(i, √2); no floating point enters
//! this layer.

pub mod bch;
pub mod coeff;
pub mod poly;
pub mod series;
pub mod text;
pub mod weyl;

pub use bch::{bch_terminating, DEFAULT_BCH_DEPTH};
pub use coeff::{rat, Coeff, Rat};
pub use poly::{Basis, Monomial, OperatorPoly};
pub use series::{bch_graded, GradedSeries};
pub use text::{parse_poly, poly_from_json, poly_to_json};
pub use weyl::{weyl_compose, weyl_decompose, weyl_sym};
