//! Spectrum reports with a dimension-halving convergence scan.

use super::{c64, cabs, eigenvalues, matrixize, BasisSpec};
use crate::error::FockError;
use crate::opalg::OperatorPoly;

/// One eigenvalue with its convergence flag.
#[derive(Clone, Copy, Debug)]
pub struct EigenEntry {
    pub re: f64,
    pub im: f64,
    pub converged: bool,
}

/// Eigenvalues sorted by real part (ties by imaginary part), flagged
/// stable when the level moved by less than `tol` going from dimension
/// N−delta_dim to N.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<EigenEntry>,
    pub dim: usize,
    pub delta_dim: usize,
    pub tol: f64,
}

pub const DEFAULT_DELTA_DIM: usize = 16;
pub const DEFAULT_CONV_TOL: f64 = 1e-8;

/// Diagonalize at N and N−delta and flag per-level stability.
pub fn spectrum_report(
    poly: &OperatorPoly,
    spec: BasisSpec,
    delta_dim: usize,
    tol: f64,
) -> Result<SpectrumReport, FockError> {
    let big = eigenvalues(&matrixize(poly, spec))?;
    let small_dim = spec.dim.saturating_sub(delta_dim);
    let small: Vec<c64> = if small_dim >= 2 {
        eigenvalues(&matrixize(
            poly,
            BasisSpec {
                dim: small_dim,
                headroom: spec.headroom,
            },
        ))?
    } else {
        Vec::new()
    };
    let entries = big
        .iter()
        .enumerate()
        .map(|(k, z)| {
            let converged = k < small.len() && cabs(*z - small[k]) < tol;
            EigenEntry {
                re: z.re,
                im: z.im,
                converged,
            }
        })
        .collect();
    Ok(SpectrumReport {
        eigenvalues: entries,
        dim: spec.dim,
        delta_dim,
        tol,
    })
}

/// 17-significant-digit float form used for deterministic text output.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

impl SpectrumReport {
    pub fn converged_count(&self) -> usize {
        self.eigenvalues.iter().filter(|e| e.converged).count()
    }

    /// `{"eigenvalues":[{"re":..,"im":..,"converged":..}],"dim":..,"delta_dim":..,"tol":..}`
    /// with floats at 17 significant digits; byte-deterministic.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\"eigenvalues\":[");
        for (k, e) in self.eigenvalues.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&format!(
                "{{\"re\":{},\"im\":{},\"converged\":{}}}",
                fmt_f64(e.re),
                fmt_f64(e.im),
                e.converged
            ));
        }
        s.push_str(&format!(
            "],\"dim\":{},\"delta_dim\":{},\"tol\":{}}}",
            self.dim,
            self.delta_dim,
            fmt_f64(self.tol)
        ));
        s
    }

    /// CSV with header `index,re,im,converged`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("index,re,im,converged\n");
        for (k, e) in self.eigenvalues.iter().enumerate() {
            s.push_str(&format!(
                "{},{},{},{}\n",
                k,
                fmt_f64(e.re),
                fmt_f64(e.im),
                e.converged
            ));
        }
        s
    }
}
