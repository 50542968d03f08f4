//! Dense general eigensolving (delegated to faer's complex Schur path).

use super::{c64, cabs, FockOperator};
use crate::error::FockError;

/// All eigenvalues of a general complex matrix, sorted by real part, ties
/// by imaginary part.
pub fn eigenvalues(op: &FockOperator) -> Result<Vec<c64>, FockError> {
    if !op.is_finite() {
        return Err(FockError::NumericalFailure {
            op: "eigenvalues",
            detail: format!("non-finite entries in {}", op.note()),
        });
    }
    let mut vals: Vec<c64> = op.mat().eigenvalues();
    sort_eigs(&mut vals);
    Ok(vals)
}

pub(crate) fn sort_eigs(vals: &mut [c64]) {
    vals.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
}

/// Right eigenvector of the eigenvalue with smallest real part, unit
/// Euclidean norm, phase fixed so the largest-magnitude component is real
/// positive. Errors when the ground level is not simple (gap ≤ 1e−10).
pub fn ground_right_eigenvector(op: &FockOperator) -> Result<(c64, Vec<c64>), FockError> {
    let n = op.dim();
    let eig = op.mat().eigendecomposition::<c64>();
    let s = eig.s();
    let u = eig.u();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        let (za, zb) = (s.column_vector().read(a), s.column_vector().read(b));
        (za.re, za.im)
            .partial_cmp(&(zb.re, zb.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let ground = idx[0];
    let lam = s.column_vector().read(ground);
    if n > 1 {
        let next = s.column_vector().read(idx[1]);
        let gap = cabs(next - lam);
        if gap <= 1e-10 {
            return Err(FockError::DegenerateGround { gap });
        }
    }
    let mut v: Vec<c64> = (0..n).map(|i| u.read(i, ground)).collect();
    let norm = v.iter().map(|z| z.re * z.re + z.im * z.im).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(FockError::NumericalFailure {
            op: "ground_right_eigenvector",
            detail: "zero eigenvector".into(),
        });
    }
    for z in v.iter_mut() {
        *z = c64::new(z.re / norm, z.im / norm);
    }
    let (kmax, amax) = v
        .iter()
        .enumerate()
        .map(|(k, z)| (k, cabs(*z)))
        .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    let phase = v[kmax] * c64::new(1.0 / amax, 0.0);
    let rot = c64::new(phase.re, -phase.im); // conj(phase), unit modulus
    for z in v.iter_mut() {
        *z *= rot;
    }
    Ok((lam, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use faer::Mat;

    fn diag(vals: &[f64]) -> FockOperator {
        let n = vals.len();
        let mut m = Mat::<c64>::zeros(n, n);
        for (k, v) in vals.iter().enumerate() {
            m.write(k, k, c64::new(*v, 0.0));
        }
        FockOperator::from_mat(m, "diag")
    }

    #[test]
    fn sorts_by_real_part() {
        let vals = eigenvalues(&diag(&[3.0, 1.0, 2.0])).unwrap();
        let re: Vec<f64> = vals.iter().map(|z| z.re).collect();
        assert_eq!(re, vec![1.0, 2.0, 3.0]);
        assert!(vals.iter().all(|z| z.im.abs() < 1e-14));
    }

    #[test]
    fn ground_vector_of_oscillator() {
        use crate::fock::{matrixize, BasisSpec};
        use crate::opalg::{Coeff, OperatorPoly};
        let h0 = (OperatorPoly::p() * OperatorPoly::p()
            + OperatorPoly::x() * OperatorPoly::x())
        .scale(&Coeff::rational(1, 2));
        let m = matrixize(&h0, BasisSpec::new(12));
        let (e0, v) = ground_right_eigenvector(&m).unwrap();
        assert!((e0.re - 0.5).abs() < 1e-12);
        assert!((v[0].re - 1.0).abs() < 1e-10);
        for z in &v[1..] {
            assert!(cabs(*z) < 1e-10);
        }
    }

    #[test]
    fn degenerate_ground_is_an_error() {
        let err = ground_right_eigenvector(&diag(&[1.0, 1.0, 2.0]));
        assert!(matches!(err, Err(FockError::DegenerateGround { .. })));
    }
}
