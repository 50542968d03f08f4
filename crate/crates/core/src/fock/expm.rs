//! Matrix exponential: scaling-and-squaring with a Taylor core.

use faer::Mat;

use super::{c64, FockOperator};
use crate::error::FockError;

const TAYLOR_MAX_TERMS: usize = 120;
const RESIDUAL_TOL: f64 = 1e-10;

fn one_norm(m: &Mat<c64>) -> f64 {
    let mut best = 0.0f64;
    for j in 0..m.ncols() {
        let mut s = 0.0;
        for i in 0..m.nrows() {
            let z = m.read(i, j);
            s += z.re.hypot(z.im);
        }
        best = best.max(s);
    }
    best
}

fn exp_core(a: &Mat<c64>) -> Mat<c64> {
    let n = a.nrows();
    // scale so the Taylor argument has norm ≤ 1/2
    let norm = one_norm(a);
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scale = (0.5f64).powi(s as i32);
    let b = faer::scale(c64::new(scale, 0.0)) * a;

    let mut sum: Mat<c64> = Mat::identity(n, n);
    let mut term: Mat<c64> = Mat::identity(n, n);
    for k in 1..=TAYLOR_MAX_TERMS {
        term = &term * &b;
        term = faer::scale(c64::new(1.0 / k as f64, 0.0)) * &term;
        sum += &term;
        if one_norm(&term) <= f64::EPSILON * one_norm(&sum) {
            break;
        }
    }
    let mut result = sum;
    for _ in 0..s {
        result = &result * &result;
    }
    result
}

/// exp(A) with a consistency check: the normalized residual
/// ‖exp(A)·exp(−A) − I‖_F / max(1, ‖exp(A)‖_F·‖exp(−A)‖_F) must stay
/// below 1e−10, otherwise a numerical-failure error carries the operator's
/// provenance. (The normalization makes the check meaningful at any norm
/// scale; the unnormalized product residual grows like ‖exp(A)‖·‖exp(−A)‖·ε
/// for perfectly correct arithmetic.)
pub fn matrix_exp(op: &FockOperator) -> Result<FockOperator, FockError> {
    let n = op.dim();
    let e = exp_core(op.mat());
    let neg = faer::scale(c64::new(-1.0, 0.0)) * op.mat();
    let f = exp_core(&neg);
    let prod = &e * &f;
    let eye: Mat<c64> = Mat::identity(n, n);
    let resid = (&prod - &eye).norm_l2();
    let scale = (e.norm_l2() * f.norm_l2()).max(1.0);
    let rel = resid / scale;
    if !rel.is_finite() || rel > RESIDUAL_TOL {
        return Err(FockError::NumericalFailure {
            op: "matrix_exp",
            detail: format!(
                "inverse-product residual {rel:.3e} (source {})",
                op.note()
            ),
        });
    }
    Ok(FockOperator::from_mat(e, format!("exp({})", op.note())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_zero_is_identity() {
        let z = FockOperator::from_mat(Mat::<c64>::zeros(4, 4), "0");
        let e = matrix_exp(&z).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((e.get(i, j).re - want).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn exp_diagonal() {
        let mut m = Mat::<c64>::zeros(2, 2);
        m.write(0, 0, c64::new(1.0, 0.0));
        m.write(1, 1, c64::new(2.0, 0.0));
        let e = matrix_exp(&FockOperator::from_mat(m, "diag(1,2)")).unwrap();
        assert!((e.get(0, 0).re - 1f64.exp()).abs() < 1e-12);
        assert!((e.get(1, 1).re - 2f64.exp()).abs() < 1e-11);
        assert!(super::super::cabs(e.get(0, 1)) < 1e-14);
    }

    #[test]
    fn exp_rotation_block() {
        // exp([[0, t], [−t, 0]]) = rotation by t
        let t = 0.7;
        let mut m = Mat::<c64>::zeros(2, 2);
        m.write(0, 1, c64::new(t, 0.0));
        m.write(1, 0, c64::new(-t, 0.0));
        let e = matrix_exp(&FockOperator::from_mat(m, "rot")).unwrap();
        assert!((e.get(0, 0).re - t.cos()).abs() < 1e-14);
        assert!((e.get(0, 1).re - t.sin()).abs() < 1e-14);
    }

    #[test]
    fn exp_large_norm_still_consistent() {
        // norms around e^{±30} exercise the squaring chain
        let mut m = Mat::<c64>::zeros(3, 3);
        m.write(0, 0, c64::new(30.0, 0.0));
        m.write(1, 1, c64::new(-30.0, 0.0));
        m.write(0, 1, c64::new(2.0, 1.0));
        m.write(1, 2, c64::new(-1.0, 0.5));
        let e = matrix_exp(&FockOperator::from_mat(m, "stiff")).unwrap();
        assert!((e.get(0, 0).re.ln() - 30.0).abs() < 1e-10);
    }
}
