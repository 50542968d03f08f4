//! Metric expectation values ⟨s, M·A·s⟩ / ⟨s, M·s⟩.

use super::{c64, cabs, FockOperator};
use crate::error::FockError;

fn dot(a: &[c64], b: &[c64]) -> c64 {
    let mut acc = c64::new(0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        acc += c64::new(x.re, -x.im) * *y;
    }
    acc
}

/// Expectation of `op` in `state` under the (optional) metric, using the
/// inner product that conjugates the first argument. A metric norm below
/// 1e−14 in magnitude is rejected as degenerate.
pub fn expectation(
    op: &FockOperator,
    state: &[c64],
    metric: Option<&FockOperator>,
) -> Result<c64, FockError> {
    let n = op.dim();
    if state.len() != n {
        return Err(FockError::DimensionMismatch(state.len(), n));
    }
    if let Some(m) = metric {
        if m.dim() != n {
            return Err(FockError::DimensionMismatch(m.dim(), n));
        }
    }
    let op_s = op.apply(state);
    let (num, den) = match metric {
        Some(m) => (dot(state, &m.apply(&op_s)), dot(state, &m.apply(state))),
        None => (dot(state, &op_s), dot(state, state)),
    };
    let dmag = cabs(den);
    if dmag < 1e-14 {
        return Err(FockError::DegenerateNormalization { norm: dmag });
    }
    let inv = c64::new(den.re / (dmag * dmag), -den.im / (dmag * dmag));
    Ok(num * inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{matrixize, BasisSpec};
    use crate::opalg::OperatorPoly;

    #[test]
    fn identity_has_unit_expectation() {
        let eye = FockOperator::identity(6);
        let state: Vec<c64> = (0..6).map(|k| c64::new(0.3 * k as f64 + 0.1, 0.2)).collect();
        let metric = matrixize(
            &(OperatorPoly::adag() * OperatorPoly::a() + OperatorPoly::one(crate::opalg::Basis::Ladder)),
            BasisSpec::new(6),
        );
        let v = expectation(&eye, &state, Some(&metric)).unwrap();
        assert!((v.re - 1.0).abs() < 1e-13 && v.im.abs() < 1e-13);
    }

    #[test]
    fn ground_state_position_vanishes_by_parity() {
        let x = matrixize(&OperatorPoly::x(), BasisSpec::new(8));
        let mut state = vec![c64::new(0.0, 0.0); 8];
        state[0] = c64::new(1.0, 0.0);
        let v = expectation(&x, &state, None).unwrap();
        assert!(cabs(v) < 1e-15);
    }

    #[test]
    fn degenerate_normalization_rejected() {
        let eye = FockOperator::identity(2);
        let state = vec![c64::new(0.0, 0.0); 2];
        assert!(matches!(
            expectation(&eye, &state, None),
            Err(FockError::DegenerateNormalization { .. })
        ));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let eye = FockOperator::identity(3);
        let state = vec![c64::new(1.0, 0.0); 4];
        assert!(matches!(
            expectation(&eye, &state, None),
            Err(FockError::DimensionMismatch(4, 3))
        ));
    }
}
