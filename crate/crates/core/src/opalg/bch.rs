//! Terminating adjoint series: e^G A e^{−G} = Σ_k ad_G^k(A)/k!.

use num_bigint::BigInt;
use num_rational::Ratio;

use super::poly::OperatorPoly;
use crate::error::AlgebraError;

pub const DEFAULT_BCH_DEPTH: usize = 64;

/// Exact similarity transform e^G · target · e^{−G}, computed by iterating
/// the commutator until an iterate vanishes exactly. Errors when the
/// adjoint action is not nilpotent on the target within `max_depth`.
pub fn bch_terminating(
    generator: &OperatorPoly,
    target: &OperatorPoly,
    max_depth: usize,
) -> Result<OperatorPoly, AlgebraError> {
    let mut sum = target.clone();
    let mut term = target.clone();
    for k in 1..=max_depth {
        term = generator
            .commutator(&term)?
            .scale_rat(&Ratio::new(BigInt::from(1), BigInt::from(k as u64)));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = sum.try_add(&term)?;
    }
    Err(AlgebraError::NonTerminating { max_depth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalg::coeff::Coeff;
    use crate::opalg::poly::Basis;

    #[test]
    fn zero_generator_is_identity() {
        let target = OperatorPoly::monomial(Basis::Position, 2, 1, Coeff::rational(3, 5));
        let got = bch_terminating(&OperatorPoly::zero(Basis::Position), &target, 8).unwrap();
        assert_eq!(got, target);
    }

    #[test]
    fn linear_generator_shifts() {
        // e^x p e^{−x} = p + [x, p] = p + i
        let got = bch_terminating(&OperatorPoly::x(), &OperatorPoly::p(), 8).unwrap();
        let want = OperatorPoly::p() + OperatorPoly::constant(Basis::Position, Coeff::i());
        assert_eq!(got, want);
    }

    #[test]
    fn rotation_generator_does_not_terminate() {
        // ad_{x²+p²} cycles x ↔ p forever
        let gen = OperatorPoly::x() * OperatorPoly::x() + OperatorPoly::p() * OperatorPoly::p();
        let err = bch_terminating(&gen, &OperatorPoly::x(), 16);
        assert_eq!(err, Err(AlgebraError::NonTerminating { max_depth: 16 }));
    }

    #[test]
    fn quadratic_generator_nilpotent_on_quadratics() {
        // ad_{x²} maps span{x², p², xp+px} into itself, nilpotent of index 3
        let x2 = OperatorPoly::x() * OperatorPoly::x();
        let p2 = OperatorPoly::p() * OperatorPoly::p();
        let mut term = p2;
        let mut nonzero = 0;
        for _ in 0..6 {
            term = x2.commutator(&term).unwrap();
            if term.is_zero() {
                break;
            }
            nonzero += 1;
        }
        assert_eq!(nonzero, 2);
    }
}
