//! Weyl (fully symmetric) ordering and its inverse decomposition.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Ratio;

use super::coeff::Coeff;
use super::poly::{Basis, Monomial, OperatorPoly};
use crate::error::AlgebraError;

/// S_{m,n}: the average of all (m+n)!/(m!·n!) distinct interleavings of
/// m x-factors and n p-factors, canonicalized. Hermitian, parity
/// eigenvalue (−1)^{m+n}.
pub fn weyl_sym(m: u32, n: u32) -> OperatorPoly {
    let total = m + n;
    if total == 0 {
        return OperatorPoly::one(Basis::Position);
    }
    let x = OperatorPoly::x();
    let p = OperatorPoly::p();
    let mut sum = OperatorPoly::zero(Basis::Position);
    let mut count: u64 = 0;
    // every subset of positions for the x factors gives one interleaving
    let mut positions: Vec<u32> = (0..m).collect();
    loop {
        let mut word = OperatorPoly::one(Basis::Position);
        for slot in 0..total {
            let letter = if positions.contains(&slot) { &x } else { &p };
            word = word.try_mul(letter).unwrap();
        }
        sum = sum.try_add(&word).unwrap();
        count += 1;
        if !next_combination(&mut positions, total) {
            break;
        }
    }
    sum.scale_rat(&Ratio::new(BigInt::from(1), BigInt::from(count)))
}

/// Advance a sorted index combination; false when exhausted. Handles the
/// empty combination (m = 0) as a single arrangement.
fn next_combination(idx: &mut [u32], total: u32) -> bool {
    let k = idx.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] + 1 <= total - (k - i) as u32 {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Expand a position-basis polynomial over the Weyl basis:
/// poly = Σ c_{m,n} S_{m,n}, returning the coefficient map.
///
/// Peels from the top total degree down; S_{m,n} contributes the
/// canonical monomial x^m p^n with coefficient exactly 1 plus strictly
/// lower-degree terms, so the expansion is unique.
pub fn weyl_decompose(poly: &OperatorPoly) -> Result<BTreeMap<Monomial, Coeff>, AlgebraError> {
    if poly.basis() != Basis::Position {
        return Err(AlgebraError::UnsupportedBasis);
    }
    let mut rest = poly.clone();
    let mut out = BTreeMap::new();
    while let Some(d) = rest.degree() {
        if d == 0 {
            let c = rest.constant_part();
            if !c.is_zero() {
                out.insert(Monomial::new(0, 0), c);
            }
            break;
        }
        let top: Vec<(Monomial, Coeff)> = rest
            .terms()
            .filter(|(mono, _)| mono.degree() == d)
            .map(|(mono, c)| (*mono, c.clone()))
            .collect();
        for (mono, c) in top {
            rest = rest.try_sub(&weyl_sym(mono.m, mono.n).scale(&c))?;
            out.insert(mono, c);
        }
    }
    Ok(out)
}

/// Rebuild a polynomial from Weyl coefficients (inverse of `weyl_decompose`).
pub fn weyl_compose(coeffs: &BTreeMap<Monomial, Coeff>) -> OperatorPoly {
    let mut out = OperatorPoly::zero(Basis::Position);
    for (mono, c) in coeffs {
        out = out.try_add(&weyl_sym(mono.m, mono.n).scale(c)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::coeff::rat;

    #[test]
    fn weyl_1_1() {
        // (xp + px)/2 = xp − i/2
        let got = weyl_sym(1, 1);
        let want = OperatorPoly::monomial(Basis::Position, 1, 1, Coeff::one())
            + OperatorPoly::constant(Basis::Position, Coeff::rational_i(-1, 2));
        assert_eq!(got, want);
    }

    #[test]
    fn weyl_2_2() {
        // x²p² − 2i·xp − ½
        let got = weyl_sym(2, 2);
        let want = OperatorPoly::monomial(Basis::Position, 2, 2, Coeff::one())
            + OperatorPoly::monomial(Basis::Position, 1, 1, Coeff::rational_i(-2, 1))
            + OperatorPoly::constant(Basis::Position, Coeff::rational(-1, 2));
        assert_eq!(got, want);
    }

    #[test]
    fn weyl_2_2_vs_three_term_form() {
        // S_{2,2} − (x²p² + xp²x + p²x²)/3 = 1/6
        let x = OperatorPoly::x();
        let p = OperatorPoly::p();
        let x2p2 = x.clone() * x.clone() * p.clone() * p.clone();
        let xp2x = x.clone() * p.clone() * p.clone() * x.clone();
        let p2x2 = p.clone() * p.clone() * x.clone() * x.clone();
        let three_term = (x2p2 + xp2x + p2x2).scale_rat(&rat(1, 3));
        let diff = weyl_sym(2, 2) - three_term;
        assert_eq!(
            diff,
            OperatorPoly::constant(Basis::Position, Coeff::rational(1, 6))
        );
    }

    #[test]
    fn hermitian_and_parity() {
        for m in 0..=4u32 {
            for n in 0..=(4 - m) {
                let s = weyl_sym(m, n);
                assert!(s.is_hermitian(), "S_{{{m},{n}}} not Hermitian");
                let sign = if (m + n) % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    s.parity().unwrap(),
                    s.scale(&Coeff::from_int(sign)),
                    "S_{{{m},{n}}} parity"
                );
            }
        }
    }

    #[test]
    fn decompose_roundtrip() {
        let poly = OperatorPoly::monomial(Basis::Position, 2, 2, Coeff::rational(3, 2))
            + OperatorPoly::monomial(Basis::Position, 0, 3, Coeff::rational(-4, 3))
            + OperatorPoly::monomial(Basis::Position, 1, 1, Coeff::i())
            + OperatorPoly::constant(Basis::Position, Coeff::rational(5, 7));
        let coeffs = weyl_decompose(&poly).unwrap();
        assert_eq!(weyl_compose(&coeffs), poly);
    }

    #[test]
    fn xpx_is_s21() {
        // xpx reduces to the S_{2,1} symmetrization exactly
        let x = OperatorPoly::x();
        let p = OperatorPoly::p();
        let xpx = x.clone() * p * x;
        assert_eq!(xpx, weyl_sym(2, 1));
    }
}
