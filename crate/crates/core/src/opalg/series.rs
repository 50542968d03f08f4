//! Formal power series in the coupling g with operator coefficients and a
//! hard truncation order.
//!
//! All binary operations require matching bases; truncation propagates as
//! min(R₁, R₂).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::One;

use super::coeff::{Coeff, Rat};
use super::poly::{Basis, OperatorPoly};
use crate::error::AlgebraError;

#[derive(Clone, PartialEq)]
pub struct GradedSeries {
    basis: Basis,
    cutoff: u32,
    terms: BTreeMap<u32, OperatorPoly>,
}

impl GradedSeries {
    pub fn zero(basis: Basis, cutoff: u32) -> Self {
        GradedSeries {
            basis,
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    /// A single polynomial placed at the given power of g.
    pub fn from_order(order: u32, poly: OperatorPoly, cutoff: u32) -> Self {
        let mut s = Self::zero(poly.basis(), cutoff);
        s.set_order(order, poly);
        s
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest retained order with a nonzero term.
    pub fn min_order(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn set_order(&mut self, order: u32, poly: OperatorPoly) {
        assert_eq!(poly.basis(), self.basis, "basis mismatch in set_order");
        if order <= self.cutoff && !poly.is_zero() {
            self.terms.insert(order, poly);
        }
    }

    /// Term at a given order (zero polynomial when absent).
    pub fn order(&self, order: u32) -> OperatorPoly {
        self.terms
            .get(&order)
            .cloned()
            .unwrap_or_else(|| OperatorPoly::zero(self.basis))
    }

    pub fn orders(&self) -> impl Iterator<Item = (&u32, &OperatorPoly)> {
        self.terms.iter()
    }

    pub fn truncate(&self, cutoff: u32) -> Self {
        let mut out = Self::zero(self.basis, cutoff);
        for (&r, p) in &self.terms {
            if r <= cutoff {
                out.terms.insert(r, p.clone());
            }
        }
        out
    }

    fn check_basis(&self, rhs: &Self) -> Result<(), AlgebraError> {
        if self.basis != rhs.basis {
            Err(AlgebraError::BasisMismatch(
                self.basis.name(),
                rhs.basis.name(),
            ))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_basis(rhs)?;
        let cutoff = self.cutoff.min(rhs.cutoff);
        let mut out = Self::zero(self.basis, cutoff);
        for (&r, p) in self.terms.iter().chain(rhs.terms.iter()) {
            if r > cutoff {
                continue;
            }
            let sum = out.order(r).try_add(p)?;
            if sum.is_zero() {
                out.terms.remove(&r);
            } else {
                out.terms.insert(r, sum);
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&rhs.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero(self.basis, self.cutoff);
        for (&r, p) in &self.terms {
            let s = p.scale(c);
            if !s.is_zero() {
                out.terms.insert(r, s);
            }
        }
        out
    }

    pub fn scale_rat(&self, q: &Rat) -> Self {
        self.scale(&Coeff::from_rat(q.clone()))
    }

    /// Graded product: (fg)_r = Σ_s f_s g_{r−s}, truncated.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_basis(rhs)?;
        let cutoff = self.cutoff.min(rhs.cutoff);
        let mut out = Self::zero(self.basis, cutoff);
        for (&r1, p1) in &self.terms {
            for (&r2, p2) in &rhs.terms {
                let r = r1 + r2;
                if r > cutoff {
                    continue;
                }
                let prod = p1.try_mul(p2)?;
                let sum = out.order(r).try_add(&prod)?;
                if sum.is_zero() {
                    out.terms.remove(&r);
                } else {
                    out.terms.insert(r, sum);
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.try_mul(rhs)?.try_sub(&rhs.try_mul(self)?)
    }

    /// Evaluate at an exact coupling value: Σ g^r · poly_r.
    pub fn eval_at(&self, g: &Rat) -> OperatorPoly {
        let mut out = OperatorPoly::zero(self.basis);
        let mut gpow = Rat::one();
        let mut last = 0u32;
        for (&r, p) in &self.terms {
            for _ in last..r {
                gpow = &gpow * g;
            }
            last = r;
            out = out.try_add(&p.scale_rat(&gpow)).unwrap();
        }
        out
    }

    /// Substitute the series X, P for the canonical letters of a
    /// position-basis polynomial, preserving factor order:
    /// q(x,p) = Σ c·x^m p^n ↦ Σ c·X^m·P^n (graded products).
    pub fn substitute_into(
        poly: &OperatorPoly,
        x_series: &GradedSeries,
        p_series: &GradedSeries,
    ) -> Result<GradedSeries, AlgebraError> {
        x_series.check_basis(p_series)?;
        if poly.basis() != Basis::Position {
            return Err(AlgebraError::UnsupportedBasis);
        }
        let cutoff = x_series.cutoff.min(p_series.cutoff);
        let one = GradedSeries::from_order(0, OperatorPoly::one(x_series.basis), cutoff);
        let mut x_pows: Vec<GradedSeries> = vec![one.clone()];
        let mut p_pows: Vec<GradedSeries> = vec![one];
        let mut out = GradedSeries::zero(x_series.basis, cutoff);
        for (mono, c) in poly.terms() {
            while x_pows.len() <= mono.m as usize {
                let next = x_pows.last().unwrap().try_mul(x_series)?;
                x_pows.push(next);
            }
            while p_pows.len() <= mono.n as usize {
                let next = p_pows.last().unwrap().try_mul(p_series)?;
                p_pows.push(next);
            }
            let word = x_pows[mono.m as usize].try_mul(&p_pows[mono.n as usize])?;
            out = out.try_add(&word.scale(c))?;
        }
        Ok(out)
    }
}

/// Graded adjoint series Σ_k ad_G^k(target)/k!, exact per retained order.
///
/// The generator must have minimal g-grade ≥ 1 so each ad application
/// raises the order and the series terminates at the cutoff.
pub fn bch_graded(
    generator: &GradedSeries,
    target: &GradedSeries,
) -> Result<GradedSeries, AlgebraError> {
    if generator.min_order() == Some(0) {
        return Err(AlgebraError::GradingError);
    }
    let cutoff = generator.cutoff.min(target.cutoff);
    let mut sum = target.truncate(cutoff);
    let mut term = sum.clone();
    let mut k: u64 = 0;
    loop {
        k += 1;
        term = generator
            .commutator(&term)?
            .scale_rat(&Ratio::new(BigInt::one(), BigInt::from(k)));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = sum.try_add(&term)?;
        if k as u32 > cutoff {
            // min grade ≥ 1 guarantees this is unreachable, kept as a guard
            return Ok(sum);
        }
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (cutoff {})", self.cutoff);
        }
        for (i, (r, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "g^{r}: {p}")?;
        }
        write!(f, "\n(cutoff {})", self.cutoff)
    }
}

impl fmt::Debug for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
