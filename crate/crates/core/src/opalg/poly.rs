//! Noncommutative polynomials in one canonical pair.
//!
//! Position-basis polynomials are kept standard-ordered (every x to the
//! left of every p, `[x,p] = i`); ladder-basis polynomials are kept
//! normal-ordered (every a† to the left of every a, `[a,a†] = 1`).
//! Products are reduced back to canonical order on the fly, so equal
//! operators always have identical term maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::One;

use super::coeff::{Coeff, Rat};
use crate::error::AlgebraError;

/// Which canonical pair a polynomial is written in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    /// x^m p^n, standard order.
    Position,
    /// a†^m a^n, normal order.
    Ladder,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Position => "xp",
            Basis::Ladder => "ladder",
        }
    }
}

/// Ordered monomial: x^m p^n (position) or a†^m a^n (ladder).
///
/// Ordered by total degree, then by the left-factor power m, so that
/// reverse iteration yields the canonical print order (descending total
/// degree, then descending m).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Monomial {
    pub m: u32,
    pub n: u32,
}

impl Monomial {
    pub fn new(m: u32, n: u32) -> Self {
        Monomial { m, n }
    }

    pub fn degree(&self) -> u32 {
        self.m + self.n
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.m).cmp(&(other.degree(), other.m))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical-ordered noncommutative polynomial with coefficients in Q(i,√2).
#[derive(Clone, PartialEq)]
pub struct OperatorPoly {
    basis: Basis,
    terms: BTreeMap<Monomial, Coeff>,
}

impl OperatorPoly {
    pub fn zero(basis: Basis) -> Self {
        OperatorPoly {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(basis: Basis, c: Coeff) -> Self {
        let mut p = Self::zero(basis);
        p.add_term(Monomial::new(0, 0), c);
        p
    }

    pub fn one(basis: Basis) -> Self {
        Self::constant(basis, Coeff::one())
    }

    /// c · x^m p^n (or c · a†^m a^n).
    pub fn monomial(basis: Basis, m: u32, n: u32, c: Coeff) -> Self {
        let mut p = Self::zero(basis);
        p.add_term(Monomial::new(m, n), c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(Basis::Position, 1, 0, Coeff::one())
    }

    pub fn p() -> Self {
        Self::monomial(Basis::Position, 0, 1, Coeff::one())
    }

    pub fn a() -> Self {
        Self::monomial(Basis::Ladder, 0, 1, Coeff::one())
    }

    pub fn adag() -> Self {
        Self::monomial(Basis::Ladder, 1, 0, Coeff::one())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: u32, n: u32) -> Coeff {
        self.terms
            .get(&Monomial::new(m, n))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    /// Max total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Some(c) when the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.degree() {
            None => Some(Coeff::zero()),
            Some(0) => Some(self.coeff(0, 0)),
            Some(_) => None,
        }
    }

    /// Coefficient of the identity monomial.
    pub fn constant_part(&self) -> Coeff {
        self.coeff(0, 0)
    }

    /// Drop the identity component, returning (non-constant part, constant).
    pub fn split_constant(&self) -> (OperatorPoly, Coeff) {
        let c = self.constant_part();
        let mut rest = self.clone();
        rest.terms.remove(&Monomial::new(0, 0));
        (rest, c)
    }

    fn add_term(&mut self, mono: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero(self.basis);
        for (mono, v) in &self.terms {
            out.add_term(*mono, v * c);
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        let mut out = Self::zero(self.basis);
        for (mono, v) in &self.terms {
            out.add_term(*mono, v.scale(r));
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
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.add_term(*mono, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&rhs.clone().neg())
    }

    /// Product, reduced to canonical order.
    ///
    /// The cross factor is reordered with the closed form of the repeated
    /// commutation step (p·x = x·p − i, resp. a·a† = a†·a + 1):
    ///   p^n x^m = Σ_k k!·C(n,k)·C(m,k)·(−i)^k x^{m−k} p^{n−k}
    ///   a^n a†^m = Σ_k k!·C(n,k)·C(m,k) a†^{m−k} a^{n−k}
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_basis(rhs)?;
        let mut out = Self::zero(self.basis);
        for (lm, lc) in &self.terms {
            for (rm, rc) in &rhs.terms {
                let c = lc * rc;
                accumulate_cross(&mut out, self.basis, *lm, *rm, c);
            }
        }
        Ok(out)
    }

    /// [self, rhs] = self·rhs − rhs·self.
    pub fn commutator(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self.try_mul(rhs)?.try_sub(&rhs.try_mul(self)?)?)
    }

    /// Hermitian adjoint: factor order reversed, coefficients conjugated,
    /// result re-canonicalized.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.basis);
        for (mono, c) in &self.terms {
            let cc = c.conj();
            match self.basis {
                Basis::Position => {
                    // (x^m p^n)† = p^n x^m, reorder
                    for (k, w) in reorder_weights(mono.n, mono.m) {
                        let mut phase = cc.clone();
                        for _ in 0..k {
                            phase = -phase.times_i();
                        }
                        out.add_term(
                            Monomial::new(mono.m - k, mono.n - k),
                            phase.scale(&Rat::from_integer(w)),
                        );
                    }
                }
                Basis::Ladder => {
                    // (a†^m a^n)† = a†^n a^m, already normal ordered
                    out.add_term(Monomial::new(mono.n, mono.m), cc);
                }
            }
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        self.adjoint() == *self
    }

    /// Spatial reflection x → −x, p → −p.
    pub fn parity(&self) -> Result<Self, AlgebraError> {
        if self.basis != Basis::Position {
            return Err(AlgebraError::UnsupportedBasis);
        }
        let mut out = Self::zero(self.basis);
        for (mono, c) in &self.terms {
            let c = if mono.degree() % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            };
            out.add_term(*mono, c);
        }
        Ok(out)
    }

    /// Antilinear time reversal: coefficients conjugated, p → −p.
    pub fn time_reversal(&self) -> Result<Self, AlgebraError> {
        if self.basis != Basis::Position {
            return Err(AlgebraError::UnsupportedBasis);
        }
        let mut out = Self::zero(self.basis);
        for (mono, c) in &self.terms {
            let mut c = c.conj();
            if mono.n % 2 == 1 {
                c = -c;
            }
            out.add_term(*mono, c);
        }
        Ok(out)
    }

    /// Combined PT action: x → −x, coefficients conjugated.
    pub fn pt_transform(&self) -> Result<Self, AlgebraError> {
        self.parity()?.time_reversal()
    }

    pub fn is_pt_symmetric(&self) -> bool {
        match self.pt_transform() {
            Ok(t) => t == *self,
            Err(_) => false,
        }
    }

    /// Rewrite in the ladder basis: x = (a+a†)·√2/2, p = (a−a†)·(−i√2/2).
    pub fn to_ladder(&self) -> Self {
        if self.basis == Basis::Ladder {
            return self.clone();
        }
        let half_sqrt2 = Coeff::sqrt2().scale(&Ratio::new(BigInt::one(), BigInt::from(2)));
        let x_sub = OperatorPoly::adag()
            .try_add(&OperatorPoly::a())
            .unwrap()
            .scale(&half_sqrt2);
        let p_sub = OperatorPoly::adag()
            .try_sub(&OperatorPoly::a())
            .unwrap()
            .scale(&half_sqrt2.times_i());
        self.substitute(Basis::Ladder, &x_sub, &p_sub)
    }

    /// Rewrite in the position basis: a = (x+ip)·√2/2, a† = (x−ip)·√2/2.
    pub fn to_position(&self) -> Self {
        if self.basis == Basis::Position {
            return self.clone();
        }
        let half_sqrt2 = Coeff::sqrt2().scale(&Ratio::new(BigInt::one(), BigInt::from(2)));
        let ip = OperatorPoly::p().scale(&Coeff::i());
        let adag_sub = OperatorPoly::x().try_sub(&ip).unwrap().scale(&half_sqrt2);
        let a_sub = OperatorPoly::x().try_add(&ip).unwrap().scale(&half_sqrt2);
        self.substitute(Basis::Position, &adag_sub, &a_sub)
    }

    /// Replace the left and right generators by the given polynomials,
    /// preserving factor order within each monomial.
    fn substitute(&self, basis: Basis, left: &OperatorPoly, right: &OperatorPoly) -> Self {
        let mut out = OperatorPoly::zero(basis);
        let mut left_pows: Vec<OperatorPoly> = vec![OperatorPoly::one(basis)];
        let mut right_pows: Vec<OperatorPoly> = vec![OperatorPoly::one(basis)];
        for (mono, c) in &self.terms {
            while left_pows.len() <= mono.m as usize {
                let next = left_pows.last().unwrap().try_mul(left).unwrap();
                left_pows.push(next);
            }
            while right_pows.len() <= mono.n as usize {
                let next = right_pows.last().unwrap().try_mul(right).unwrap();
                right_pows.push(next);
            }
            let word = left_pows[mono.m as usize]
                .try_mul(&right_pows[mono.n as usize])
                .unwrap();
            out = out.try_add(&word.scale(c)).unwrap();
        }
        out
    }

    /// Evaluate every coefficient to double precision (re, im), keyed by
    /// the canonical monomials. Used by the numeric layer.
    pub fn coeffs_f64(&self) -> Vec<(Monomial, (f64, f64))> {
        self.terms
            .iter()
            .map(|(m, c)| (*m, c.to_f64_pair()))
            .collect()
    }
}

/// Reordering weights: p^n x^m = Σ_k w_k (−i)^k x^{m−k} p^{n−k} with
/// w_k = k!·C(n,k)·C(m,k) (same w for the ladder case, phase +1).
pub(crate) fn reorder_weights(n: u32, m: u32) -> Vec<(u32, BigInt)> {
    let kmax = n.min(m);
    let mut out = Vec::with_capacity(kmax as usize + 1);
    // w_0 = 1; w_{k+1}/w_k = (n-k)(m-k)/(k+1) · (k+1) = (n-k)(m-k) / ... computed directly
    let mut w = BigInt::one();
    out.push((0, w.clone()));
    for k in 0..kmax {
        // w_{k+1} = w_k · (n-k)(m-k)/(k+1)  …times (k+1)! growth folded in:
        // k!C(n,k)C(m,k) → (k+1)!C(n,k+1)C(m,k+1) multiplies by (n-k)(m-k)/(k+1)
        w = w * BigInt::from(n - k) * BigInt::from(m - k) / BigInt::from(k + 1);
        out.push((k + 1, w.clone()));
    }
    out
}

fn accumulate_cross(out: &mut OperatorPoly, basis: Basis, lm: Monomial, rm: Monomial, c: Coeff) {
    for (k, w) in reorder_weights(lm.n, rm.m) {
        let mut term = c.scale(&Rat::from_integer(w));
        if basis == Basis::Position {
            // each swap contributes a factor −i
            for _ in 0..k {
                term = -term.times_i();
            }
        }
        out.add_term(
            Monomial::new(lm.m + rm.m - k, lm.n + rm.n - k),
            term,
        );
    }
}

impl Add for OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: OperatorPoly) -> OperatorPoly {
        self.try_add(&rhs).expect("basis mismatch in +")
    }
}

impl Sub for OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: OperatorPoly) -> OperatorPoly {
        self.try_sub(&rhs).expect("basis mismatch in -")
    }
}

impl Mul for OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: OperatorPoly) -> OperatorPoly {
        self.try_mul(&rhs).expect("basis mismatch in *")
    }
}

impl Neg for OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        let mut out = OperatorPoly::zero(self.basis);
        for (mono, c) in self.terms {
            out.terms.insert(mono, -c);
        }
        out
    }
}

impl fmt::Display for OperatorPoly {
    /// `poly := term (' + ' term)*`, `term := '(' coeff ')' ['*' mono]`,
    /// terms in descending total degree then descending left power.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (lname, rname) = match self.basis {
            Basis::Position => ("x", "p"),
            Basis::Ladder => ("ad", "a"),
        };
        for (i, (mono, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if mono.degree() > 0 {
                write!(f, "*")?;
                if mono.m > 0 {
                    write!(f, "{lname}^{}", mono.m)?;
                }
                if mono.n > 0 {
                    write!(f, "{rname}^{}", mono.n)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.basis.name(), self)
    }
}
