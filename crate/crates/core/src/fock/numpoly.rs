//! Canonical-ordered polynomials with double-precision coefficients.
//!
//! The similarity transform generated by the number operator scales ladder
//! monomials by (α/β)^{(m−n)/4}, which leaves Q(i,√2) for general rational
//! parameters, so that path lives here in floating point. The reduction
//! rules mirror the exact layer exactly.

use std::collections::BTreeMap;

use super::{c64, cabs};
use crate::opalg::poly::{reorder_weights, Basis, Monomial};
use crate::opalg::OperatorPoly;

const DROP_EPS: f64 = 0.0;

#[derive(Clone, Debug)]
pub struct NumPoly {
    basis: Basis,
    terms: BTreeMap<Monomial, c64>,
}

impl NumPoly {
    pub fn zero(basis: Basis) -> Self {
        NumPoly {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::monomial(basis, 0, 0, c64::new(1.0, 0.0))
    }

    pub fn monomial(basis: Basis, m: u32, n: u32, c: c64) -> Self {
        let mut p = Self::zero(basis);
        p.add_term(Monomial::new(m, n), c);
        p
    }

    pub fn from_exact(poly: &OperatorPoly) -> Self {
        let mut out = Self::zero(poly.basis());
        for (mono, (re, im)) in poly.coeffs_f64() {
            out.add_term(mono, c64::new(re, im));
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn coeff(&self, m: u32, n: u32) -> c64 {
        self.terms
            .get(&Monomial::new(m, n))
            .copied()
            .unwrap_or(c64::new(0.0, 0.0))
    }

    pub fn terms_vec(&self) -> Vec<(Monomial, c64)> {
        self.terms.iter().map(|(m, c)| (*m, *c)).collect()
    }

    fn add_term(&mut self, mono: Monomial, c: c64) {
        if cabs(c) <= DROP_EPS {
            return;
        }
        let entry = self.terms.entry(mono).or_insert(c64::new(0.0, 0.0));
        *entry += c;
        if cabs(*entry) <= DROP_EPS {
            self.terms.remove(&mono);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.basis, rhs.basis, "basis mismatch");
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.add_term(*mono, *c);
        }
        out
    }

    pub fn scale(&self, s: c64) -> Self {
        let mut out = Self::zero(self.basis);
        for (mono, c) in &self.terms {
            out.add_term(*mono, *c * s);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.basis, rhs.basis, "basis mismatch");
        let mut out = Self::zero(self.basis);
        for (lm, lc) in &self.terms {
            for (rm, rc) in &rhs.terms {
                let c = *lc * *rc;
                for (k, w) in reorder_weights(lm.n, rm.m) {
                    use num_traits::ToPrimitive;
                    let mut t = c * c64::new(w.to_f64().unwrap_or(f64::NAN), 0.0);
                    if self.basis == Basis::Position {
                        for _ in 0..k {
                            t = c64::new(t.im, -t.re); // × (−i)
                        }
                    }
                    out.add_term(Monomial::new(lm.m + rm.m - k, lm.n + rm.n - k), t);
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let conj = |z: c64| c64::new(z.re, -z.im);
        match self.basis {
            Basis::Ladder => {
                let mut out = Self::zero(self.basis);
                for (mono, c) in &self.terms {
                    out.add_term(Monomial::new(mono.n, mono.m), conj(*c));
                }
                out
            }
            Basis::Position => {
                let mut out = Self::zero(self.basis);
                for (mono, c) in &self.terms {
                    let pn = Self::monomial(self.basis, 0, mono.n, conj(*c));
                    let xm = Self::monomial(self.basis, mono.m, 0, c64::new(1.0, 0.0));
                    out = out.add(&pn.mul(&xm));
                }
                out
            }
        }
    }

    /// Largest coefficient deviation from another polynomial.
    pub fn max_coeff_dev(&self, rhs: &Self) -> f64 {
        assert_eq!(self.basis, rhs.basis, "basis mismatch");
        let mut keys: Vec<Monomial> = self.terms.keys().copied().collect();
        for k in rhs.terms.keys() {
            if !keys.contains(k) {
                keys.push(*k);
            }
        }
        keys.iter()
            .map(|k| cabs(self.coeff(k.m, k.n) - rhs.coeff(k.m, k.n)))
            .fold(0.0, f64::max)
    }

    pub fn to_ladder(&self) -> Self {
        if self.basis == Basis::Ladder {
            return self.clone();
        }
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // x = (a + a†)/√2, p = (a − a†)/(i√2) = i(a† − a)/√2
        let x_sub = Self::monomial(Basis::Ladder, 1, 0, c64::new(s, 0.0)).add(&Self::monomial(
            Basis::Ladder,
            0,
            1,
            c64::new(s, 0.0),
        ));
        let p_sub = Self::monomial(Basis::Ladder, 1, 0, c64::new(0.0, s)).add(&Self::monomial(
            Basis::Ladder,
            0,
            1,
            c64::new(0.0, -s),
        ));
        self.substitute(Basis::Ladder, &x_sub, &p_sub)
    }

    pub fn to_position(&self) -> Self {
        if self.basis == Basis::Position {
            return self.clone();
        }
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // a† = (x − ip)/√2, a = (x + ip)/√2
        let adag_sub = Self::monomial(Basis::Position, 1, 0, c64::new(s, 0.0)).add(
            &Self::monomial(Basis::Position, 0, 1, c64::new(0.0, -s)),
        );
        let a_sub = Self::monomial(Basis::Position, 1, 0, c64::new(s, 0.0)).add(&Self::monomial(
            Basis::Position,
            0,
            1,
            c64::new(0.0, s),
        ));
        self.substitute(Basis::Position, &adag_sub, &a_sub)
    }

    fn substitute(&self, basis: Basis, left: &Self, right: &Self) -> Self {
        let mut out = Self::zero(basis);
        let mut lp: Vec<NumPoly> = vec![Self::one(basis)];
        let mut rp: Vec<NumPoly> = vec![Self::one(basis)];
        for (mono, c) in &self.terms {
            while lp.len() <= mono.m as usize {
                let next = lp.last().unwrap().mul(left);
                lp.push(next);
            }
            while rp.len() <= mono.n as usize {
                let next = rp.last().unwrap().mul(right);
                rp.push(next);
            }
            let word = lp[mono.m as usize].mul(&rp[mono.n as usize]);
            out = out.add(&word.scale(*c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_exact_reduction() {
        // p²·x² in both layers
        let exact = OperatorPoly::monomial(Basis::Position, 0, 2, crate::opalg::Coeff::one())
            * OperatorPoly::monomial(Basis::Position, 2, 0, crate::opalg::Coeff::one());
        let num = NumPoly::monomial(Basis::Position, 0, 2, c64::new(1.0, 0.0)).mul(
            &NumPoly::monomial(Basis::Position, 2, 0, c64::new(1.0, 0.0)),
        );
        let dev = num.max_coeff_dev(&NumPoly::from_exact(&exact));
        assert!(dev < 1e-15, "dev {dev}");
    }

    #[test]
    fn conversion_matches_exact() {
        let exact = (OperatorPoly::adag() * OperatorPoly::a())
            .scale(&crate::opalg::Coeff::rational(3, 1));
        let num = NumPoly::from_exact(&exact).to_position();
        let want = NumPoly::from_exact(&exact.to_position());
        assert!(num.max_coeff_dev(&want) < 1e-14);
    }
}
