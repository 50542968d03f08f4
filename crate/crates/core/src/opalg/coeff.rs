//! Exact coefficient ring Q(i, √2).
//!
//! Commutation steps inject factors of i and ladder/position conversion
//! injects factors of √2, so the smallest field closed under both is
//! Q(i, √2).  An element is stored as four arbitrary-precision rationals
//! (r0, r1, r2, r3) representing r0 + r1·i + r2·√2 + r3·i√2, each kept in
//! lowest terms with positive denominator (`Ratio` maintains that).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Arbitrary-precision rational.
pub type Rat = Ratio<BigInt>;

/// Rational from an integer pair, `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

/// r0 + r1·i + r2·√2 + r3·i√2 with rational r's.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Coeff {
    parts: [Rat; 4],
}

impl Coeff {
    pub fn new(r0: Rat, r1: Rat, r2: Rat, r3: Rat) -> Self {
        Coeff {
            parts: [r0, r1, r2, r3],
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Coeff::from_rat(Rat::one())
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        Coeff::new(Rat::zero(), Rat::one(), Rat::zero(), Rat::zero())
    }

    /// √2.
    pub fn sqrt2() -> Self {
        Coeff::new(Rat::zero(), Rat::zero(), Rat::one(), Rat::zero())
    }

    pub fn from_rat(r: Rat) -> Self {
        Coeff::new(r, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::from_rat(rat(n, 1))
    }

    /// n/d as an exact rational coefficient.
    pub fn rational(n: i64, d: i64) -> Self {
        Coeff::from_rat(rat(n, d))
    }

    /// (n/d)·i.
    pub fn rational_i(n: i64, d: i64) -> Self {
        Coeff::new(Rat::zero(), rat(n, d), Rat::zero(), Rat::zero())
    }

    pub fn parts(&self) -> &[Rat; 4] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.parts[0].is_one() && self.parts[1..].iter().all(Rat::is_zero)
    }

    /// True when the i and i√2 components vanish.
    pub fn is_real(&self) -> bool {
        self.parts[1].is_zero() && self.parts[3].is_zero()
    }

    /// True when only the plain rational component is present.
    pub fn is_rational(&self) -> bool {
        self.parts[1].is_zero() && self.parts[2].is_zero() && self.parts[3].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.parts[0])
        } else {
            None
        }
    }

    /// Complex conjugate: i ↦ −i.
    pub fn conj(&self) -> Self {
        Coeff::new(
            self.parts[0].clone(),
            -self.parts[1].clone(),
            self.parts[2].clone(),
            -self.parts[3].clone(),
        )
    }

    /// Multiplication by i without a full product.
    pub fn times_i(&self) -> Self {
        Coeff::new(
            -self.parts[1].clone(),
            self.parts[0].clone(),
            -self.parts[3].clone(),
            self.parts[2].clone(),
        )
    }

    /// Exact multiplicative inverse.
    ///
    /// z·z̄ clears i, leaving n0 + n2√2; the √2-conjugate then clears √2.
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let zbar = self.conj();
        let n = self.clone() * zbar.clone();
        debug_assert!(n.parts[1].is_zero() && n.parts[3].is_zero());
        let (n0, n2) = (n.parts[0].clone(), n.parts[2].clone());
        let den = &n0 * &n0 - Rat::from_integer(BigInt::from(2)) * &n2 * &n2;
        debug_assert!(!den.is_zero());
        let scale = den.recip();
        let n_conj = Coeff::new(n0 * &scale, Rat::zero(), -(n2 * &scale), Rat::zero());
        Ok(zbar * n_conj)
    }

    /// Scale by an exact rational.
    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = self.clone();
        for p in out.parts.iter_mut() {
            *p = &*p * r;
        }
        out
    }

    /// (re, im) in double precision: (r0 + r2√2, r1 + r3√2).
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let s = std::f64::consts::SQRT_2;
        let f = |r: &Rat| -> f64 {
            let n = r.numer();
            let d = r.denom();
            rat_to_f64(n, d)
        };
        (
            f(&self.parts[0]) + s * f(&self.parts[2]),
            f(&self.parts[1]) + s * f(&self.parts[3]),
        )
    }
}

fn rat_to_f64(n: &BigInt, d: &BigInt) -> f64 {
    // exact for the small rationals that occur here; falls back to a
    // scaled division when the parts exceed f64 range
    let nf = bigint_to_f64(n);
    let df = bigint_to_f64(d);
    if nf.is_finite() && df.is_finite() && df != 0.0 {
        nf / df
    } else {
        let r = Ratio::new(n.clone(), d.clone());
        let scaled = r.to_integer();
        bigint_to_f64(&scaled)
    }
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        let mut out = self;
        for (a, b) in out.parts.iter_mut().zip(rhs.parts) {
            *a = &*a + b;
        }
        out
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, rhs: Coeff) -> Coeff {
        self + (-rhs)
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        let mut out = self;
        for a in out.parts.iter_mut() {
            *a = -a.clone();
        }
        out
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        let a = &self.parts;
        let b = &rhs.parts;
        let two = Rat::from_integer(BigInt::from(2));
        let c0 = &a[0] * &b[0] - &a[1] * &b[1] + &two * (&a[2] * &b[2] - &a[3] * &b[3]);
        let c1 = &a[0] * &b[1] + &a[1] * &b[0] + &two * (&a[2] * &b[3] + &a[3] * &b[2]);
        let c2 = &a[0] * &b[2] + &a[2] * &b[0] - (&a[1] * &b[3] + &a[3] * &b[1]);
        let c3 = &a[0] * &b[3] + &a[3] * &b[0] + &a[1] * &b[2] + &a[2] * &b[1];
        Coeff::new(c0, c1, c2, c3)
    }
}

impl Mul<&Coeff> for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        self.clone() * rhs.clone()
    }
}

fn fmt_rat(r: &Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

impl fmt::Display for Coeff {
    /// `r0 [' + ' r1'i'] [' + ' r2's2'] [' + ' r3'is2']`, each r as `num/den`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rat(&self.parts[0], f)?;
        const SUFFIX: [&str; 4] = ["", "i", "s2", "is2"];
        for k in 1..4 {
            if !self.parts[k].is_zero() {
                write!(f, " + ")?;
                fmt_rat(&self.parts[k], f)?;
                write!(f, "{}", SUFFIX[k])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coeff({self})")
    }
}

fn parse_rat(s: &str) -> Result<Rat, AlgebraError> {
    let bad = || AlgebraError::Parse(format!("invalid rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    if d.is_negative() {
        return Ok(Ratio::new(-n, -d));
    }
    Ok(Ratio::new(n, d))
}

impl std::str::FromStr for Coeff {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        let mut last_slot: i32 = -1;
        for piece in s.split(" + ") {
            let piece = piece.trim();
            let (slot, body) = if let Some(b) = piece.strip_suffix("is2") {
                (3, b)
            } else if let Some(b) = piece.strip_suffix("s2") {
                (2, b)
            } else if let Some(b) = piece.strip_suffix('i') {
                (1, b)
            } else {
                (0, piece)
            };
            if slot as i32 <= last_slot {
                return Err(AlgebraError::Parse(format!(
                    "coefficient components out of order in `{s}`"
                )));
            }
            last_slot = slot as i32;
            parts[slot] = parse_rat(body)?;
        }
        let [r0, r1, r2, r3] = parts;
        Ok(Coeff::new(r0, r1, r2, r3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_axioms() {
        assert_eq!(Coeff::i() * Coeff::i(), Coeff::from_int(-1));
        assert_eq!(Coeff::sqrt2() * Coeff::sqrt2(), Coeff::from_int(2));
        let is2 = Coeff::i() * Coeff::sqrt2();
        assert_eq!(is2.clone() * is2, Coeff::from_int(-2));
        assert_eq!(Coeff::i() * Coeff::sqrt2(), Coeff::sqrt2() * Coeff::i());
    }

    #[test]
    fn inverse_roundtrip() {
        let samples = [
            Coeff::rational(3, 7),
            Coeff::i(),
            Coeff::sqrt2(),
            Coeff::new(rat(1, 2), rat(-3, 4), rat(5, 6), rat(7, 8)),
            Coeff::new(rat(0, 1), rat(0, 1), rat(2, 3), rat(0, 1)),
        ];
        for z in samples {
            let w = z.inv().unwrap();
            assert_eq!(z * w, Coeff::one());
        }
        assert!(Coeff::zero().inv().is_err());
    }

    #[test]
    fn conj_involution_and_times_i() {
        let z = Coeff::new(rat(1, 2), rat(3, 4), rat(-5, 6), rat(7, 8));
        assert_eq!(z.conj().conj(), z);
        assert_eq!(z.times_i(), z.clone() * Coeff::i());
    }

    #[test]
    fn display_parse_roundtrip() {
        let samples = [
            Coeff::zero(),
            Coeff::one(),
            Coeff::rational(-4, 3),
            Coeff::new(rat(1, 2), rat(-1, 3), rat(0, 1), rat(2, 5)),
            Coeff::new(rat(0, 1), rat(1, 1), rat(1, 1), rat(1, 1)),
        ];
        for z in samples {
            let s = z.to_string();
            let back: Coeff = s.parse().unwrap();
            assert_eq!(back, z, "round trip failed for `{s}`");
        }
        assert_eq!(Coeff::zero().to_string(), "0/1");
        assert_eq!(
            Coeff::new(rat(0, 1), rat(1, 2), rat(0, 1), rat(0, 1)).to_string(),
            "0/1 + 1/2i"
        );
    }

    #[test]
    fn f64_parts() {
        let z = Coeff::new(rat(1, 2), rat(1, 4), rat(1, 1), rat(-2, 1));
        let (re, im) = z.to_f64_pair();
        assert!((re - (0.5 + std::f64::consts::SQRT_2)).abs() < 1e-15);
        assert!((im - (0.25 - 2.0 * std::f64::consts::SQRT_2)).abs() < 1e-15);
    }
}
