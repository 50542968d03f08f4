//! Model parameters (ω, α, β) and the derived scales Ω, λ, μ.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::ModelError;
use crate::opalg::{Coeff, Rat};

/// The (ω, α, β) triple, stored exactly so the x²-generator path can stay
/// in Q(i). Construction does not validate; call `validate` (the
/// transforms do) to enforce the positivity domain ω − α − β > 0 and
/// ω² − 4αβ > 0.
#[derive(Clone, Debug, PartialEq)]
pub struct SwansonParams {
    pub omega: Rat,
    pub alpha: Rat,
    pub beta: Rat,
}

/// Ω = √(ω²−4αβ); λ = (β−α)/(ω−α−β); μ = Ω^{1/2}/(ω−α−β)^{1/2}
/// (equivalently (ω²−4αβ)^{1/4}/(ω−α−β)^{1/2}).
#[derive(Clone, Copy, Debug)]
pub struct DerivedScales {
    pub omega_eff: f64,
    pub lambda: f64,
    pub mu: f64,
}

impl SwansonParams {
    pub fn new(omega: Rat, alpha: Rat, beta: Rat) -> Self {
        SwansonParams { omega, alpha, beta }
    }

    /// Exact rationals from integer pairs; handy for tests.
    pub fn from_ints(omega: (i64, i64), alpha: (i64, i64), beta: (i64, i64)) -> Self {
        use crate::opalg::rat;
        Self::new(
            rat(omega.0, omega.1),
            rat(alpha.0, alpha.1),
            rat(beta.0, beta.1),
        )
    }

    pub fn omega_f64(&self) -> f64 {
        self.omega.to_f64().unwrap_or(f64::NAN)
    }

    pub fn alpha_f64(&self) -> f64 {
        self.alpha.to_f64().unwrap_or(f64::NAN)
    }

    pub fn beta_f64(&self) -> f64 {
        self.beta.to_f64().unwrap_or(f64::NAN)
    }

    /// ω − α − β, exact.
    pub fn gap(&self) -> Rat {
        &self.omega - &self.alpha - &self.beta
    }

    /// ω² − 4αβ, exact.
    pub fn omega_eff_sq(&self) -> Rat {
        &self.omega * &self.omega - Rat::from_integer(4.into()) * &self.alpha * &self.beta
    }

    /// Enforce the positivity domain required by the transforms.
    pub fn validate(&self) -> Result<(), ModelError> {
        if !self.gap().is_positive() {
            return Err(ModelError::Domain(format!(
                "omega - alpha - beta = {} must be positive",
                self.gap()
            )));
        }
        if !self.omega_eff_sq().is_positive() {
            return Err(ModelError::Domain(format!(
                "omega^2 - 4 alpha beta = {} must be positive",
                self.omega_eff_sq()
            )));
        }
        Ok(())
    }

    /// λ = (β−α)/(ω−α−β), exact (the x²-generator strength).
    pub fn lambda_exact(&self) -> Result<Rat, ModelError> {
        let gap = self.gap();
        if gap.is_zero() {
            return Err(ModelError::Domain(
                "omega - alpha - beta vanishes; lambda undefined".into(),
            ));
        }
        Ok((&self.beta - &self.alpha) / gap)
    }

    /// λ as an exact algebra coefficient.
    pub fn lambda_coeff(&self) -> Result<Coeff, ModelError> {
        Ok(Coeff::from_rat(self.lambda_exact()?))
    }

    pub fn scales(&self) -> Result<DerivedScales, ModelError> {
        self.validate()?;
        let gap = self.gap().to_f64().unwrap_or(f64::NAN);
        let om2 = self.omega_eff_sq().to_f64().unwrap_or(f64::NAN);
        let omega_eff = om2.sqrt();
        let lambda = self.lambda_exact()?.to_f64().unwrap_or(f64::NAN);
        let mu = om2.powf(0.25) / gap.sqrt();
        let scales = DerivedScales {
            omega_eff,
            lambda,
            mu,
        };
        // Gaussian decay of the eigenfunctions; inside the positivity
        // domain λ + μ² = (β − α + Ω)/(ω−α−β) is automatically positive.
        if scales.lambda + scales.mu * scales.mu <= 0.0 {
            return Err(ModelError::NonNormalizable(
                scales.lambda + scales.mu * scales.mu,
            ));
        }
        Ok(scales)
    }
}

impl DerivedScales {
    /// `{"omega_eff":..,"lambda":..,"mu":..}` with 17-significant-digit floats.
    pub fn to_json(&self) -> String {
        use crate::fock::report::fmt_f64;
        format!(
            "{{\"omega_eff\":{},\"lambda\":{},\"mu\":{}}}",
            fmt_f64(self.omega_eff),
            fmt_f64(self.lambda),
            fmt_f64(self.mu)
        )
    }
}
