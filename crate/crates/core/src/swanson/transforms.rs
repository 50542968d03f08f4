//! The two similarity transforms of the model and the x²-metric
//! observables.
//!
//! With ρ = e^{½λx²}, λ = (β−α)/(ω−α−β), the transform ρHρ⁻¹ terminates
//! exactly (ad_{x²} is nilpotent on the quadratic span) and produces
//! ½p²(ω−α−β) + ½x²(ω²−4αβ)/(ω−α−β) − ω/2. The number-operator route
//! S = exp(¼N ln(α/β)) acts by a† ↦ (α/β)^{1/4} a†, a ↦ (α/β)^{−1/4} a and
//! lands on ½p²(ω−2√(αβ)) + ½x²(ω+2√(αβ)) − ω/2; its scale is irrational
//! for general parameters, so that path is numeric.

use faer::complex_native::c64;

use super::params::SwansonParams;
use crate::error::ModelError;
use crate::fock::NumPoly;
use crate::opalg::{bch_terminating, Basis, Coeff, OperatorPoly, DEFAULT_BCH_DEPTH};

/// H = ω a†a + α a² + β a†² in the position basis, exact:
/// ½(ω+α+β)x² + ½(ω−α−β)p² + i(α−β)(xp − i/2) − ω/2.
pub fn hamiltonian(params: &SwansonParams) -> OperatorPoly {
    let ladder = OperatorPoly::monomial(Basis::Ladder, 1, 1, Coeff::from_rat(params.omega.clone()))
        + OperatorPoly::monomial(Basis::Ladder, 0, 2, Coeff::from_rat(params.alpha.clone()))
        + OperatorPoly::monomial(Basis::Ladder, 2, 0, Coeff::from_rat(params.beta.clone()));
    ladder.to_position()
}

/// ½λx², the exact generator of the x²-route similarity transform.
pub fn x2_generator(lambda: &Coeff) -> OperatorPoly {
    OperatorPoly::monomial(
        Basis::Position,
        2,
        0,
        lambda.scale(&crate::opalg::rat(1, 2)),
    )
}

/// ρHρ⁻¹ with ρ = e^{½λx²}: the exact Hermitian counterpart
/// ½p²(ω−α−β) + ½x²(ω²−4αβ)/(ω−α−β) − ω/2.
pub fn hermitian_equiv_x2(params: &SwansonParams) -> Result<OperatorPoly, ModelError> {
    params.validate()?;
    let lambda = params.lambda_coeff()?;
    let h = hamiltonian(params);
    Ok(bch_terminating(&x2_generator(&lambda), &h, DEFAULT_BCH_DEPTH)?)
}

/// The closed form the x²-route must produce (used as its own check).
pub fn hermitian_equiv_x2_expected(params: &SwansonParams) -> OperatorPoly {
    let gap = params.gap();
    let half = crate::opalg::rat(1, 2);
    let p2 = params.omega_eff_sq() / &gap * &half;
    OperatorPoly::monomial(Basis::Position, 0, 2, Coeff::from_rat(&gap * &half))
        + OperatorPoly::monomial(Basis::Position, 2, 0, Coeff::from_rat(p2))
        + OperatorPoly::constant(
            Basis::Position,
            Coeff::from_rat(-params.omega.clone() * half),
        )
}

/// SHS⁻¹ with S = exp(¼N ln(α/β)), via the closed-form adjoint action on
/// ladder monomials (a†^m a^n picks up (α/β)^{(m−n)/4}); numeric because
/// of the quartic root. Requires α > 0 and β > 0.
pub fn hermitian_equiv_n(params: &SwansonParams) -> Result<NumPoly, ModelError> {
    use num_traits::{Signed, ToPrimitive};
    if !params.alpha.is_positive() || !params.beta.is_positive() {
        return Err(ModelError::Domain(format!(
            "number-operator route needs alpha > 0 and beta > 0 (ln(alpha/beta) domain), got alpha = {}, beta = {}",
            params.alpha, params.beta
        )));
    }
    let ladder = OperatorPoly::monomial(Basis::Ladder, 1, 1, Coeff::from_rat(params.omega.clone()))
        + OperatorPoly::monomial(Basis::Ladder, 0, 2, Coeff::from_rat(params.alpha.clone()))
        + OperatorPoly::monomial(Basis::Ladder, 2, 0, Coeff::from_rat(params.beta.clone()));
    let ratio = (params.alpha_f64() / params.beta_f64()).powf(0.25);
    let mut scaled = NumPoly::zero(Basis::Ladder);
    for (mono, c) in NumPoly::from_exact(&ladder).terms_vec() {
        let factor = ratio.powi(mono.m as i32 - mono.n as i32);
        scaled = scaled.add(&NumPoly::monomial(
            Basis::Ladder,
            mono.m,
            mono.n,
            c * c64::new(factor, 0.0),
        ));
    }
    let _ = ToPrimitive::to_f64(&params.alpha); // exactness ends here by construction
    Ok(scaled.to_position())
}

/// The closed form the N-route must reproduce within 1e−12.
pub fn hermitian_equiv_n_expected(params: &SwansonParams) -> NumPoly {
    let om = params.omega_f64();
    let root = (params.alpha_f64() * params.beta_f64()).sqrt();
    NumPoly::monomial(Basis::Position, 0, 2, c64::new(0.5 * (om - 2.0 * root), 0.0))
        .add(&NumPoly::monomial(
            Basis::Position,
            2,
            0,
            c64::new(0.5 * (om + 2.0 * root), 0.0),
        ))
        .add(&NumPoly::monomial(
            Basis::Position,
            0,
            0,
            c64::new(-0.5 * om, 0.0),
        ))
}

/// Observables of the x²-metric theory: X = ρ⁻¹xρ, P = ρ⁻¹pρ with
/// ρ = e^{½λx²}, computed through the terminating adjoint series
/// (generator −½λx²), not hard-coded. X = x; P = p − iλx.
pub fn observables(params: &SwansonParams) -> Result<(OperatorPoly, OperatorPoly), ModelError> {
    let lambda = params.lambda_coeff()?;
    let gen = x2_generator(&lambda).scale(&Coeff::from_int(-1));
    let x_obs = bch_terminating(&gen, &OperatorPoly::x(), DEFAULT_BCH_DEPTH)?;
    let p_obs = bch_terminating(&gen, &OperatorPoly::p(), DEFAULT_BCH_DEPTH)?;
    Ok((x_obs, p_obs))
}

/// Residual of the η-pseudo-Hermiticity condition for η = e^{λx²}:
/// returns e^{λx²}·op·e^{−λx²} − op†, the zero polynomial exactly when
/// `op` is an observable of the λ-metric theory.
pub fn pseudo_hermiticity_check(
    op: &OperatorPoly,
    lambda: &Coeff,
) -> Result<OperatorPoly, ModelError> {
    let eta_gen = OperatorPoly::monomial(Basis::Position, 2, 0, lambda.clone());
    let transformed = bch_terminating(&eta_gen, op, DEFAULT_BCH_DEPTH)?;
    Ok(transformed.try_sub(&op.adjoint())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalg::rat;

    fn reference() -> SwansonParams {
        SwansonParams::from_ints((3, 1), (1, 1), (1, 2))
    }

    #[test]
    fn hamiltonian_reference_point() {
        // (9/4)x² + (3/4)p² + (i/2)xp + 1/4 − 3/2, canonical form
        let h = hamiltonian(&reference());
        let want = OperatorPoly::monomial(Basis::Position, 2, 0, Coeff::rational(9, 4))
            + OperatorPoly::monomial(Basis::Position, 0, 2, Coeff::rational(3, 4))
            + OperatorPoly::monomial(Basis::Position, 1, 1, Coeff::rational_i(1, 2))
            + OperatorPoly::constant(Basis::Position, Coeff::rational(-5, 4));
        assert_eq!(h, want);
    }

    #[test]
    fn hamiltonian_unit_oscillator() {
        let p = SwansonParams::from_ints((1, 1), (0, 1), (0, 1));
        let h = hamiltonian(&p);
        let want = OperatorPoly::monomial(Basis::Position, 2, 0, Coeff::rational(1, 2))
            + OperatorPoly::monomial(Basis::Position, 0, 2, Coeff::rational(1, 2))
            + OperatorPoly::constant(Basis::Position, Coeff::rational(-1, 2));
        assert_eq!(h, want);
    }

    #[test]
    fn hermitian_when_alpha_equals_beta() {
        let p = SwansonParams::from_ints((3, 1), (1, 4), (1, 4));
        assert!(hamiltonian(&p).is_hermitian());
        // λ = 0: transform is the identity
        assert_eq!(hermitian_equiv_x2(&p).unwrap(), hamiltonian(&p));
    }

    #[test]
    fn x2_route_reference_point() {
        // (3/4)p² + (7/3)x² − 3/2, exactly
        let h = hermitian_equiv_x2(&reference()).unwrap();
        let want = OperatorPoly::monomial(Basis::Position, 0, 2, Coeff::rational(3, 4))
            + OperatorPoly::monomial(Basis::Position, 2, 0, Coeff::rational(7, 3))
            + OperatorPoly::constant(Basis::Position, Coeff::rational(-3, 2));
        assert_eq!(h, want);
        assert_eq!(h, hermitian_equiv_x2_expected(&reference()));
        assert!(h.is_hermitian());
        assert!(h.is_pt_symmetric());
    }

    #[test]
    fn n_route_reference_point() {
        // ½p²(3−√2) + ½x²(3+√2) − 3/2 within 1e−12
        let h = hermitian_equiv_n(&reference()).unwrap();
        let want = hermitian_equiv_n_expected(&reference());
        assert!(h.max_coeff_dev(&want) < 1e-12, "dev {}", h.max_coeff_dev(&want));
    }

    #[test]
    fn n_route_identity_when_alpha_equals_beta() {
        let p = SwansonParams::from_ints((3, 1), (1, 4), (1, 4));
        let h = hermitian_equiv_n(&p).unwrap();
        let exact = NumPoly::from_exact(&hamiltonian(&p));
        assert!(h.max_coeff_dev(&exact) < 1e-14);
    }

    #[test]
    fn n_route_rejects_nonpositive_couplings() {
        let p = SwansonParams::from_ints((3, 1), (0, 1), (1, 2));
        assert!(matches!(
            hermitian_equiv_n(&p),
            Err(ModelError::Domain(_))
        ));
    }

    #[test]
    fn observables_reference_point() {
        let (x_obs, p_obs) = observables(&reference()).unwrap();
        assert_eq!(x_obs, OperatorPoly::x());
        // λ = −1/3: P = p + (i/3)x
        let want = OperatorPoly::p()
            + OperatorPoly::monomial(Basis::Position, 1, 0, Coeff::rational_i(1, 3));
        assert_eq!(p_obs, want);
        // canonical pair preserved
        let comm = x_obs.commutator(&p_obs).unwrap();
        assert_eq!(comm, OperatorPoly::constant(Basis::Position, Coeff::i()));
    }

    #[test]
    fn pseudo_hermiticity_of_observables() {
        let params = reference();
        let lambda = params.lambda_coeff().unwrap();
        let (x_obs, p_obs) = observables(&params).unwrap();
        assert!(pseudo_hermiticity_check(&x_obs, &lambda).unwrap().is_zero());
        assert!(pseudo_hermiticity_check(&p_obs, &lambda).unwrap().is_zero());
        let h = hamiltonian(&params);
        assert!(pseudo_hermiticity_check(&h, &lambda).unwrap().is_zero());
        // bare p is not an observable of this metric: residual 2iλx
        let resid = pseudo_hermiticity_check(&OperatorPoly::p(), &lambda).unwrap();
        let want = OperatorPoly::monomial(
            Basis::Position,
            1,
            0,
            Coeff::i().scale(&rat(2, 1)) * lambda.clone(),
        );
        assert_eq!(resid, want);
    }
}
