//! The Bogoliubov solution family behind the three-exponential transform,
//! and a numerical, report-only exploration of that transform.

use faer::complex_native::c64;
use faer::Mat;

use super::params::SwansonParams;
use crate::error::ModelError;
use crate::fock::{eigenvalues, ladder_matrices, matrix_exp, matrixize, BasisSpec, FockOperator};

/// One solution of the three Bogoliubov conditions
///   g₁g₄ − g₂g₃ = 1,
///   g₂g₄ω + g₂²α + g₄²β = 0,
///   g₁g₃ω + g₁²α + g₃²β = 0,
/// together with the derived combinations w = (g₃g₄−g₁g₂)/g₄², z = g₄/g₁.
#[derive(Clone, Copy, Debug)]
pub struct BogoliubovFamily {
    pub g1: f64,
    pub g2: f64,
    pub g3: f64,
    pub g4: f64,
    pub w: f64,
    pub z: f64,
}

impl BogoliubovFamily {
    pub fn from_gs(g1: f64, g2: f64, g3: f64, g4: f64) -> Self {
        BogoliubovFamily {
            g1,
            g2,
            g3,
            g4,
            w: (g3 * g4 - g1 * g2) / (g4 * g4),
            z: g4 / g1,
        }
    }

    /// Residuals of the three defining conditions.
    pub fn residuals(&self, params: &SwansonParams) -> [f64; 3] {
        let (om, al, be) = (
            params.omega_f64(),
            params.alpha_f64(),
            params.beta_f64(),
        );
        [
            self.g1 * self.g4 - self.g2 * self.g3 - 1.0,
            self.g2 * self.g4 * om + self.g2 * self.g2 * al + self.g4 * self.g4 * be,
            self.g1 * self.g3 * om + self.g1 * self.g1 * al + self.g3 * self.g3 * be,
        ]
    }

    /// Optional fourth constraint g₁g₃ = g₂g₄ (commutation with N).
    pub fn fourth_constraint_residual(&self) -> f64 {
        self.g1 * self.g3 - self.g2 * self.g4
    }

    pub fn satisfies_fourth(&self, tol: f64) -> bool {
        self.fourth_constraint_residual().abs() < tol
    }
}

/// Solve the family at fixed g₁: the third condition is a quadratic in g₃
/// (both real roots returned; linear when β = 0), after which the
/// remaining two conditions degenerate to a linear chain
/// g₂ = −β/(ωg₁ + 2βg₃), g₄ = (1 + g₂g₃)/g₁.
pub fn solve_bogoliubov(
    g1: f64,
    params: &SwansonParams,
) -> Result<Vec<BogoliubovFamily>, ModelError> {
    if g1 == 0.0 {
        return Err(ModelError::Domain("g1 must be nonzero".into()));
    }
    let (om, al, be) = (
        params.omega_f64(),
        params.alpha_f64(),
        params.beta_f64(),
    );
    let g3_roots: Vec<f64> = if be == 0.0 {
        if om == 0.0 {
            return Err(ModelError::Domain(
                "beta = 0 with omega = 0 leaves g3 undetermined".into(),
            ));
        }
        vec![-al * g1 / om]
    } else {
        let disc = om * om * g1 * g1 - 4.0 * al * be * g1 * g1;
        if disc < 0.0 {
            return Err(ModelError::NoRealSolution(disc));
        }
        let root = disc.sqrt();
        vec![(-om * g1 + root) / (2.0 * be), (-om * g1 - root) / (2.0 * be)]
    };
    let mut out = Vec::new();
    for g3 in g3_roots {
        let denom = om * g1 + 2.0 * be * g3;
        if denom == 0.0 {
            return Err(ModelError::Domain(
                "degenerate branch: omega g1 + 2 beta g3 = 0".into(),
            ));
        }
        let g2 = -be / denom;
        let g4 = (1.0 + g2 * g3) / g1;
        let fam = BogoliubovFamily::from_gs(g1, g2, g3, g4);
        let res = fam.residuals(params);
        if res.iter().any(|r| r.abs() >= 1e-12) {
            return Err(ModelError::Domain(format!(
                "constraint residuals {res:?} exceed 1e-12"
            )));
        }
        out.push(fam);
    }
    Ok(out)
}

/// Outcome of numerically conjugating H by the three-exponential U in both
/// directions. Purely exploratory: nothing here asserts, it reports.
#[derive(Clone, Debug)]
pub struct SwansonUReport {
    pub dim: usize,
    pub levels: usize,
    pub cond_estimate: f64,
    pub ill_conditioned: bool,
    pub z: f64,
    /// ln z needs z > 0; when false the U factors cannot be built.
    pub z_positive: bool,
    /// max deviation of the lowest converged levels of U H U⁻¹ from
    /// Ω(n+½) − ω/2, and the same for U⁻¹ H U.
    pub forward_dev: Option<f64>,
    pub inverse_dev: Option<f64>,
    pub forward_match: bool,
    pub inverse_match: bool,
}

fn scaled_ladder(a: &Mat<c64>, adag: &Mat<c64>, ca: f64, cadag: f64) -> Mat<c64> {
    faer::scale(c64::new(ca, 0.0)) * a + faer::scale(c64::new(cadag, 0.0)) * adag
}

/// Build U = exp{½(g₃/g₁ − g₂/g₄)a†²}·exp(½w d²)·exp(c d ln z) at the given
/// dimension and try both conjugation directions against the scaled
/// oscillator spectrum Ω(n+½) − ω/2 (tolerance 1e−6 on the lowest levels).
pub fn verify_swanson_u(
    family: &BogoliubovFamily,
    params: &SwansonParams,
    dim: usize,
) -> Result<SwansonUReport, ModelError> {
    params.validate()?;
    let levels = (dim / 8).clamp(2, 6);
    let mut report = SwansonUReport {
        dim,
        levels,
        cond_estimate: f64::INFINITY,
        ill_conditioned: true,
        z: family.z,
        z_positive: family.z > 0.0,
        forward_dev: None,
        inverse_dev: None,
        forward_match: false,
        inverse_match: false,
    };
    if !report.z_positive {
        return Ok(report);
    }
    let (a_op, adag_op) = ladder_matrices(BasisSpec::new(dim));
    let (a, adag) = (a_op.mat().clone(), adag_op.mat().clone());

    let coef1 = 0.5 * (family.g3 / family.g1 - family.g2 / family.g4);
    let f1 = faer::scale(c64::new(coef1, 0.0)) * (&adag * &adag);
    let d = scaled_ladder(&a, &adag, family.g4, -family.g2);
    let c = scaled_ladder(&a, &adag, -family.g3, family.g1);
    let f2 = faer::scale(c64::new(0.5 * family.w, 0.0)) * (&d * &d);
    let f3 = faer::scale(c64::new(family.z.ln(), 0.0)) * (&c * &d);

    let e1 = matrix_exp(&FockOperator::from_mat(f1, "U factor a†²"))?;
    let e2 = matrix_exp(&FockOperator::from_mat(f2, "U factor d²"))?;
    let e3 = matrix_exp(&FockOperator::from_mat(f3, "U factor cd"))?;
    let u = e1.matmul(&e2).matmul(&e3);

    let lu = u.mat().partial_piv_lu();
    let u_inv = FockOperator::from_mat(lu.inverse(), "U^-1");
    let cond = u.frobenius_norm() * u_inv.frobenius_norm();
    report.cond_estimate = cond;
    report.ill_conditioned = !(cond.is_finite() && cond < 1e12);

    let h = matrixize(&super::transforms::hamiltonian(params), BasisSpec::new(dim));
    let scales = params.scales()?;
    let exact: Vec<f64> = (0..levels)
        .map(|n| scales.omega_eff * (n as f64 + 0.5) - params.omega_f64() / 2.0)
        .collect();

    let mut measure = |t: FockOperator| -> Option<f64> {
        let eigs = eigenvalues(&t).ok()?;
        let dev = exact
            .iter()
            .enumerate()
            .map(|(k, want)| {
                let z = eigs.get(k)?;
                Some(((z.re - want).powi(2) + z.im * z.im).sqrt())
            })
            .collect::<Option<Vec<f64>>>()?
            .into_iter()
            .fold(0.0f64, f64::max);
        Some(dev)
    };

    report.forward_dev = measure(u.matmul(&h).matmul(&u_inv));
    report.inverse_dev = measure(u_inv.matmul(&h).matmul(&u));
    report.forward_match = report.forward_dev.map(|d| d < 1e-6).unwrap_or(false);
    report.inverse_match = report.inverse_dev.map(|d| d < 1e-6).unwrap_or(false);
    Ok(report)
}
