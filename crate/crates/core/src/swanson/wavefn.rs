//! Eigenfunctions ψₙ(x) = 𝒩ₙ e^{−½x²(λ+μ²)} Hₙ(μx) and their
//! orthonormality under the weight e^{λx²}.

use faer::Mat;

use super::params::SwansonParams;
use crate::error::ModelError;

/// Physicists' Hermite polynomial by the three-term recurrence.
fn hermite(n: u32, y: f64) -> f64 {
    let mut h0 = 1.0;
    if n == 0 {
        return h0;
    }
    let mut h1 = 2.0 * y;
    for k in 1..n {
        let h2 = 2.0 * y * h1 - 2.0 * (k as f64) * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

fn ln_factorial(n: u32) -> f64 {
    (2..=n as u64).map(|k| (k as f64).ln()).sum()
}

/// 𝒩ₙ chosen so ∫ψₙ e^{λx²} ψₙ = 1 with a positive leading Hermite
/// coefficient: 𝒩ₙ = √(μ/(√π 2ⁿ n!)).
fn normalization(mu: f64, n: u32) -> f64 {
    let ln = 0.5
        * (mu.ln()
            - 0.5 * std::f64::consts::PI.ln()
            - (n as f64) * std::f64::consts::LN_2
            - ln_factorial(n));
    ln.exp()
}

/// ψₙ(x). Errors when the Gaussian decay λ + μ² is not positive.
pub fn wavefunction(params: &SwansonParams, n: u32, x: f64) -> Result<f64, ModelError> {
    let s = params.scales()?;
    let decay = s.lambda + s.mu * s.mu;
    if decay <= 0.0 {
        return Err(ModelError::NonNormalizable(decay));
    }
    let y = s.mu * x;
    Ok(normalization(s.mu, n) * (-0.5 * x * x * decay).exp() * hermite(n, y))
}

/// Gauss–Hermite nodes and weights for ∫e^{−y²}f(y)dy ≈ Σ wᵢ f(yᵢ),
/// by the Golub–Welsch eigenvalue construction on the Jacobi matrix.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut jac = Mat::<f64>::zeros(n, n);
    for k in 0..n - 1 {
        let b = ((k as f64 + 1.0) / 2.0).sqrt();
        jac.write(k, k + 1, b);
        jac.write(k + 1, k, b);
    }
    let eigen = jac.selfadjoint_eigendecomposition(faer::Side::Lower);
    let s = eigen.s();
    let u = eigen.u();
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let node = s.column_vector().read(k);
            let v0 = u.read(0, k);
            let mut norm2 = 0.0;
            for i in 0..n {
                let v = u.read(i, k);
                norm2 += v * v;
            }
            (node, std::f64::consts::PI.sqrt() * v0 * v0 / norm2)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    pairs.into_iter().unzip()
}

fn overlap_with_nodes(
    params: &SwansonParams,
    m: u32,
    n: u32,
    nq: usize,
) -> Result<f64, ModelError> {
    let s = params.scales()?;
    let (nodes, weights) = gauss_hermite(nq);
    let mut acc = 0.0;
    for (y, w) in nodes.iter().zip(&weights) {
        let x = y / s.mu;
        let f = wavefunction(params, m, x)?
            * (s.lambda * x * x).exp()
            * wavefunction(params, n, x)?;
        acc += w * f * (y * y).exp();
    }
    Ok(acc / s.mu)
}

/// ∫ψₘ(x) e^{λx²} ψₙ(x) dx by Gauss–Hermite quadrature with scale μ and
/// node count ≥ 2(m+n)+32, cross-checked at a second node count.
pub fn weighted_overlap(params: &SwansonParams, m: u32, n: u32) -> Result<f64, ModelError> {
    let nq = 2 * (m + n) as usize + 32;
    let nq2 = nq + 8;
    let a = overlap_with_nodes(params, m, n, nq)?;
    let b = overlap_with_nodes(params, m, n, nq2)?;
    if (a - b).abs() > 1e-10 {
        return Err(ModelError::QuadratureAccuracy {
            n1: nq,
            n2: nq2,
            dev: (a - b).abs(),
        });
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference() -> SwansonParams {
        SwansonParams::from_ints((3, 1), (1, 1), (1, 2))
    }

    #[test]
    fn gauss_hermite_integrates_moments() {
        // ∫e^{−y²}dy = √π, ∫y²e^{−y²}dy = √π/2, ∫y⁴ = 3√π/4
        let (nodes, weights) = gauss_hermite(24);
        let moment = |p: u32| -> f64 {
            nodes
                .iter()
                .zip(&weights)
                .map(|(y, w)| w * y.powi(p as i32))
                .sum()
        };
        let rt_pi = std::f64::consts::PI.sqrt();
        assert!((moment(0) - rt_pi).abs() < 1e-13);
        assert!((moment(2) - rt_pi / 2.0).abs() < 1e-13);
        assert!((moment(4) - 0.75 * rt_pi).abs() < 1e-13);
        assert!(moment(1).abs() < 1e-14);
    }

    #[test]
    fn ground_state_gaussian_no_nodes() {
        let p = reference();
        for &x in &[-2.0, -0.7, 0.0, 0.4, 1.9] {
            assert!(wavefunction(&p, 0, x).unwrap() > 0.0);
        }
    }

    #[test]
    fn first_excited_single_node_at_origin() {
        let p = reference();
        assert!(wavefunction(&p, 1, 0.0).unwrap().abs() < 1e-15);
        assert!(wavefunction(&p, 1, 0.5).unwrap() > 0.0);
        assert!(wavefunction(&p, 1, -0.5).unwrap() < 0.0);
    }

    #[test]
    fn diagonal_normalized_offdiagonal_orthogonal() {
        let p = reference();
        assert!((weighted_overlap(&p, 0, 0).unwrap() - 1.0).abs() < 1e-8);
        assert!(weighted_overlap(&p, 0, 1).unwrap().abs() < 1e-8);
        assert!(weighted_overlap(&p, 2, 4).unwrap().abs() < 1e-8);
    }

    #[test]
    fn gram_matrix_is_identity() {
        let p = reference();
        for m in 0..=5u32 {
            for n in m..=5 {
                let want = if m == n { 1.0 } else { 0.0 };
                let got = weighted_overlap(&p, m, n).unwrap();
                assert!(
                    (got - want).abs() < 1e-8,
                    "overlap({m},{n}) = {got}, want {want}"
                );
            }
        }
    }
}
