//! Matrix assembly in the truncated number basis.

use faer::Mat;

use super::{c64, cabs};
use crate::opalg::poly::Monomial;
use crate::opalg::OperatorPoly;

/// Truncation policy: target dimension N plus internal headroom h.
/// Matrixization runs at N+h and crops to N×N. When `headroom` is None
/// the operator's max total degree is used.
#[derive(Clone, Copy, Debug)]
pub struct BasisSpec {
    pub dim: usize,
    pub headroom: Option<usize>,
}

impl BasisSpec {
    pub fn new(dim: usize) -> Self {
        assert!(dim >= 2, "basis dimension must be at least 2");
        BasisSpec {
            dim,
            headroom: None,
        }
    }

    pub fn with_headroom(dim: usize, headroom: usize) -> Self {
        assert!(dim >= 2, "basis dimension must be at least 2");
        BasisSpec {
            dim,
            headroom: Some(headroom),
        }
    }
}

/// Dense complex matrix image of an operator, with a provenance note
/// recording what was matrixized and at which truncation.
#[derive(Clone)]
pub struct FockOperator {
    mat: Mat<c64>,
    note: String,
}

impl FockOperator {
    pub fn from_mat(mat: Mat<c64>, note: impl Into<String>) -> Self {
        assert_eq!(mat.nrows(), mat.ncols(), "Fock operators are square");
        FockOperator {
            mat,
            note: note.into(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        FockOperator::from_mat(Mat::identity(dim, dim), "identity")
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn mat(&self) -> &Mat<c64> {
        &self.mat
    }

    pub fn note(&self) -> &str {
        &self.note
    }

    pub fn get(&self, i: usize, j: usize) -> c64 {
        self.mat.read(i, j)
    }

    pub fn adjoint(&self) -> Self {
        FockOperator::from_mat(self.mat.adjoint().to_owned(), format!("({})^+", self.note))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.mat.norm_l2()
    }

    /// ‖A − A†‖_F / max(1, ‖A‖_F): relative Hermiticity defect.
    pub fn hermiticity_defect(&self) -> f64 {
        let diff = &self.mat - self.mat.adjoint().to_owned();
        diff.norm_l2() / self.mat.norm_l2().max(1.0)
    }

    pub fn matmul(&self, rhs: &FockOperator) -> FockOperator {
        FockOperator::from_mat(&self.mat * &rhs.mat, format!("{}*{}", self.note, rhs.note))
    }

    pub fn sub(&self, rhs: &FockOperator) -> FockOperator {
        FockOperator::from_mat(&self.mat - &rhs.mat, format!("{}-{}", self.note, rhs.note))
    }

    pub fn apply(&self, v: &[c64]) -> Vec<c64> {
        let n = self.dim();
        assert_eq!(v.len(), n);
        let mut out = vec![c64::new(0.0, 0.0); n];
        for i in 0..n {
            let mut acc = c64::new(0.0, 0.0);
            for j in 0..n {
                acc += self.mat.read(i, j) * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// All entries finite.
    pub fn is_finite(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let z = self.mat.read(i, j);
                if !z.re.is_finite() || !z.im.is_finite() {
                    return false;
                }
            }
        }
        true
    }
}

/// Annihilation and creation matrices at the spec dimension:
/// a[n−1, n] = √n, a† its conjugate transpose.
pub fn ladder_matrices(spec: BasisSpec) -> (FockOperator, FockOperator) {
    let n = spec.dim;
    let mut a = Mat::<c64>::zeros(n, n);
    for k in 1..n {
        a.write(k - 1, k, c64::new((k as f64).sqrt(), 0.0));
    }
    let adag = a.adjoint().to_owned();
    (
        FockOperator::from_mat(a, format!("a[dim {n}]")),
        FockOperator::from_mat(adag, format!("adag[dim {n}]")),
    )
}

/// Shared assembly path: Σ c · a†^m a^n over the given terms, computed at
/// dim+headroom and cropped.
pub fn matrixize_terms(
    terms: &[(Monomial, c64)],
    spec: BasisSpec,
    default_headroom: usize,
    note: String,
) -> FockOperator {
    let h = spec.headroom.unwrap_or(default_headroom);
    let big = spec.dim + h;
    let (a, _) = ladder_matrices(BasisSpec::new(big.max(2)));
    let a = a.mat().clone();
    let adag = a.adjoint().to_owned();

    let max_m = terms.iter().map(|(mo, _)| mo.m).max().unwrap_or(0) as usize;
    let max_n = terms.iter().map(|(mo, _)| mo.n).max().unwrap_or(0) as usize;
    let mut adag_pows: Vec<Mat<c64>> = vec![Mat::identity(big, big)];
    for k in 1..=max_m {
        adag_pows.push(&adag_pows[k - 1] * &adag);
    }
    let mut a_pows: Vec<Mat<c64>> = vec![Mat::identity(big, big)];
    for k in 1..=max_n {
        a_pows.push(&a_pows[k - 1] * &a);
    }

    let mut acc = Mat::<c64>::zeros(big, big);
    for (mono, c) in terms {
        if cabs(*c) == 0.0 {
            continue;
        }
        let prod = &adag_pows[mono.m as usize] * &a_pows[mono.n as usize];
        acc += faer::scale(*c) * &prod;
    }

    let cropped = Mat::from_fn(spec.dim, spec.dim, |i, j| acc.read(i, j));
    FockOperator::from_mat(cropped, note)
}

/// Matrix image of an exact operator polynomial (converted to the ladder
/// basis first; linear in the polynomial).
pub fn matrixize(poly: &OperatorPoly, spec: BasisSpec) -> FockOperator {
    let ladder = poly.to_ladder();
    let deg = ladder.degree().unwrap_or(0) as usize;
    let terms: Vec<(Monomial, c64)> = ladder
        .coeffs_f64()
        .into_iter()
        .map(|(m, (re, im))| (m, c64::new(re, im)))
        .collect();
    let note = format!("poly[{}] at dim {}", poly, spec.dim);
    matrixize_terms(&terms, spec, deg, note)
}

/// Matrix image of a numeric polynomial.
pub fn matrixize_num(poly: &super::NumPoly, spec: BasisSpec) -> FockOperator {
    let ladder = poly.to_ladder();
    let deg = ladder.degree().unwrap_or(0) as usize;
    let terms = ladder.terms_vec();
    matrixize_terms(&terms, spec, deg, format!("numpoly at dim {}", spec.dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalg::{Basis, Coeff};

    #[test]
    fn ladder_small() {
        let (a, _) = ladder_matrices(BasisSpec::new(2));
        assert_eq!(a.get(0, 1).re, 1.0);
        assert_eq!(a.get(0, 0).re, 0.0);
        assert_eq!(a.get(1, 0).re, 0.0);
        assert_eq!(a.get(1, 1).re, 0.0);
    }

    #[test]
    fn number_operator_diagonal() {
        let n_op = OperatorPoly::adag() * OperatorPoly::a();
        let m = matrixize(&n_op, BasisSpec::new(5));
        for k in 0..5 {
            assert!((m.get(k, k).re - k as f64).abs() < 1e-14);
        }
    }

    #[test]
    fn truncation_artifact_in_ladder_commutator() {
        // [a, a†] at N=3 has the truncation entry −2 in the corner
        let (a, adag) = ladder_matrices(BasisSpec::new(3));
        let comm = a.matmul(&adag).sub(&adag.matmul(&a));
        assert!((comm.get(0, 0).re - 1.0).abs() < 1e-14);
        assert!((comm.get(1, 1).re - 1.0).abs() < 1e-14);
        assert!((comm.get(2, 2).re + 2.0).abs() < 1e-14);
    }

    #[test]
    fn x_matrix_at_dim_2() {
        let m = matrixize(&OperatorPoly::x(), BasisSpec::new(2));
        let s = 1.0 / std::f64::consts::SQRT_2;
        assert!((m.get(0, 1).re - s).abs() < 1e-15);
        assert!((m.get(1, 0).re - s).abs() < 1e-15);
        assert!(cabs(m.get(0, 0)) < 1e-15);
    }

    #[test]
    fn x_squared_diagonal_needs_headroom() {
        let x2 = OperatorPoly::x() * OperatorPoly::x();
        let m = matrixize(&x2, BasisSpec::new(4));
        let want = [0.5, 1.5, 2.5, 3.5];
        for (k, w) in want.iter().enumerate() {
            assert!(
                (m.get(k, k).re - w).abs() < 1e-14,
                "diag {k}: {} vs {w}",
                m.get(k, k).re
            );
        }
    }

    #[test]
    fn hermitian_poly_gives_hermitian_matrix() {
        let h = (OperatorPoly::p() * OperatorPoly::p()
            + OperatorPoly::x() * OperatorPoly::x())
        .scale(&Coeff::rational(1, 2))
            + OperatorPoly::monomial(Basis::Position, 4, 0, Coeff::rational(3, 7));
        assert!(h.is_hermitian());
        let m = matrixize(&h, BasisSpec::new(24));
        assert!(m.hermiticity_defect() < 1e-12);
    }
}
