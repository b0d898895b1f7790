//! Eigenvalues and inertia of real symmetric and complex Hermitian
//! matrices. Two independent inertia backends: a floating eigensolver
//! with a zero-classification policy, and exact rational congruence
//! elimination (`exact`). They are kept separate deliberately so each
//! can cross-check the other.

pub(crate) mod exact;

use nalgebra::{Complex, DMatrix};

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

/// Relative asymmetry allowed before a matrix is rejected as non-Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Real eigenvalues of a Hermitian matrix, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    fn from_unsorted(mut values: Vec<f64>) -> Spectrum {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Spectrum { values }
    }

    /// Eigenvalues λ1 ≥ λ2 ≥ … ≥ λn.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// λ1. Panics on an empty spectrum.
    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    /// λn. Panics on an empty spectrum.
    pub fn smallest(&self) -> f64 {
        *self.values.last().expect("nonempty spectrum")
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// max |λi|, the spectral norm of the source matrix.
    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Signature of a Hermitian matrix: counts of positive, zero, and
/// negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn total(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }
}

/// How eigenvalues are classified as zero when computing inertia.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroMode {
    /// Rational congruence elimination; no rounding anywhere.
    Exact,
    /// Floating eigensolver; |λ| ≤ ε·max(1, ‖m‖) counts as zero.
    Tolerance,
}

/// Zero-classification policy. `epsilon` is a relative threshold; it also
/// drives the comparison slack in eigenvalue-count bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroPolicy {
    pub mode: ZeroMode,
    pub epsilon: f64,
}

impl ZeroPolicy {
    pub const DEFAULT_EPSILON: f64 = 1e-9;

    pub fn exact() -> ZeroPolicy {
        ZeroPolicy {
            mode: ZeroMode::Exact,
            epsilon: Self::DEFAULT_EPSILON,
        }
    }

    pub fn tolerance(epsilon: f64) -> ZeroPolicy {
        ZeroPolicy {
            mode: ZeroMode::Tolerance,
            epsilon,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.mode == ZeroMode::Tolerance && (!self.epsilon.is_finite() || self.epsilon <= 0.0) {
            return Err(Error::Invariant(format!(
                "tolerance mode needs a positive finite epsilon, got {}",
                self.epsilon
            )));
        }
        Ok(())
    }
}

impl Default for ZeroPolicy {
    /// Exact mode: integer-valued bounds flip when a near-zero eigenvalue
    /// is misclassified, so rounding-free inertia is the safe default.
    fn default() -> ZeroPolicy {
        ZeroPolicy::exact()
    }
}

fn entry_scale(m: &DMatrix<Complex<f64>>) -> f64 {
    m.iter().fold(1.0f64, |s, z| s.max(z.norm()))
}

/// Rejects matrices that are not Hermitian within `HERMITIAN_TOL`
/// relative asymmetry. Non-finite entries are rejected too.
pub fn check_hermitian(m: &DMatrix<Complex<f64>>) -> Result<()> {
    if !m.is_square() {
        return Err(Error::Invariant(format!(
            "expected a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Invariant("matrix has non-finite entries".into()));
    }
    let mut asymmetry = 0.0f64;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            asymmetry = asymmetry.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    let limit = HERMITIAN_TOL * entry_scale(m);
    if asymmetry > limit {
        return Err(Error::NotHermitian { asymmetry, limit });
    }
    Ok(())
}

fn to_complex(m: &DMatrix<f64>) -> DMatrix<Complex<f64>> {
    m.map(|x| Complex::new(x, 0.0))
}

/// Eigenvalues of a real symmetric matrix, sorted descending.
pub fn eigenvalues_sym(m: &DMatrix<f64>) -> Result<Spectrum> {
    check_hermitian(&to_complex(m))?;
    let eigen = m.clone().symmetric_eigen();
    Ok(Spectrum::from_unsorted(eigen.eigenvalues.as_slice().to_vec()))
}

/// Eigenvalues of a complex Hermitian matrix, sorted descending.
pub fn eigenvalues_hermitian(m: &DMatrix<Complex<f64>>) -> Result<Spectrum> {
    check_hermitian(m)?;
    let eigen = m.clone().symmetric_eigen();
    Ok(Spectrum::from_unsorted(eigen.eigenvalues.as_slice().to_vec()))
}

/// Inertia of a Hermitian matrix under the given zero policy.
///
/// Exact mode treats every finite double as the dyadic rational it is and
/// runs congruence elimination; tolerance mode classifies the floating
/// spectrum. The two backends share no code.
pub fn inertia(m: &DMatrix<Complex<f64>>, policy: &ZeroPolicy) -> Result<Inertia> {
    policy.validate()?;
    check_hermitian(m)?;
    match policy.mode {
        ZeroMode::Exact => exact::rational_inertia(m),
        ZeroMode::Tolerance => {
            let spectrum = eigenvalues_hermitian(m)?;
            let cutoff = policy.epsilon * 1.0f64.max(spectrum.spectral_radius());
            let mut result = Inertia {
                n_plus: 0,
                n_zero: 0,
                n_minus: 0,
            };
            for &value in spectrum.values() {
                if value.abs() <= cutoff {
                    result.n_zero += 1;
                } else if value > 0.0 {
                    result.n_plus += 1;
                } else {
                    result.n_minus += 1;
                }
            }
            Ok(result)
        }
    }
}

/// Inertia of a real symmetric matrix.
pub fn inertia_sym(m: &DMatrix<f64>, policy: &ZeroPolicy) -> Result<Inertia> {
    inertia(&to_complex(m), policy)
}

/// Laplacian matrix D − A.
pub fn laplacian(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut m = -g.adjacency();
    for v in 0..n {
        m[(v, v)] = g.degree(v) as f64;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, CatalogId};

    fn assert_spectrum(actual: &Spectrum, expected: &[f64]) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.values().iter().zip(expected) {
            assert!((a - e).abs() < 1e-9, "{a} vs {e}");
        }
    }

    #[test]
    fn complete_graph_spectrum() {
        let g = catalog(&CatalogId::Complete(3)).unwrap();
        let s = eigenvalues_sym(&g.adjacency()).unwrap();
        assert_spectrum(&s, &[2.0, -1.0, -1.0]);
    }

    #[test]
    fn petersen_spectrum() {
        let g = catalog(&CatalogId::Petersen).unwrap();
        let s = eigenvalues_sym(&g.adjacency()).unwrap();
        let mut expected = vec![3.0];
        expected.extend(vec![1.0; 5]);
        expected.extend(vec![-2.0; 4]);
        assert_spectrum(&s, &expected);
    }

    #[test]
    fn zero_matrix_spectrum() {
        let s = eigenvalues_sym(&DMatrix::zeros(4, 4)).unwrap();
        assert_spectrum(&s, &[0.0; 4]);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 2.0, 0.0]);
        assert!(matches!(
            eigenvalues_sym(&m),
            Err(Error::NotHermitian { .. })
        ));
        let c = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex::new(0.0, 0.0),
                Complex::new(0.0, 1.0),
                Complex::new(0.0, 1.0),
                Complex::new(0.0, 0.0),
            ],
        );
        assert!(matches!(
            eigenvalues_hermitian(&c),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        let m = DMatrix::from_row_slice(1, 1, &[f64::INFINITY]);
        assert!(eigenvalues_sym(&m).is_err());
    }

    #[test]
    fn complex_hermitian_eigenvalues() {
        // [[2, 1-i], [1+i, 3]] has eigenvalues (5 ± 3)/2.
        let m = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex::new(2.0, 0.0),
                Complex::new(1.0, -1.0),
                Complex::new(1.0, 1.0),
                Complex::new(3.0, 0.0),
            ],
        );
        let s = eigenvalues_hermitian(&m).unwrap();
        assert_spectrum(&s, &[4.0, 1.0]);
    }

    fn both_inertias(g: &crate::graph::Graph) -> (Inertia, Inertia) {
        let a = g.adjacency();
        let exact = inertia_sym(&a, &ZeroPolicy::exact()).unwrap();
        let tol = inertia_sym(&a, &ZeroPolicy::tolerance(1e-9)).unwrap();
        (exact, tol)
    }

    #[test]
    fn petersen_inertia_both_modes() {
        let g = catalog(&CatalogId::Petersen).unwrap();
        let want = Inertia {
            n_plus: 6,
            n_zero: 0,
            n_minus: 4,
        };
        assert_eq!(both_inertias(&g), (want, want));
    }

    #[test]
    fn complete_bipartite_inertia() {
        let g = catalog(&CatalogId::CompleteBipartite(3, 3)).unwrap();
        let want = Inertia {
            n_plus: 1,
            n_zero: 4,
            n_minus: 1,
        };
        assert_eq!(both_inertias(&g), (want, want));
    }

    #[test]
    fn empty_graph_inertia() {
        let g = catalog(&CatalogId::Empty(5)).unwrap();
        let want = Inertia {
            n_plus: 0,
            n_zero: 5,
            n_minus: 0,
        };
        assert_eq!(both_inertias(&g), (want, want));
    }

    #[test]
    fn path_inertia_with_irrational_eigenvalues() {
        // P3 spectrum is √2, 0, −√2; exact elimination never sees the roots.
        let g = catalog(&CatalogId::Path(3)).unwrap();
        let want = Inertia {
            n_plus: 1,
            n_zero: 1,
            n_minus: 1,
        };
        assert_eq!(both_inertias(&g), (want, want));
    }

    #[test]
    fn exact_mode_rejects_non_finite() {
        let m = DMatrix::from_row_slice(1, 1, &[Complex::new(f64::NAN, 0.0)]);
        assert!(inertia(&m, &ZeroPolicy::exact()).is_err());
    }

    #[test]
    fn tolerance_policy_requires_positive_epsilon() {
        let m = DMatrix::zeros(2, 2);
        assert!(inertia_sym(&m, &ZeroPolicy::tolerance(0.0)).is_err());
    }

    #[test]
    fn laplacian_of_k2() {
        let g = catalog(&CatalogId::Complete(2)).unwrap();
        let l = laplacian(&g);
        assert_eq!(l, DMatrix::from_row_slice(2, 2, &[1.0, -1.0, -1.0, 1.0]));
    }

    #[test]
    fn petersen_laplacian_spectrum() {
        let g = catalog(&CatalogId::Petersen).unwrap();
        let s = eigenvalues_sym(&laplacian(&g)).unwrap();
        let mut expected = vec![5.0; 4];
        expected.extend(vec![2.0; 5]);
        expected.push(0.0);
        assert_spectrum(&s, &expected);
    }

    #[test]
    fn empty_laplacian_is_zero() {
        let g = catalog(&CatalogId::Empty(3)).unwrap();
        assert_eq!(laplacian(&g), DMatrix::zeros(3, 3));
    }

    #[test]
    fn complex_weighting_inertia_matches_between_modes() {
        // C5 with one edge weight i: still Hermitian, eigenvalues shift.
        let g = catalog(&CatalogId::Cycle(5)).unwrap();
        let mut m = to_complex(&g.adjacency());
        m[(0, 1)] = Complex::new(0.0, 1.0);
        m[(1, 0)] = Complex::new(0.0, -1.0);
        let exact = inertia(&m, &ZeroPolicy::exact()).unwrap();
        let tol = inertia(&m, &ZeroPolicy::tolerance(1e-9)).unwrap();
        assert_eq!(exact, tol);
        assert_eq!(exact.total(), 5);
    }
}
