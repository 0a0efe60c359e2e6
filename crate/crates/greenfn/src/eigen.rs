//! Dense complex eigenvalues and the clustering policy for multiplicities.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Iteration budget handed to the Schur decomposition; generous for N <= 64.
const MAX_SCHUR_ITERATIONS: usize = 100_000;

/// The complete multiset of eigenvalues of a matrix (algebraic multiplicity
/// equals repetition count). Ordering is unspecified here; callers impose
/// their own.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<Complex64>,
}

impl Spectrum {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// All `n` eigenvalues of `a`, computed by Hessenberg reduction followed by
/// the implicit-shift QR (Schur) iteration.
pub fn eigenvalues(a: &ComplexMatrix) -> Result<Spectrum> {
    if !a.is_finite() {
        return Err(Error::InvalidInput("matrix entries must be finite".into()));
    }
    let dm = nalgebra::DMatrix::from_fn(a.dim(), a.dim(), |i, j| a[(i, j)]);
    let schur = nalgebra::linalg::Schur::try_new(dm, f64::EPSILON, MAX_SCHUR_ITERATIONS)
        .ok_or(Error::EigenFailure(MAX_SCHUR_ITERATIONS))?;
    let values = schur
        .eigenvalues()
        .ok_or(Error::EigenFailure(MAX_SCHUR_ITERATIONS))?
        .iter()
        .copied()
        .collect();
    Ok(Spectrum { values })
}

/// The default merge tolerance for eigenvalue clusters: `1e-8 * max(1, ||A||)`.
pub fn cluster_tolerance(norm_a: f64) -> f64 {
    1e-8 * norm_a.max(1.0)
}

/// Merge eigenvalues closer than `tol` into clusters, each reported as
/// (mean, summed multiplicity), sorted by (Re, Im).
///
/// Confluent divided differences need exact-coincidence structure; the raw
/// floating eigenvalues of a defective matrix scatter at roughly the scale
/// merged here.
pub fn cluster_spectrum(spectrum: &Spectrum, tol: f64) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<(Complex64, usize)> =
        spectrum.values().iter().map(|&z| (z, 1)).collect();
    // O(n^2) agglomeration on cluster means; n is desk scale.
    loop {
        let mut merged = false;
        'outer: for i in 0..clusters.len() {
            for j in (i + 1)..clusters.len() {
                if (clusters[i].0 - clusters[j].0).norm() <= tol {
                    let (zi, ci) = clusters[i];
                    let (zj, cj) = clusters[j];
                    let total = ci + cj;
                    let mean = (zi * ci as f64 + zj * cj as f64) / total as f64;
                    clusters[i] = (mean, total);
                    clusters.remove(j);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            break;
        }
    }
    clusters.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .expect("finite eigenvalues")
    });
    clusters
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        v
    }

    #[test]
    fn diagonal_spectrum() {
        let a = ComplexMatrix::from_diagonal(&[c(-1.0, 0.0), c(2.0, 0.0)]);
        let s = sorted(eigenvalues(&a).unwrap().values().to_vec());
        assert!((s[0] - c(-1.0, 0.0)).norm() < 1e-12);
        assert!((s[1] - c(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn rotation_matrix_spectrum() {
        let a = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[-1.0, 0.0]]).unwrap();
        let s = sorted(eigenvalues(&a).unwrap().values().to_vec());
        assert!((s[0] - c(0.0, -1.0)).norm() < 1e-12);
        assert!((s[1] - c(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn companion_matrix_multiplicities() {
        // Companion matrix of (z + 1)^2 (z - 2) = z^3 - 3z - 2.
        let a = ComplexMatrix::from_real_rows(&[
            &[0.0, 0.0, 2.0],
            &[1.0, 0.0, 3.0],
            &[0.0, 1.0, 0.0],
        ])
        .unwrap();
        let s = sorted(eigenvalues(&a).unwrap().values().to_vec());
        assert!((s[0] - c(-1.0, 0.0)).norm() < 1e-8);
        assert!((s[1] - c(-1.0, 0.0)).norm() < 1e-8);
        assert!((s[2] - c(2.0, 0.0)).norm() < 1e-8);

        let norm_a = a.op_norm().unwrap();
        let clusters = cluster_spectrum(&eigenvalues(&a).unwrap(), cluster_tolerance(norm_a));
        assert_eq!(clusters.len(), 2);
        assert_eq!(clusters[0].1, 2);
        assert!((clusters[0].0 - c(-1.0, 0.0)).norm() < 1e-8);
        assert_eq!(clusters[1].1, 1);
    }

    #[test]
    fn clustering_merges_chains() {
        let s = Spectrum {
            values: vec![c(0.0, 0.0), c(0.6e-8, 0.0), c(1.2e-8, 0.0), c(1.0, 0.0)],
        };
        let clusters = cluster_spectrum(&s, 1e-8);
        assert_eq!(clusters.len(), 2);
        assert_eq!(clusters[0].1, 3);
        assert_eq!(clusters[1].1, 1);
    }
}
