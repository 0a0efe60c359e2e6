//! Spectral splitting across the imaginary axis and the node ordering used
//! by the factorized Green's function.

use num_complex::Complex64;

use crate::divdiff::NodeList;
use crate::eigen::{cluster_spectrum, cluster_tolerance, eigenvalues};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// The spectrum split into the open right and left half-planes, with the gap
/// constants of the dichotomy.
///
/// `gamma_plus` is the smallest real part over the right roots and
/// `gamma_minus` the negated largest real part over the left roots — the
/// tight constants. An empty half carries `f64::INFINITY` as an unused
/// sentinel.
#[derive(Debug, Clone, PartialEq)]
pub struct DichotomyData {
    right: Vec<Complex64>,
    left: Vec<Complex64>,
    gamma_plus: f64,
    gamma_minus: f64,
}

impl DichotomyData {
    /// Roots with positive real part, sorted by (Re, Im), multiplicities
    /// expanded; length `k`.
    pub fn right(&self) -> &[Complex64] {
        &self.right
    }

    /// Roots with negative real part, sorted by (Re, Im); length `m`.
    pub fn left(&self) -> &[Complex64] {
        &self.left
    }

    pub fn right_count(&self) -> usize {
        self.right.len()
    }

    pub fn left_count(&self) -> usize {
        self.left.len()
    }

    pub fn dim(&self) -> usize {
        self.right.len() + self.left.len()
    }

    pub fn gamma_plus(&self) -> f64 {
        self.gamma_plus
    }

    pub fn gamma_minus(&self) -> f64 {
        self.gamma_minus
    }

    /// The interpolation-node arrangement for the Green's function: right
    /// roots before left roots for positive time, mirrored for negative time.
    pub fn ordered_nodes(&self, positive_time: bool) -> NodeList {
        let mut nodes = Vec::with_capacity(self.dim());
        if positive_time {
            nodes.extend_from_slice(&self.right);
            nodes.extend_from_slice(&self.left);
        } else {
            nodes.extend_from_slice(&self.left);
            nodes.extend_from_slice(&self.right);
        }
        NodeList::new(nodes).expect("halves are sorted with contiguous runs")
    }

    /// Assemble from already-partitioned roots. Intended for tests and for
    /// callers that obtained the split elsewhere; the usual entry point is
    /// [`split_spectrum`].
    pub fn from_parts(
        mut right: Vec<Complex64>,
        mut left: Vec<Complex64>,
    ) -> Result<Self> {
        if right.is_empty() && left.is_empty() {
            return Err(Error::InvalidInput("spectrum must be non-empty".into()));
        }
        if right.iter().any(|z| z.re <= 0.0) || left.iter().any(|z| z.re >= 0.0) {
            return Err(Error::InvalidInput(
                "right roots need Re > 0 and left roots Re < 0".into(),
            ));
        }
        sort_nodes(&mut right);
        sort_nodes(&mut left);
        let gamma_plus = right.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
        let gamma_minus = left.iter().map(|z| -z.re).fold(f64::INFINITY, f64::min);
        Ok(Self {
            right,
            left,
            gamma_plus,
            gamma_minus,
        })
    }
}

fn sort_nodes(nodes: &mut [Complex64]) {
    nodes.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).expect("finite roots"));
}

/// Compute, cluster, and partition the spectrum of `a` by the sign of the
/// real part.
///
/// `axis_tol` defaults to `1e-8 * max(1, ||A||)`; any clustered eigenvalue
/// with `|Re| <= axis_tol` makes the bounded-solutions problem ill posed and
/// is reported as a [`Error::DichotomyViolation`].
pub fn split_spectrum(a: &ComplexMatrix, axis_tol: Option<f64>) -> Result<DichotomyData> {
    let norm_a = a.op_norm()?;
    let tol = match axis_tol {
        Some(t) if t > 0.0 => t,
        Some(_) => return Err(Error::InvalidInput("axis tolerance must be positive".into())),
        None => cluster_tolerance(norm_a),
    };
    let spectrum = eigenvalues(a)?;
    let clusters = cluster_spectrum(&spectrum, cluster_tolerance(norm_a));

    let mut right = Vec::new();
    let mut left = Vec::new();
    for (value, multiplicity) in clusters {
        if value.re.abs() <= tol {
            return Err(Error::DichotomyViolation { value, tol });
        }
        let side = if value.re > 0.0 { &mut right } else { &mut left };
        side.extend(std::iter::repeat_n(value, multiplicity));
    }
    DichotomyData::from_parts(right, left)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn splits_a_simple_diagonal() {
        let a = ComplexMatrix::from_diagonal(&[c(-1.0, 0.0), c(2.0, 0.0)]);
        let d = split_spectrum(&a, None).unwrap();
        assert_eq!(d.right_count(), 1);
        assert_eq!(d.left_count(), 1);
        assert!((d.gamma_plus() - 2.0).abs() < 1e-12);
        assert!((d.gamma_minus() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn all_left_spectrum_has_sentinel_gamma_plus() {
        let a = ComplexMatrix::from_diagonal(&[c(-1.0, 0.0), c(-3.0, 0.0)]);
        let d = split_spectrum(&a, None).unwrap();
        assert_eq!(d.right_count(), 0);
        assert_eq!(d.left_count(), 2);
        assert!((d.gamma_minus() - 1.0).abs() < 1e-12);
        assert!(d.gamma_plus().is_infinite());
        // Left nodes sorted by (Re, Im).
        assert!((d.left()[0] - c(-3.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn axis_spectrum_is_rejected() {
        let a = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[-1.0, 0.0]]).unwrap();
        assert!(matches!(
            split_spectrum(&a, None),
            Err(Error::DichotomyViolation { .. })
        ));
    }

    #[test]
    fn node_ordering_follows_the_sign_of_time() {
        let a = ComplexMatrix::from_diagonal(&[c(-1.0, 0.0), c(2.0, 0.0)]);
        let d = split_spectrum(&a, None).unwrap();
        let forward = d.ordered_nodes(true);
        assert!((forward.as_slice()[0] - c(2.0, 0.0)).norm() < 1e-12);
        assert!((forward.as_slice()[1] - c(-1.0, 0.0)).norm() < 1e-12);
        let backward = d.ordered_nodes(false);
        assert!((backward.as_slice()[0] - c(-1.0, 0.0)).norm() < 1e-12);

        // k = 0: the ordering is the left half unchanged.
        let b = ComplexMatrix::from_diagonal(&[c(-1.0, 0.0), c(-3.0, 0.0)]);
        let db = split_spectrum(&b, None).unwrap();
        assert_eq!(db.ordered_nodes(true).as_slice(), db.left());
    }

    #[test]
    fn tightness_is_attained() {
        let a = ComplexMatrix::from_diagonal(&[c(-2.0, 1.0), c(-0.5, 0.0), c(1.5, -3.0)]);
        let d = split_spectrum(&a, None).unwrap();
        assert!(d.right().iter().any(|z| (z.re - d.gamma_plus()).abs() < 1e-12));
        assert!(d.left().iter().any(|z| (z.re + d.gamma_minus()).abs() < 1e-12));
    }

    #[test]
    fn shift_law() {
        let a = ComplexMatrix::from_diagonal(&[c(-1.0, 0.0), c(2.0, 0.0)]);
        let shift = 0.75;
        let shifted = a.shifted(c(shift, 0.0));
        let d = split_spectrum(&shifted, None).unwrap();
        assert!((d.gamma_plus() - (2.0 - shift)).abs() < 1e-12);
        assert!((d.gamma_minus() - (1.0 + shift)).abs() < 1e-12);

        // Shifting an eigenvalue onto the axis triggers the violation.
        let onto_axis = a.shifted(c(2.0, 0.0));
        assert!(split_spectrum(&onto_axis, None).is_err());
    }
}
