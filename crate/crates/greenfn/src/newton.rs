//! Newton-form interpolating polynomials, evaluable at scalars, jets, and
//! matrices. Evaluating the interpolant of `f` on the spectrum of `A`
//! (multiplicities included) realizes the matrix function `f(A)`.

use num_complex::Complex64;

use crate::analytic::AnalyticFn;
use crate::divdiff::{divided_difference_table, NodeList};
use crate::error::Result;
use crate::jet::Jet;
use crate::matrix::ComplexMatrix;

/// Interpolation nodes plus divided-difference coefficients:
/// `coeffs[j] = f[x_1, ..., x_{j+1}]`.
#[derive(Debug, Clone, PartialEq)]
pub struct NewtonPolynomial {
    nodes: NodeList,
    coeffs: Vec<Complex64>,
}

impl NewtonPolynomial {
    /// Interpolate `f` at the given nodes (Hermite conditions at repeated
    /// nodes). The coefficients are the divided-difference table of `f`.
    pub fn interpolate<F: AnalyticFn + ?Sized>(f: &F, nodes: NodeList) -> Result<Self> {
        let coeffs = divided_difference_table(f, &nodes)?;
        Ok(Self { nodes, coeffs })
    }

    /// Assemble from already-computed coefficients; lengths must match.
    pub fn from_parts(nodes: NodeList, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != nodes.len() {
            return Err(crate::error::Error::InvalidInput(
                "coefficient count must match node count".into(),
            ));
        }
        Ok(Self { nodes, coeffs })
    }

    pub fn nodes(&self) -> &NodeList {
        &self.nodes
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Nested (Horner-style) evaluation at a scalar.
    pub fn eval_scalar(&self, z: Complex64) -> Complex64 {
        let xs = self.nodes.as_slice();
        let n = self.coeffs.len();
        let mut acc = self.coeffs[n - 1];
        for j in (0..n - 1).rev() {
            acc = acc * (z - xs[j]) + self.coeffs[j];
        }
        acc
    }

    /// Nested evaluation with `(z - x_j)` replaced by `(A - x_j I)`;
    /// costs `N - 1` matrix multiplications.
    pub fn eval_matrix(&self, a: &ComplexMatrix) -> ComplexMatrix {
        let xs = self.nodes.as_slice();
        let n = self.coeffs.len();
        let id = ComplexMatrix::identity(a.dim());
        let mut acc = id.scale(self.coeffs[n - 1]);
        for j in (0..n - 1).rev() {
            acc = &(&acc * &a.shifted(xs[j])) + &id.scale(self.coeffs[j]);
        }
        acc
    }

    /// Jet of the polynomial at `center`, computed by running the nested
    /// evaluation in jet arithmetic (no basis conversion).
    pub fn eval_jet(&self, center: Complex64, order: usize) -> Jet {
        let xs = self.nodes.as_slice();
        let n = self.coeffs.len();
        let x = Jet::variable(center, order);
        let mut acc = Jet::constant(center, self.coeffs[n - 1], order);
        for j in (0..n - 1).rev() {
            let linear = x.sub(&Jet::constant(center, xs[j], order));
            acc = acc.mul(&linear).add(&Jet::constant(center, self.coeffs[j], order));
        }
        acc
    }

    /// Verify the Hermite interpolation conditions: at every distinct node of
    /// multiplicity `r`, the order-`(r-1)` jet of the polynomial matches the
    /// jet of `f` within `tolerance` (scaled per coefficient).
    pub fn hermite_check<F: AnalyticFn + ?Sized>(&self, f: &F, tolerance: f64) -> Result<bool> {
        for (value, multiplicity) in self.nodes.runs() {
            let order = multiplicity - 1;
            let ours = self.eval_jet(value, order);
            let truth = f.jet(value, order)?;
            for r in 0..=order {
                let diff = (ours.coeff(r) - truth.coeff(r)).norm();
                if diff > tolerance * (1.0 + truth.coeff(r).norm()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `f(A)` through the interpolating polynomial on the supplied nodes, which
/// must be the spectrum of `A` with algebraic multiplicities (typically the
/// clustered eigenvalues in the dichotomy ordering).
pub fn matrix_function<F: AnalyticFn + ?Sized>(
    f: &F,
    a: &ComplexMatrix,
    nodes: &NodeList,
) -> Result<ComplexMatrix> {
    Ok(NewtonPolynomial::interpolate(f, nodes.clone())?.eval_matrix(a))
}
