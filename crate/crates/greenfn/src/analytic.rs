//! Analytic functions presented through their jets.
//!
//! Everything downstream (divided differences, Newton interpolation, the
//! factorized Green's function) consumes functions only through
//! [`AnalyticFn::jet`], so each instance just has to produce correct
//! truncated Taylor expansions at arbitrary points of its domain.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::jet::Jet;

pub trait AnalyticFn {
    /// Truncated Taylor expansion at `center` up to `order` (inclusive).
    ///
    /// Lower-order jets must be exact prefixes of higher-order jets at the
    /// same center.
    fn jet(&self, center: Complex64, order: usize) -> Result<Jet>;

    /// Isolated singularities, used to vet quadrature contours.
    fn singularities(&self) -> Vec<Complex64> {
        Vec::new()
    }
}

/// `z -> e^{z t}` for a fixed real `t`.
#[derive(Debug, Clone, Copy)]
pub struct ExpFn {
    pub t: f64,
}

impl ExpFn {
    pub fn new(t: f64) -> Self {
        Self { t }
    }
}

impl AnalyticFn for ExpFn {
    fn jet(&self, center: Complex64, order: usize) -> Result<Jet> {
        // coeff[r] = t^r e^{ct} / r!, built by the stable forward recurrence.
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[0] = (center * self.t).exp();
        for r in 1..=order {
            coeffs[r] = coeffs[r - 1] * self.t / r as f64;
        }
        Ok(Jet::new(center, coeffs))
    }
}

/// `z -> 1 / prod_i (z - poles[i])`; the empty product is the constant 1.
#[derive(Debug, Clone)]
pub struct ReciprocalPoles {
    poles: Vec<Complex64>,
}

impl ReciprocalPoles {
    pub fn new(poles: Vec<Complex64>) -> Self {
        Self { poles }
    }
}

impl AnalyticFn for ReciprocalPoles {
    fn jet(&self, center: Complex64, order: usize) -> Result<Jet> {
        let numerator = Jet::constant(center, Complex64::ONE, order);
        numerator.div(&poles_product_jet(center, order, &self.poles))
    }

    fn singularities(&self) -> Vec<Complex64> {
        self.poles.clone()
    }
}

/// `z -> e^{z t} / prod_i (z - poles[i])`.
///
/// With the poles taken from one spectral half, this is the function whose
/// divided differences at the other half's roots are the coefficients of the
/// reduced factor of the Green's-function polynomial.
#[derive(Debug, Clone)]
pub struct ExpOverPoles {
    pub t: f64,
    poles: Vec<Complex64>,
}

impl ExpOverPoles {
    pub fn new(t: f64, poles: Vec<Complex64>) -> Self {
        Self { t, poles }
    }
}

impl AnalyticFn for ExpOverPoles {
    fn jet(&self, center: Complex64, order: usize) -> Result<Jet> {
        let numerator = ExpFn::new(self.t).jet(center, order)?;
        if self.poles.is_empty() {
            return Ok(numerator);
        }
        numerator.div(&poles_product_jet(center, order, &self.poles))
    }

    fn singularities(&self) -> Vec<Complex64> {
        self.poles.clone()
    }
}

/// The indicator of the open left half-plane: 1 for `Re z < 0`, 0 otherwise.
///
/// Locally constant away from the imaginary axis, so every jet is a constant
/// jet; interpolating it on a spectrum realizes the spectral projector.
#[derive(Debug, Clone, Copy, Default)]
pub struct LeftHalfPlaneIndicator;

impl AnalyticFn for LeftHalfPlaneIndicator {
    fn jet(&self, center: Complex64, order: usize) -> Result<Jet> {
        let value = if center.re < 0.0 {
            Complex64::ONE
        } else {
            Complex64::ZERO
        };
        Ok(Jet::constant(center, value, order))
    }
}

/// Polynomial in the monomial basis, ascending coefficients.
#[derive(Debug, Clone)]
pub struct PolyFn {
    coeffs: Vec<Complex64>,
}

impl PolyFn {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "polynomial needs at least one coefficient");
        Self { coeffs }
    }

    /// `z^2`, the standard smoke-test function.
    pub fn square() -> Self {
        Self::new(vec![Complex64::ZERO, Complex64::ZERO, Complex64::ONE])
    }
}

impl AnalyticFn for PolyFn {
    fn jet(&self, center: Complex64, order: usize) -> Result<Jet> {
        let x = Jet::variable(center, order);
        let mut acc = Jet::constant(center, *self.coeffs.last().unwrap(), order);
        for &c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(&x).add(&Jet::constant(center, c, order));
        }
        Ok(acc)
    }
}

fn poles_product_jet(center: Complex64, order: usize, poles: &[Complex64]) -> Jet {
    let mut prod = Jet::constant(center, Complex64::ONE, order);
    for &p in poles {
        let linear = Jet::variable(center, order).sub(&Jet::constant(center, p, order));
        prod = prod.mul(&linear);
    }
    prod
}
