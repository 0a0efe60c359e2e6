//! Truncated Taylor expansions (jets) with exact arithmetic at a shared
//! expansion point. `coeffs[r]` stores `f^(r)(center) / r!`, so jets feed
//! confluent divided-difference tables directly.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    center: Complex64,
    coeffs: Vec<Complex64>,
}

impl Jet {
    pub fn new(center: Complex64, coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a jet carries at least its value");
        Self { center, coeffs }
    }

    /// The constant function `value`, expanded to `order`.
    pub fn constant(center: Complex64, value: Complex64, order: usize) -> Self {
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[0] = value;
        Self { center, coeffs }
    }

    /// The identity function `z`, expanded at `center` to `order`.
    pub fn variable(center: Complex64, order: usize) -> Self {
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[0] = center;
        if order >= 1 {
            coeffs[1] = Complex64::ONE;
        }
        Self { center, coeffs }
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `f(center)`.
    pub fn value(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// `f^(r)(center) / r!`.
    pub fn coeff(&self, r: usize) -> Complex64 {
        self.coeffs[r]
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `f^(r)(center)`, i.e. `coeff(r) * r!`.
    pub fn derivative(&self, r: usize) -> Complex64 {
        self.coeffs[r] * factorial(r)
    }

    fn assert_compatible(&self, other: &Jet) {
        assert!(
            self.center == other.center && self.coeffs.len() == other.coeffs.len(),
            "jet arithmetic requires a shared center and order"
        );
    }

    pub fn add(&self, other: &Jet) -> Jet {
        self.assert_compatible(other);
        Jet {
            center: self.center,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Jet) -> Jet {
        self.assert_compatible(other);
        Jet {
            center: self.center,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Jet) -> Jet {
        self.assert_compatible(other);
        let len = self.coeffs.len();
        let mut coeffs = vec![Complex64::ZERO; len];
        for i in 0..len {
            if self.coeffs[i] == Complex64::ZERO {
                continue;
            }
            for j in 0..(len - i) {
                coeffs[i + j] += self.coeffs[i] * other.coeffs[j];
            }
        }
        Jet {
            center: self.center,
            coeffs,
        }
    }

    /// Truncated power-series division. The forward recurrence computes each
    /// coefficient from lower ones only, so lower-order prefixes are exact.
    pub fn div(&self, other: &Jet) -> Result<Jet> {
        self.assert_compatible(other);
        if other.coeffs[0] == Complex64::ZERO {
            return Err(Error::Evaluation(format!(
                "division by a series vanishing at its center {}",
                other.center
            )));
        }
        let len = self.coeffs.len();
        let mut coeffs = vec![Complex64::ZERO; len];
        for k in 0..len {
            let mut acc = self.coeffs[k];
            for j in 0..k {
                acc -= coeffs[j] * other.coeffs[k - j];
            }
            coeffs[k] = acc / other.coeffs[0];
        }
        Ok(Jet {
            center: self.center,
            coeffs,
        })
    }

    pub fn scale(&self, z: Complex64) -> Jet {
        Jet {
            center: self.center,
            coeffs: self.coeffs.iter().map(|&a| a * z).collect(),
        }
    }

    pub fn neg(&self) -> Jet {
        self.scale(-Complex64::ONE)
    }
}

pub(crate) fn factorial(r: usize) -> f64 {
    (1..=r).fold(1.0, |acc, i| acc * i as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn variable_squared() {
        let x = Jet::variable(c(2.0, 0.0), 3);
        let sq = x.mul(&x);
        // z^2 at 2: value 4, first derivative 4, second derivative 2 (coeff 1).
        assert_eq!(sq.value(), c(4.0, 0.0));
        assert_eq!(sq.coeff(1), c(4.0, 0.0));
        assert_eq!(sq.coeff(2), c(1.0, 0.0));
        assert_eq!(sq.coeff(3), c(0.0, 0.0));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Jet::new(c(1.0, 0.5), vec![c(2.0, 1.0), c(0.3, 0.0), c(-0.7, 0.2)]);
        let b = Jet::new(c(1.0, 0.5), vec![c(1.5, -0.4), c(0.9, 0.1), c(0.2, 0.0)]);
        let q = a.div(&b).unwrap();
        let back = q.mul(&b);
        for r in 0..=2 {
            assert!((back.coeff(r) - a.coeff(r)).norm() < 1e-14);
        }
    }

    #[test]
    fn division_by_vanishing_series_fails() {
        let a = Jet::constant(c(0.0, 0.0), c(1.0, 0.0), 2);
        let b = Jet::new(c(0.0, 0.0), vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(a.div(&b).is_err());
    }

    #[test]
    fn derivative_scales_by_factorial() {
        let j = Jet::new(c(0.0, 0.0), vec![c(1.0, 0.0), c(1.0, 0.0), c(0.5, 0.0), c(1.0 / 6.0, 0.0)]);
        assert!((j.derivative(3) - c(1.0, 0.0)).norm() < 1e-15);
    }
}
