//! Matrix exponential `e^{At}` by scaling and squaring with a degree-13
//! Pade kernel. Serves as the cross-validation oracle for the interpolation
//! route to matrix functions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Degree-13 Pade numerator coefficients (denominator is the same with
/// alternating signs).
const PADE13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

/// 1-norm threshold below which the degree-13 approximant is accurate to
/// machine precision.
const THETA13: f64 = 5.371_920_351_148_152;

const MAX_SQUARINGS: i32 = 60;

/// `e^{A t}` for finite `t`; relative accuracy ~1e-13 for `||At|| <= 50`.
pub fn expm(a: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    if !t.is_finite() {
        return Err(Error::InvalidInput("time must be finite".into()));
    }
    if !a.is_finite() {
        return Err(Error::InvalidInput("matrix entries must be finite".into()));
    }
    let b = a.scale(Complex64::new(t, 0.0));
    let eta = b.one_norm();
    let squarings = if eta > THETA13 {
        (eta / THETA13).log2().ceil() as i32
    } else {
        0
    };
    if !eta.is_finite() || squarings > MAX_SQUARINGS {
        return Err(Error::Range(format!(
            "||At|| = {eta:.3e} exceeds the scaling budget"
        )));
    }
    let b = b.scale(Complex64::new(0.5f64.powi(squarings), 0.0));

    let n = a.dim();
    let id = ComplexMatrix::identity(n);
    let b2 = &b * &b;
    let b4 = &b2 * &b2;
    let b6 = &b2 * &b4;

    let coef = |k: usize| Complex64::new(PADE13[k], 0.0);
    let u_inner = &(&b6.scale(coef(13)) + &b4.scale(coef(11))) + &b2.scale(coef(9));
    let u_low = &(&(&b6.scale(coef(7)) + &b4.scale(coef(5))) + &b2.scale(coef(3))) + &id.scale(coef(1));
    let u = &b * &(&(&b6 * &u_inner) + &u_low);
    let v_inner = &(&b6.scale(coef(12)) + &b4.scale(coef(10))) + &b2.scale(coef(8));
    let v_low = &(&(&b6.scale(coef(6)) + &b4.scale(coef(4))) + &b2.scale(coef(2))) + &id.scale(coef(0));
    let v = &(&b6 * &v_inner) + &v_low;

    let mut x = (&v - &u)
        .solve(&(&v + &u))
        .map_err(|_| Error::Range("Pade denominator is singular".into()))?;
    for _ in 0..squarings {
        x = &x * &x;
    }
    if !x.is_finite() {
        return Err(Error::Range("matrix exponential overflows".into()));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_matrix_gives_identity() {
        let a = ComplexMatrix::zeros(2);
        let e = expm(&a, 3.7).unwrap();
        assert!((&e - &ComplexMatrix::identity(2)).op_norm().unwrap() < 1e-14);
    }

    #[test]
    fn diagonal_exponentials() {
        let a = ComplexMatrix::from_diagonal(&[c(-1.0, 0.0), c(2.0, 0.0)]);
        let e = expm(&a, 1.0).unwrap();
        assert!((e[(0, 0)] - c((-1.0f64).exp(), 0.0)).norm() < 1e-12);
        assert!((e[(1, 1)] - c(2.0f64.exp(), 0.0)).norm() < 1e-10);
        assert!(e[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn nilpotent_series_terminates() {
        let a = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        let e = expm(&a, 3.0).unwrap();
        let expected =
            ComplexMatrix::from_real_rows(&[&[1.0, 3.0], &[0.0, 1.0]]).unwrap();
        assert!((&e - &expected).op_norm().unwrap() < 1e-13);
    }

    #[test]
    fn overflow_is_a_range_error() {
        let a = ComplexMatrix::from_diagonal(&[c(1.0, 0.0)]);
        assert!(matches!(expm(&a, 1e6), Err(Error::Range(_))));
    }

    #[test]
    fn semigroup_identity_on_a_fixed_matrix() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(0.3, 0.1), c(-1.0, 0.4)],
            vec![c(0.7, -0.2), c(-0.5, 0.0)],
        ])
        .unwrap();
        let (s, t) = (0.8, 1.7);
        let left = expm(&a, s + t).unwrap();
        let right = &expm(&a, s).unwrap() * &expm(&a, t).unwrap();
        let rel = (&left - &right).op_norm().unwrap() / left.op_norm().unwrap();
        assert!(rel < 1e-12);
    }
}
