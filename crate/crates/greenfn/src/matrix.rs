//! Dense square complex matrices at desk scale (N <= 64).
//!
//! Storage is row-major. The JSON form consumed by the CLI is
//! `{"n": <dim>, "entries": [[[re, im], ...], ...]}` with `n` rows of `n`
//! `[re, im]` pairs.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dense square matrix over the complex numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// The zero matrix of dimension `n >= 1`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        Self {
            n,
            entries: vec![Complex64::ZERO; n * n],
        }
    }

    /// The identity matrix of dimension `n >= 1`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    /// Build from a row-major closure.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from row-major complex rows; all rows must have length `rows.len()`.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("matrix dimension must be at least 1".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("matrix rows must all have length n".into()));
        }
        let m = Self {
            n,
            entries: rows.iter().flatten().copied().collect(),
        };
        if !m.is_finite() {
            return Err(Error::InvalidInput("matrix entries must be finite".into()));
        }
        Ok(m)
    }

    /// Build from row-major real rows (imaginary parts zero). Test/CLI convenience.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex)
    }

    /// Diagonal matrix with the given entries.
    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    /// Entry-wise scaling by a complex factor.
    pub fn scale(&self, z: Complex64) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|&e| e * z).collect(),
        }
    }

    /// `self - z * I`.
    pub fn shifted(&self, z: Complex64) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m[(i, i)] -= z;
        }
        m
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.n, "vector length must match matrix dimension");
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Maximum column sum of absolute values (induced 1-norm).
    pub fn one_norm(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Spectral norm: the largest singular value, i.e. the operator norm
    /// induced by the Euclidean vector norm.
    ///
    /// Computed as the square root of the largest eigenvalue of the
    /// Hermitian matrix `A* A`.
    pub fn op_norm(&self) -> Result<f64> {
        if !self.is_finite() {
            return Err(Error::InvalidInput("matrix entries must be finite".into()));
        }
        let dm = nalgebra::DMatrix::from_fn(self.n, self.n, |i, j| self[(i, j)]);
        let gram = dm.adjoint() * dm;
        let eigs = gram.symmetric_eigenvalues();
        let lambda_max = eigs.iter().fold(0.0f64, |a, &b| a.max(b));
        Ok(lambda_max.max(0.0).sqrt())
    }

    /// LU decomposition with partial pivoting; errors on a singular matrix.
    fn lu(&self) -> Result<Lu> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0usize;
        for k in 0..n {
            let (pivot_row, pivot_abs) = (k..n)
                .map(|i| (i, a[i * n + k].norm()))
                .fold((k, -1.0), |best, cand| if cand.1 > best.1 { cand } else { best });
            if pivot_abs == 0.0 {
                return Err(Error::InvalidInput("matrix is singular".into()));
            }
            if pivot_row != k {
                for j in 0..n {
                    a.swap(k * n + j, pivot_row * n + j);
                }
                perm.swap(k, pivot_row);
                swaps += 1;
            }
            let pivot = a[k * n + k];
            for i in (k + 1)..n {
                let factor = a[i * n + k] / pivot;
                a[i * n + k] = factor;
                for j in (k + 1)..n {
                    let sub = factor * a[k * n + j];
                    a[i * n + j] -= sub;
                }
            }
        }
        Ok(Lu { n, a, perm, swaps })
    }

    /// Solve `self * X = rhs` by LU with partial pivoting.
    pub fn solve(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rhs.n != self.n {
            return Err(Error::InvalidInput("dimension mismatch in solve".into()));
        }
        let lu = self.lu()?;
        let mut x = ComplexMatrix::zeros(self.n);
        let mut col = vec![Complex64::ZERO; self.n];
        for j in 0..self.n {
            for i in 0..self.n {
                col[i] = rhs[(i, j)];
            }
            let sol = lu.solve_vec(&col);
            for i in 0..self.n {
                x[(i, j)] = sol[i];
            }
        }
        Ok(x)
    }

    /// Solve `self * x = rhs` for a single vector.
    pub fn solve_vec(&self, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
        if rhs.len() != self.n {
            return Err(Error::InvalidInput("dimension mismatch in solve".into()));
        }
        Ok(self.lu()?.solve_vec(rhs))
    }

    pub fn inverse(&self) -> Result<ComplexMatrix> {
        self.solve(&ComplexMatrix::identity(self.n))
    }

    /// Determinant via LU; 0 for a singular matrix.
    pub fn det(&self) -> Complex64 {
        match self.lu() {
            Ok(lu) => {
                let mut d = if lu.swaps % 2 == 0 {
                    Complex64::ONE
                } else {
                    -Complex64::ONE
                };
                for i in 0..lu.n {
                    d *= lu.a[i * lu.n + i];
                }
                d
            }
            Err(_) => Complex64::ZERO,
        }
    }
}

struct Lu {
    n: usize,
    a: Vec<Complex64>,
    perm: Vec<usize>,
    swaps: usize,
}

impl Lu {
    fn solve_vec(&self, rhs: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut y: Vec<Complex64> = self.perm.iter().map(|&p| rhs[p]).collect();
        for i in 1..n {
            for j in 0..i {
                let sub = self.a[i * n + j] * y[j];
                y[i] -= sub;
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let sub = self.a[i * n + j] * y[j];
                y[i] -= sub;
            }
            y[i] /= self.a[i * n + i];
        }
        y
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.n + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ComplexMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ComplexMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += aik * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale(-Complex64::ONE)
    }
}

/// Serialization mirror fixing the on-disk JSON layout.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

impl TryFrom<MatrixRepr> for ComplexMatrix {
    type Error = Error;

    fn try_from(repr: MatrixRepr) -> Result<Self> {
        if repr.n == 0 {
            return Err(Error::InvalidInput("matrix dimension must be at least 1".into()));
        }
        if repr.entries.len() != repr.n || repr.entries.iter().any(|r| r.len() != repr.n) {
            return Err(Error::InvalidInput(format!(
                "matrix entries must form an {0}x{0} grid",
                repr.n
            )));
        }
        let rows: Vec<Vec<Complex64>> = repr
            .entries
            .iter()
            .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
            .collect();
        Self::from_rows(&rows)
    }
}

impl From<ComplexMatrix> for MatrixRepr {
    fn from(m: ComplexMatrix) -> Self {
        MatrixRepr {
            n: m.n,
            entries: (0..m.n)
                .map(|i| (0..m.n).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn op_norm_identity() {
        let id = ComplexMatrix::identity(3);
        assert!((id.op_norm().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn op_norm_diagonal_is_max_modulus() {
        let a = ComplexMatrix::from_diagonal(&[c(-1.0, 0.0), c(2.0, 0.0)]);
        assert!((a.op_norm().unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn op_norm_nilpotent() {
        let a = ComplexMatrix::from_real_rows(&[&[0.0, 3.0], &[0.0, 0.0]]).unwrap();
        assert!((a.op_norm().unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn op_norm_rejects_non_finite() {
        let mut a = ComplexMatrix::zeros(2);
        a[(0, 0)] = c(f64::NAN, 0.0);
        assert!(matches!(a.op_norm(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn solve_round_trip() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(2.0, 1.0), c(0.5, -0.3)],
            vec![c(-1.0, 0.0), c(3.0, 2.0)],
        ])
        .unwrap();
        let inv = a.inverse().unwrap();
        let prod = &a * &inv;
        let id = ComplexMatrix::identity(2);
        assert!((&prod - &id).op_norm().unwrap() < 1e-12);
    }

    #[test]
    fn singular_solve_fails() {
        let a = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[2.0, 4.0]]).unwrap();
        assert!(a.inverse().is_err());
        assert_eq!(a.det(), Complex64::ZERO);
    }

    #[test]
    fn json_format_round_trip() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(1.0, -2.0), c(0.0, 0.25)],
            vec![c(-0.5, 0.0), c(3.0, 4.0)],
        ])
        .unwrap();
        let text = serde_json::to_string(&a).unwrap();
        assert!(text.contains("\"n\":2"));
        let back: ComplexMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn json_rejects_ragged_entries() {
        let text = r#"{"n": 2, "entries": [[[1.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]}"#;
        assert!(serde_json::from_str::<ComplexMatrix>(text).is_err());
    }
}
