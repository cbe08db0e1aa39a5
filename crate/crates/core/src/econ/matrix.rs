//! Minimal row-major dense matrix and the factorizations the VAR code needs.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == 0.0 {
                    continue;
                }
                let src = other.row(l);
                let dst = out.row_mut(i);
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += a * s;
                }
            }
        }
        out
    }

    /// `selfᵀ · self`.
    pub fn gram(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.cols);
        for r in 0..self.rows {
            let row = self.row(r);
            for i in 0..self.cols {
                for j in 0..self.cols {
                    out[(i, j)] += row[i] * row[j];
                }
            }
        }
        out
    }

    pub fn scale(&mut self, s: f64) {
        self.data.iter_mut().for_each(|v| *v *= s);
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|v| v * v).sum())
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Solves `min ‖X B − Y‖` column by column with Householder QR.
///
/// Fails with [`Error::Singular`] when a diagonal entry of R is negligible
/// relative to the largest one.
pub fn least_squares(x: &Matrix, y: &Matrix) -> Result<Matrix, Error> {
    let (n, m) = (x.rows(), x.cols());
    assert_eq!(y.rows(), n);
    if n < m {
        return Err(Error::Singular);
    }
    let mut a = x.clone();
    let mut b = y.clone();
    let mut diag = vec![0.0; m];
    for k in 0..m {
        let norm = libm::sqrt((k..n).map(|i| a[(i, k)] * a[(i, k)]).sum::<f64>());
        if norm == 0.0 {
            diag[k] = 0.0;
            continue;
        }
        let alpha = if a[(k, k)] > 0.0 { -norm } else { norm };
        // v = a[k.., k] - alpha e_1, stored in place
        a[(k, k)] -= alpha;
        let vnorm2: f64 = (k..n).map(|i| a[(i, k)] * a[(i, k)]).sum();
        diag[k] = alpha;
        if vnorm2 == 0.0 {
            continue;
        }
        for j in k + 1..m {
            let dot: f64 = (k..n).map(|i| a[(i, k)] * a[(i, j)]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in k..n {
                a[(i, j)] -= f * a[(i, k)];
            }
        }
        for j in 0..b.cols() {
            let dot: f64 = (k..n).map(|i| a[(i, k)] * b[(i, j)]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in k..n {
                b[(i, j)] -= f * a[(i, k)];
            }
        }
    }
    let largest = diag.iter().fold(0.0f64, |acc, d| acc.max(d.abs()));
    let tol = largest * f64::EPSILON * (n.max(m) as f64) * 10.0;
    if largest == 0.0 || diag.iter().any(|d| d.abs() <= tol) {
        return Err(Error::Singular);
    }
    let mut coef = Matrix::zeros(m, b.cols());
    for j in 0..b.cols() {
        for i in (0..m).rev() {
            let mut s = b[(i, j)];
            for l in i + 1..m {
                s -= a[(i, l)] * coef[(l, j)];
            }
            coef[(i, j)] = s / diag[i];
        }
    }
    Ok(coef)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_exact_system() {
        let x = Matrix::from_rows(&[vec![1.0, 0.0], vec![1.0, 1.0], vec![1.0, 2.0]]);
        let y = Matrix::from_rows(&[vec![1.0], vec![3.0], vec![5.0]]);
        let b = least_squares(&x, &y).unwrap();
        assert!((b[(0, 0)] - 1.0).abs() < 1e-12 && (b[(1, 0)] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn detects_collinearity() {
        let x = Matrix::from_rows(&[vec![1.0, 2.0], vec![1.0, 2.0], vec![1.0, 2.0]]);
        let y = Matrix::from_rows(&[vec![1.0], vec![3.0], vec![5.0]]);
        assert_eq!(least_squares(&x, &y), Err(Error::Singular));
    }

    #[test]
    fn matmul_and_transpose() {
        let a = Matrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert_eq!(a.matmul(&Matrix::identity(2)), a);
        assert_eq!(a.transpose().matmul(&a), a.gram());
    }
}
