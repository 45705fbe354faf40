use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

/// Dense row-major `f64` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds from a flat row-major buffer. Panics if the length mismatches.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "buffer length mismatch");
        Self { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    /// `self * rhs`, i-k-j loop order to stay cache friendly.
    pub fn matmul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        let rc = rhs.cols;
        for i in 0..self.rows {
            let lhs_row = &self.data[i * self.cols..(i + 1) * self.cols];
            let out_row = &mut out.data[i * rc..(i + 1) * rc];
            for (k, &a) in lhs_row.iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                let rhs_row = &rhs.data[k * rc..(k + 1) * rc];
                for (o, &r) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * r;
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `v * self` for a row vector `v`.
    pub fn vec_mul(v: &[f64], m: &Mat) -> Vec<f64> {
        assert_eq!(m.rows, v.len(), "vector length mismatch");
        let mut out = vec![0.0; m.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(m.row(i)) {
                *o += a * b;
            }
        }
        out
    }

    pub fn scale(&mut self, a: f64) {
        for x in &mut self.data {
            *x *= a;
        }
    }

    /// `self += a * other`.
    pub fn add_scaled(&mut self, other: &Mat, a: f64) {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        for (x, &y) in self.data.iter_mut().zip(&other.data) {
            *x += a * y;
        }
    }

    /// Replaces the matrix by `(M + Mᵀ) / 2`.
    pub fn symmetrize(&mut self) {
        assert!(self.is_square());
        let n = self.rows;
        for i in 0..n {
            for j in (i + 1)..n {
                let avg = 0.5 * (self.data[i * n + j] + self.data[j * n + i]);
                self.data[i * n + j] = avg;
                self.data[j * n + i] = avg;
            }
        }
    }

    /// Maximum absolute column sum (the induced 1-norm).
    pub fn one_norm(&self) -> f64 {
        let mut sums = vec![0.0; self.cols];
        for i in 0..self.rows {
            for (s, &x) in sums.iter_mut().zip(self.row(i)) {
                *s += x.abs();
            }
        }
        sums.into_iter().fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, other: &Mat) -> f64 {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (&a, &b)| m.max((a - b).abs()))
    }

    /// Solves `self * X = rhs` by LU with partial pivoting.
    ///
    /// Returns `None` when a pivot collapses to zero (singular system).
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert!(self.is_square(), "solve requires a square matrix");
        assert_eq!(self.rows, rhs.rows, "rhs row count mismatch");
        let n = self.rows;
        let mut lu = self.clone();
        let mut x = rhs.clone();
        for col in 0..n {
            let mut pivot_row = col;
            let mut pivot_val = lu.data[col * n + col].abs();
            for r in (col + 1)..n {
                let v = lu.data[r * n + col].abs();
                if v > pivot_val {
                    pivot_val = v;
                    pivot_row = r;
                }
            }
            if pivot_val == 0.0 {
                return None;
            }
            if pivot_row != col {
                for j in 0..n {
                    lu.data.swap(col * n + j, pivot_row * n + j);
                }
                for j in 0..x.cols {
                    x.data.swap(col * x.cols + j, pivot_row * x.cols + j);
                }
            }
            let inv = 1.0 / lu.data[col * n + col];
            for r in (col + 1)..n {
                let factor = lu.data[r * n + col] * inv;
                if factor == 0.0 {
                    continue;
                }
                lu.data[r * n + col] = 0.0;
                for j in (col + 1)..n {
                    lu.data[r * n + j] -= factor * lu.data[col * n + j];
                }
                for j in 0..x.cols {
                    x.data[r * x.cols + j] -= factor * x.data[col * x.cols + j];
                }
            }
        }
        // Back substitution.
        for col in (0..n).rev() {
            let inv = 1.0 / lu.data[col * n + col];
            for j in 0..x.cols {
                x.data[col * x.cols + j] *= inv;
            }
            for r in 0..col {
                let factor = lu.data[r * n + col];
                if factor == 0.0 {
                    continue;
                }
                for j in 0..x.cols {
                    x.data[r * x.cols + j] -= factor * x.data[col * x.cols + j];
                }
            }
        }
        Some(x)
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = f64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}
