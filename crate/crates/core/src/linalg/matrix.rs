use std::ops::{Index, IndexMut};

use num_complex::Complex;

use crate::error::{FrameError, Result};
use crate::scalar::{is_finite, Real};

/// Dense row-major square matrix over `Complex<T>`.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex::new(T::zero(), T::zero()); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_vec(n: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if data.len() != n * n {
            return Err(FrameError::DimensionError {
                expected: n * n,
                found: data.len(),
            });
        }
        if let Some(k) = data.iter().position(|z| !is_finite(*z)) {
            return Err(FrameError::NonFinite(format!("matrix entry ({}, {})", k / n, k % n)));
        }
        Ok(Self { n, data })
    }

    /// Builds a matrix from real rows (zero imaginary parts).
    pub fn from_real_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(FrameError::DimensionError {
                    expected: n,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| Complex::new(x, T::zero())));
        }
        Self::from_vec(n, data)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    /// Frobenius norm, an upper bound for the operator norm.
    pub fn frobenius(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
    }

    /// Principal submatrix on `block` (order preserved).
    pub fn principal(&self, block: &[usize]) -> Self {
        let k = block.len();
        let mut data = Vec::with_capacity(k * k);
        for &i in block {
            for &j in block {
                data.push(self[(i, j)]);
            }
        }
        Self { n: k, data }
    }

    /// `M v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// First `(row, col)` where `|M_ij − conj(M_ji)| > tol`, if any.
    pub fn hermitian_defect(&self, tol: T) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in i..self.n {
                if (self[(i, j)] - self[(j, i)].conj()).norm() > tol {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = Complex<T>;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.n + j]
    }
}
