use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::eigen::hermitian_eigenvalues;
use super::matrix::SquareMatrix;
use super::operators::inner;
use super::sequence::UnitVectorSequence;
use crate::error::{FrameError, Result};
use crate::scalar::{abs2, Real};

/// `G[i][j] = ⟨f_i, f_j⟩`, exactly Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix<T>(SquareMatrix<T>);

/// Gram matrix of a sequence. The upper triangle is computed (rows in
/// parallel, fixed summation order per entry) and mirrored, so the result
/// is bit-identical for any thread count.
pub fn gram<T: Real>(seq: &UnitVectorSequence<T>) -> GramMatrix<T> {
    let n = seq.len();
    let vectors = seq.vectors();
    let upper: Vec<Vec<Complex<T>>> = (0..n)
        .into_par_iter()
        .map(|i| (i..n).map(|j| inner(&vectors[i], &vectors[j])).collect())
        .collect();
    let mut m = SquareMatrix::zeros(n);
    for (i, row) in upper.into_iter().enumerate() {
        for (offset, z) in row.into_iter().enumerate() {
            let j = i + offset;
            if i == j {
                m[(i, i)] = Complex::new(z.re, T::zero());
            } else {
                m[(i, j)] = z;
                m[(j, i)] = z.conj();
            }
        }
    }
    GramMatrix(m)
}

impl<T: Real> GramMatrix<T> {
    /// Wraps an arbitrary matrix after checking Hermitian symmetry within
    /// [`Real::symmetry_tol`]. The lower triangle is then rebuilt from the
    /// upper one so the stored matrix is exactly Hermitian.
    pub fn from_matrix(m: SquareMatrix<T>) -> Result<Self> {
        let scale = m.max_abs().max(T::one());
        if let Some((row, col)) = m.hermitian_defect(T::symmetry_tol() * scale) {
            return Err(FrameError::SymmetryViolation { row, col });
        }
        let mut m = m;
        for i in 0..m.n() {
            m[(i, i)] = Complex::new(m[(i, i)].re, T::zero());
            for j in i + 1..m.n() {
                m[(j, i)] = m[(i, j)].conj();
            }
        }
        Ok(Self(m))
    }

    pub fn from_real_rows(rows: &[Vec<T>]) -> Result<Self> {
        Self::from_matrix(SquareMatrix::from_real_rows(rows)?)
    }

    pub fn len(&self) -> usize {
        self.0.n()
    }

    pub fn is_empty(&self) -> bool {
        self.0.n() == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.0[(i, j)]
    }

    pub fn matrix(&self) -> &SquareMatrix<T> {
        &self.0
    }

    /// Principal submatrix `G_block` (the Gram matrix of the sub-sequence).
    pub fn block(&self, block: &[usize]) -> GramMatrix<T> {
        GramMatrix(self.0.principal(block))
    }

    /// Full spectrum, ascending.
    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        hermitian_eigenvalues(&self.0)
    }

    /// `λ_min ≥ −psd_tol`.
    pub fn is_psd(&self) -> Result<bool> {
        Ok(self.eigenvalues()?.first().is_none_or(|&l| l >= -T::psd_tol()))
    }

    /// `‖Σ c_k f_k‖² = Σ_{k,l} c_k · conj(c_l) · G_kl`.
    ///
    /// With `G_kl = ⟨f_k, f_l⟩` linear in the first slot this is `cᵀ G c̄`
    /// (equivalently `cᴴ Gᵀ c`); `Gᵀ` is the matrix of `ΘT` and shares the
    /// spectrum of `G`.
    pub fn synthesis_energy(&self, c: &[Complex<T>]) -> T {
        let n = self.len();
        let mut acc = Complex::new(T::zero(), T::zero());
        for k in 0..n {
            let row = self.0.row(k);
            let inner = (0..n).fold(Complex::new(T::zero(), T::zero()), |s, l| s + row[l] * c[l].conj());
            acc += c[k] * inner;
        }
        acc.re
    }
}

/// Whether weights are `|G_ij|` or `|G_ij|²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightPower {
    Abs = 1,
    Squared = 2,
}

impl WeightPower {
    pub fn exponent(self) -> u32 {
        self as u32
    }
}

/// Symmetric nonnegative interaction weights `a_ij` with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix<T> {
    n: usize,
    data: Vec<T>,
    power: WeightPower,
}

/// `a_ij = |G_ij|^power` off the diagonal, `a_ii = 0`.
pub fn weight_matrix<T: Real>(g: &GramMatrix<T>, power: WeightPower) -> WeightMatrix<T> {
    let n = g.len();
    let mut data = vec![T::zero(); n * n];
    for i in 0..n {
        for j in i + 1..n {
            let z = g.get(i, j);
            let w = match power {
                WeightPower::Abs => z.norm(),
                WeightPower::Squared => abs2(z),
            };
            data[i * n + j] = w;
            data[j * n + i] = w;
        }
    }
    WeightMatrix { n, data, power }
}

impl<T: Real> WeightMatrix<T> {
    /// Validates a raw row-major weight matrix: exact symmetry, zero
    /// diagonal, finite nonnegative entries.
    pub fn new(n: usize, data: Vec<T>, power: WeightPower) -> Result<Self> {
        if data.len() != n * n {
            return Err(FrameError::DimensionError {
                expected: n * n,
                found: data.len(),
            });
        }
        for i in 0..n {
            if data[i * n + i] != T::zero() {
                return Err(FrameError::WeightMatrix(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                let w = data[i * n + j];
                if !w.is_finite() || w < T::zero() {
                    return Err(FrameError::WeightMatrix(format!("invalid entry at ({i}, {j})")));
                }
                if w != data[j * n + i] {
                    return Err(FrameError::WeightMatrix(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self { n, data, power })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn power(&self) -> WeightPower {
        self.power
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    /// `Σ_{i ∈ indices} a_ij`, summed in the order given.
    pub fn row_sum_over(&self, j: usize, indices: &[usize]) -> T {
        let row = &self.data[j * self.n..(j + 1) * self.n];
        indices.iter().fold(T::zero(), |acc, &i| acc + row[i])
    }

    /// Full row sum `Σ_i a_ij`.
    pub fn row_sum(&self, j: usize) -> T {
        self.data[j * self.n..(j + 1) * self.n]
            .iter()
            .fold(T::zero(), |acc, &w| acc + w)
    }

    /// `max_j Σ_i a_ij`.
    pub fn max_row_sum(&self) -> T {
        (0..self.n).fold(T::zero(), |m, j| m.max(self.row_sum(j)))
    }
}
