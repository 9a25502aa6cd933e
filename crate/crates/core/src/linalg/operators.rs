//! Inner product, synthesis operator `T` and analysis operator `Θ = T*`.

use num_complex::Complex;

use super::sequence::{CoefficientVector, UnitVectorSequence};
use crate::error::{FrameError, Result};
use crate::scalar::Real;

/// `⟨x, y⟩ = Σ x_k · conj(y_k)`: linear in the first argument,
/// conjugate-linear in the second. Summation runs in index order.
#[inline]
pub fn inner<T: Real>(x: &[Complex<T>], y: &[Complex<T>]) -> Complex<T> {
    debug_assert_eq!(x.len(), y.len());
    x.iter()
        .zip(y)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a * b.conj())
}

/// `T c = Σ c_k f_k` in coordinates.
pub fn synthesis<T: Real>(seq: &UnitVectorSequence<T>, c: &CoefficientVector<T>) -> Result<Vec<Complex<T>>> {
    if c.len() != seq.len() {
        return Err(FrameError::DimensionError {
            expected: seq.len(),
            found: c.len(),
        });
    }
    let mut out = vec![Complex::new(T::zero(), T::zero()); seq.dim()];
    for (ck, fk) in c.as_slice().iter().zip(seq.vectors()) {
        for (o, f) in out.iter_mut().zip(fk) {
            *o += ck * f;
        }
    }
    Ok(out)
}

/// `Θ x = (⟨x, f_i⟩)_i`.
pub fn analysis_op<T: Real>(seq: &UnitVectorSequence<T>, x: &[Complex<T>]) -> Result<CoefficientVector<T>> {
    if x.len() != seq.dim() {
        return Err(FrameError::DimensionError {
            expected: seq.dim(),
            found: x.len(),
        });
    }
    CoefficientVector::new(seq.vectors().iter().map(|f| inner(x, f)).collect())
}
