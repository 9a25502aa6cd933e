use num_complex::Complex;

use crate::error::{FrameError, Result};
use crate::scalar::{abs2, is_finite, Field, Real};

/// Ordered finite family of unit-norm vectors `{f_n}` in `K^dim`.
///
/// Construction enforces the invariants; once built the sequence is
/// immutable. Real-field sequences carry zero imaginary parts.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVectorSequence<T> {
    dim: usize,
    field: Field,
    vectors: Vec<Vec<Complex<T>>>,
    labels: Option<Vec<String>>,
}

impl<T: Real> UnitVectorSequence<T> {
    /// Validates and wraps `vectors`. Norms must be within
    /// [`Real::unit_norm_tol`] of one; no rescaling happens here.
    pub fn new(dim: usize, field: Field, vectors: Vec<Vec<Complex<T>>>, labels: Option<Vec<String>>) -> Result<Self> {
        Self::check_shape(dim, field, &vectors, labels.as_deref())?;
        let tol = T::unit_norm_tol();
        let violations: Vec<(usize, f64)> = vectors
            .iter()
            .enumerate()
            .filter_map(|(i, v)| {
                let norm = euclidean_norm(v);
                ((norm - T::one()).abs() > tol).then(|| (i, norm.to_f64_lossy()))
            })
            .collect();
        if !violations.is_empty() {
            return Err(FrameError::NormViolation(violations));
        }
        Ok(Self {
            dim,
            field,
            vectors,
            labels,
        })
    }

    /// Like [`new`](Self::new) but rescales every vector to unit norm first.
    /// Zero vectors cannot be rescaled and are reported as norm violations.
    pub fn renormalized(
        dim: usize,
        field: Field,
        mut vectors: Vec<Vec<Complex<T>>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        Self::check_shape(dim, field, &vectors, labels.as_deref())?;
        let zeros: Vec<(usize, f64)> = vectors
            .iter_mut()
            .enumerate()
            .filter_map(|(i, v)| {
                let norm = euclidean_norm(v);
                if norm > T::zero() {
                    v.iter_mut().for_each(|z| *z /= norm);
                    None
                } else {
                    Some((i, 0.0))
                }
            })
            .collect();
        if !zeros.is_empty() {
            return Err(FrameError::NormViolation(zeros));
        }
        Self::new(dim, field, vectors, labels)
    }

    /// Real-field convenience constructor.
    pub fn from_real(dim: usize, vectors: Vec<Vec<T>>) -> Result<Self> {
        let vectors = vectors
            .into_iter()
            .map(|v| v.into_iter().map(|x| Complex::new(x, T::zero())).collect())
            .collect();
        Self::new(dim, Field::Real, vectors, None)
    }

    fn check_shape(dim: usize, field: Field, vectors: &[Vec<Complex<T>>], labels: Option<&[String]>) -> Result<()> {
        if dim == 0 {
            return Err(FrameError::Argument("dimension must be positive".into()));
        }
        if vectors.is_empty() {
            return Err(FrameError::Argument("sequence must contain at least one vector".into()));
        }
        if let Some(labels) = labels {
            if labels.len() != vectors.len() {
                return Err(FrameError::DimensionError {
                    expected: vectors.len(),
                    found: labels.len(),
                });
            }
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(FrameError::DimensionError {
                    expected: dim,
                    found: v.len(),
                });
            }
            for (k, z) in v.iter().enumerate() {
                if !is_finite(*z) {
                    return Err(FrameError::NonFinite(format!("vector {i}, coordinate {k}")));
                }
                if field == Field::Real && z.im != T::zero() {
                    return Err(FrameError::Argument(format!(
                        "vector {i} has a nonzero imaginary part in a real-field sequence"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    /// Always false; sequences hold at least one vector.
    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vector(&self, i: usize) -> &[Complex<T>] {
        &self.vectors[i]
    }

    pub fn vectors(&self) -> &[Vec<Complex<T>>] {
        &self.vectors
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Converts every coordinate to another scalar type, renormalizing in
    /// the target type so the unit-norm invariant holds there.
    pub fn cast<U: Real>(&self) -> Result<UnitVectorSequence<U>> {
        let vectors = self
            .vectors
            .iter()
            .map(|v| {
                v.iter()
                    .map(|z| Complex::new(U::lit(z.re.to_f64_lossy()), U::lit(z.im.to_f64_lossy())))
                    .collect()
            })
            .collect();
        UnitVectorSequence::renormalized(self.dim, self.field, vectors, self.labels.clone())
    }
}

/// Coefficients `(c_k)` paired with a sequence of the same length.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector<T>(pub Vec<Complex<T>>);

impl<T: Real> CoefficientVector<T> {
    pub fn new(entries: Vec<Complex<T>>) -> Result<Self> {
        if let Some(k) = entries.iter().position(|z| !is_finite(*z)) {
            return Err(FrameError::NonFinite(format!("coefficient {k}")));
        }
        Ok(Self(entries))
    }

    pub fn from_real(entries: &[T]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![Complex::new(T::zero(), T::zero()); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.0
    }

    /// `Σ |c_k|²`
    pub fn norm_sqr(&self) -> T {
        self.0.iter().fold(T::zero(), |acc, z| acc + abs2(*z))
    }
}

pub(crate) fn euclidean_norm<T: Real>(v: &[Complex<T>]) -> T {
    v.iter().fold(T::zero(), |acc, z| acc + abs2(*z)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_unit_vectors_with_all_offenders() {
        let err =
            UnitVectorSequence::<f64>::from_real(2, vec![vec![1.0, 0.0], vec![2.0, 0.0], vec![0.0, 0.5]]).unwrap_err();
        match err {
            FrameError::NormViolation(v) => {
                assert_eq!(v.iter().map(|x| x.0).collect::<Vec<_>>(), vec![1, 2]);
                assert_eq!(v[0].1, 2.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tolerance_boundary() {
        assert!(UnitVectorSequence::<f64>::from_real(1, vec![vec![1.0 + 5e-10]]).is_ok());
        assert!(UnitVectorSequence::<f64>::from_real(1, vec![vec![1.0 + 5e-9]]).is_err());
    }

    #[test]
    fn renormalize_is_explicit() {
        let s = UnitVectorSequence::<f64>::renormalized(
            2,
            Field::Real,
            vec![vec![Complex::new(3.0, 0.0), Complex::new(4.0, 0.0)]],
            None,
        )
        .unwrap();
        assert!((s.vector(0)[0].re - 0.6).abs() < 1e-15);
        let zero = UnitVectorSequence::<f64>::renormalized(1, Field::Real, vec![vec![Complex::new(0.0, 0.0)]], None);
        assert!(matches!(zero, Err(FrameError::NormViolation(_))));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            UnitVectorSequence::<f64>::from_real(2, vec![vec![1.0]]),
            Err(FrameError::DimensionError { expected: 2, found: 1 })
        ));
        assert!(UnitVectorSequence::<f64>::from_real(2, vec![]).is_err());
        assert!(matches!(
            UnitVectorSequence::<f64>::from_real(1, vec![vec![f64::NAN]]),
            Err(FrameError::NonFinite(_))
        ));
        let imag = UnitVectorSequence::<f64>::new(1, Field::Real, vec![vec![Complex::new(0.0, 1.0)]], None);
        assert!(matches!(imag, Err(FrameError::Argument(_))));
        let complex = UnitVectorSequence::<f64>::new(1, Field::Complex, vec![vec![Complex::new(0.0, 1.0)]], None);
        assert!(complex.is_ok());
    }

    #[test]
    fn cast_to_f32_keeps_unit_norm() {
        let s = UnitVectorSequence::<f64>::from_real(2, vec![vec![0.6, 0.8]]).unwrap();
        let t: UnitVectorSequence<f32> = s.cast().unwrap();
        assert!((euclidean_norm(t.vector(0)) - 1.0).abs() < 1e-6);
    }
}
