//! Dense Hermitian eigensolver (cyclic complex Jacobi).
//!
//! Each rotation first strips the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the classical real Jacobi rotation. Real-symmetric
//! input goes through the same path with unit phases.

use num_complex::Complex;

use super::matrix::SquareMatrix;
use crate::error::{FrameError, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 100;

/// Spectrum (ascending) with eigenvectors stored as matrix columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    pub values: Vec<T>,
    pub vectors: SquareMatrix<T>,
}

impl<T: Real> HermitianEigen<T> {
    pub fn vector(&self, k: usize) -> Vec<Complex<T>> {
        let n = self.vectors.n();
        (0..n).map(|i| self.vectors[(i, k)]).collect()
    }
}

/// Full real spectrum of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues<T: Real>(m: &SquareMatrix<T>) -> Result<Vec<T>> {
    Ok(jacobi(m, false)?.values)
}

/// Eigenvalues and orthonormal eigenvectors of a Hermitian matrix.
pub fn hermitian_eigen<T: Real>(m: &SquareMatrix<T>) -> Result<HermitianEigen<T>> {
    jacobi(m, true)
}

fn jacobi<T: Real>(m: &SquareMatrix<T>, want_vectors: bool) -> Result<HermitianEigen<T>> {
    let n = m.n();
    let scale = m.max_abs().max(T::one());
    if let Some((row, col)) = m.hermitian_defect(T::symmetry_tol() * scale) {
        return Err(FrameError::SymmetryViolation { row, col });
    }

    let zero = Complex::new(T::zero(), T::zero());
    let mut a = m.clone();
    for i in 0..n {
        a[(i, i)] = Complex::new(a[(i, i)].re, T::zero());
        for j in i + 1..n {
            a[(j, i)] = a[(i, j)].conj();
        }
    }
    let mut v = if want_vectors {
        SquareMatrix::identity(n)
    } else {
        SquareMatrix::zeros(0)
    };

    let half = T::lit(0.5);
    let hundred = T::lit(100.0);
    let mut converged = n <= 1;
    for sweep in 0..MAX_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                off += a[(p, q)].norm();
            }
        }
        if off == T::zero() {
            converged = true;
            break;
        }
        let thresh = if sweep < 3 {
            T::lit(0.2) * off / T::lit((n * n) as f64)
        } else {
            T::zero()
        };

        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                let g = hundred * r;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = zero;
                    a[(q, p)] = zero;
                    continue;
                }
                if r <= thresh || r == T::zero() {
                    continue;
                }
                let phase = apq / r;
                let h = aqq - app;
                let t = if h.abs() + g == h.abs() {
                    r / h
                } else {
                    let theta = half * h / r;
                    let t = T::one() / (theta.abs() + (T::one() + theta * theta).sqrt());
                    if theta < T::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                rotate_columns(&mut a, p, q, c, s, phase);
                rotate_rows(&mut a, p, q, c, s, phase);
                a[(p, p)] = Complex::new(app - t * r, T::zero());
                a[(q, q)] = Complex::new(aqq + t * r, T::zero());
                a[(p, q)] = zero;
                a[(q, p)] = zero;
                if want_vectors {
                    rotate_columns(&mut v, p, q, c, s, phase);
                }
            }
        }
    }
    if !converged {
        return Err(FrameError::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).expect("finite spectrum"));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = if want_vectors {
        let mut sorted = SquareMatrix::zeros(n);
        for (k, &src) in order.iter().enumerate() {
            for i in 0..n {
                sorted[(i, k)] = v[(i, src)];
            }
        }
        sorted
    } else {
        v
    };
    Ok(HermitianEigen { values, vectors })
}

/// `X ← X J` with `J = [[c, s], [-s·conj(e), c·conj(e)]]` on columns p, q.
fn rotate_columns<T: Real>(x: &mut SquareMatrix<T>, p: usize, q: usize, c: T, s: T, e: Complex<T>) {
    let ec = e.conj();
    for k in 0..x.n() {
        let xp = x[(k, p)];
        let xq = x[(k, q)];
        x[(k, p)] = xp * c - xq * ec * s;
        x[(k, q)] = xp * s + xq * ec * c;
    }
}

/// `X ← Jᴴ X` on rows p, q.
fn rotate_rows<T: Real>(x: &mut SquareMatrix<T>, p: usize, q: usize, c: T, s: T, e: Complex<T>) {
    for k in 0..x.n() {
        let yp = x[(p, k)];
        let yq = x[(q, k)];
        x[(p, k)] = yp * c - yq * e * s;
        x[(q, k)] = yp * s + yq * e * c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_spectrum() {
        let vals = hermitian_eigenvalues(&SquareMatrix::<f64>::identity(5)).unwrap();
        assert_eq!(vals, vec![1.0; 5]);
    }

    #[test]
    fn rank_one_pair() {
        let m = SquareMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let vals = hermitian_eigenvalues::<f64>(&m).unwrap();
        assert!(vals[0].abs() < 1e-15 && (vals[1] - 2.0).abs() < 1e-15, "{vals:?}");
    }

    #[test]
    fn complex_two_by_two() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3
        let m = SquareMatrix::from_vec(
            2,
            vec![
                Complex::new(2.0, 0.0),
                Complex::new(0.0, 1.0),
                Complex::new(0.0, -1.0),
                Complex::new(2.0, 0.0),
            ],
        )
        .unwrap();
        let eig = hermitian_eigen::<f64>(&m).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-14);
        assert!((eig.values[1] - 3.0).abs() < 1e-14);
        for k in 0..2 {
            let x = eig.vector(k);
            let mx = m.mul_vec(&x);
            for i in 0..2 {
                assert!((mx[i] - x[i] * eig.values[k]).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = SquareMatrix::from_real_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(
            hermitian_eigenvalues::<f64>(&m),
            Err(FrameError::SymmetryViolation { row: 0, col: 1 })
        ));
        let mut d = SquareMatrix::<f64>::identity(2);
        d[(1, 1)] = Complex::new(1.0, 0.5);
        assert!(hermitian_eigenvalues(&d).is_err());
    }

    #[test]
    fn empty_and_scalar() {
        assert!(hermitian_eigenvalues(&SquareMatrix::<f64>::zeros(0))
            .unwrap()
            .is_empty());
        let m = SquareMatrix::from_real_rows(&[vec![-3.5f32]]).unwrap();
        assert_eq!(hermitian_eigenvalues(&m).unwrap(), vec![-3.5f32]);
    }
}
