//! Scalar functionals of a Gram matrix (Bessel bounds, σ, η, γ) and the
//! σ < 1 Riesz certificate for a block of indices.

use num_complex::Complex;
use serde::Serialize;

use crate::error::Result;
use crate::generators::GaussianStream;
use crate::linalg::{gram, synthesis, validate_block, CoefficientVector, GramMatrix, UnitVectorSequence};
use crate::scalar::{abs2, Field, Real};

/// Width of the band `[1 − w, 1)` in which a certified value is flagged.
pub const BORDERLINE_WIDTH: f64 = 1e-12;

/// Optimal and Schur-test Bessel constants of a finite sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BesselReport<T> {
    /// `λ_max(G)`
    pub spectral_bound: T,
    /// `max_j Σ_k |G_jk|`, diagonal included.
    pub schur_bound: T,
    /// Always true for finite sequences.
    pub is_bessel_schur: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeparationReport<T> {
    pub sigma: T,
    pub eta: T,
    pub gamma: T,
}

/// Riesz certificate for one block.
///
/// `certified` means σ < 1, in which case `(a_bound, b_bound) = (1 − σ, 1 + σ)`
/// are guaranteed Riesz bounds. `(lambda_min, lambda_max)` are the sharp
/// spectral bounds and are reported whether or not σ < 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RieszCertificate<T> {
    pub sigma: T,
    pub lambda_min: T,
    pub lambda_max: T,
    pub certified: bool,
    pub borderline: bool,
    pub a_bound: T,
    pub b_bound: T,
}

impl<T: Real> RieszCertificate<T> {
    /// Positive-definite block Gram, independent of the σ test.
    pub fn spectrally_riesz(&self) -> bool {
        self.lambda_min > T::psd_tol()
    }

    pub fn label(&self) -> &'static str {
        match (self.certified, self.spectrally_riesz()) {
            (true, _) => "riesz (certified: sigma < 1)",
            (false, true) => "spectrally riesz (uncertified by sigma test)",
            (false, false) => "not riesz (singular block gram)",
        }
    }
}

pub fn spectral_bessel_bound<T: Real>(g: &GramMatrix<T>) -> Result<T> {
    Ok(g.eigenvalues()?.last().copied().unwrap_or_else(T::zero))
}

pub fn schur_bessel_bound<T: Real>(g: &GramMatrix<T>) -> T {
    (0..g.len()).fold(T::zero(), |m, j| {
        let row = (0..g.len()).fold(T::zero(), |acc, k| acc + g.get(j, k).norm());
        m.max(row)
    })
}

pub fn bessel_report<T: Real>(g: &GramMatrix<T>) -> Result<BesselReport<T>> {
    Ok(BesselReport {
        spectral_bound: spectral_bessel_bound(g)?,
        schur_bound: schur_bessel_bound(g),
        is_bessel_schur: true,
    })
}

fn max_offdiag_row<T: Real>(g: &GramMatrix<T>, block: &[usize], f: impl Fn(Complex<T>) -> T) -> Result<T> {
    validate_block(g.len(), block)?;
    Ok(block.iter().fold(T::zero(), |m, &j| {
        let row = block
            .iter()
            .filter(|&&i| i != j)
            .fold(T::zero(), |acc, &i| acc + f(g.get(i, j)));
        m.max(row)
    }))
}

/// `σ = max_{j∈block} Σ_{i∈block, i≠j} |G_ij|`
pub fn sigma<T: Real>(g: &GramMatrix<T>, block: &[usize]) -> Result<T> {
    max_offdiag_row(g, block, |z| z.norm())
}

/// `η = max_{j∈block} Σ_{i∈block, i≠j} |G_ij|²`
pub fn eta<T: Real>(g: &GramMatrix<T>, block: &[usize]) -> Result<T> {
    max_offdiag_row(g, block, abs2)
}

/// `γ = max_{i≠j ∈ block} |G_ij|`, zero for singletons.
pub fn separation_constant<T: Real>(g: &GramMatrix<T>, block: &[usize]) -> Result<T> {
    validate_block(g.len(), block)?;
    let mut gamma = T::zero();
    for (a, &i) in block.iter().enumerate() {
        for &j in &block[a + 1..] {
            gamma = gamma.max(g.get(i, j).norm());
        }
    }
    Ok(gamma)
}

pub fn separation_report<T: Real>(g: &GramMatrix<T>, block: &[usize]) -> Result<SeparationReport<T>> {
    Ok(SeparationReport {
        sigma: sigma(g, block)?,
        eta: eta(g, block)?,
        gamma: separation_constant(g, block)?,
    })
}

/// True when `x < 1` but within [`BORDERLINE_WIDTH`] of it.
pub fn is_borderline<T: Real>(x: T) -> bool {
    x < T::one() && x >= T::one() - T::lit(BORDERLINE_WIDTH)
}

pub fn riesz_certificate<T: Real>(g: &GramMatrix<T>, block: &[usize]) -> Result<RieszCertificate<T>> {
    let sigma = sigma(g, block)?;
    let spectrum = g.block(block).eigenvalues()?;
    let certified = sigma < T::one();
    Ok(RieszCertificate {
        sigma,
        lambda_min: spectrum[0],
        lambda_max: spectrum[spectrum.len() - 1],
        certified,
        borderline: is_borderline(sigma),
        a_bound: T::one() - sigma,
        b_bound: T::one() + sigma,
    })
}

/// Samples `trials` Gaussian coefficient vectors supported on `block` and
/// checks `(λ_min − tol)‖c‖² ≤ ‖Σ c_k f_k‖² ≤ (λ_max + tol)‖c‖²` for each,
/// with `tol` relative to `max(1, λ_max)`.
pub fn verify_riesz_inequality<T: Real>(
    seq: &UnitVectorSequence<T>,
    block: &[usize],
    trials: usize,
    seed: u64,
) -> Result<bool> {
    validate_block(seq.len(), block)?;
    if trials == 0 {
        return Err(crate::FrameError::Argument("trials must be at least 1".into()));
    }
    let g = gram(seq);
    let spectrum = g.block(block).eigenvalues()?;
    let (lo, hi) = (spectrum[0], spectrum[spectrum.len() - 1]);
    let tol = T::sum_tol() * hi.max(T::one());
    let mut stream = GaussianStream::new(seed);
    let zero = Complex::new(T::zero(), T::zero());
    for _ in 0..trials {
        let mut c = vec![zero; seq.len()];
        for &k in block {
            let re = T::lit(stream.next_gaussian());
            let im = match seq.field() {
                Field::Real => T::zero(),
                Field::Complex => T::lit(stream.next_gaussian()),
            };
            c[k] = Complex::new(re, im);
        }
        let c = CoefficientVector::new(c)?;
        let energy = synthesis(seq, &c)?.iter().fold(T::zero(), |acc, z| acc + abs2(*z));
        let c2 = c.norm_sqr();
        if energy < (lo - tol) * c2 || energy > (hi + tol) * c2 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SquareMatrix;
    use crate::FrameError;

    fn pair(x: f64) -> GramMatrix<f64> {
        GramMatrix::from_real_rows(&[vec![1.0, x], vec![x, 1.0]]).unwrap()
    }

    #[test]
    fn bessel_bounds_small_cases() {
        let id = GramMatrix::<f64>::from_matrix(SquareMatrix::identity(3)).unwrap();
        assert_eq!(spectral_bessel_bound(&id).unwrap(), 1.0);
        assert_eq!(schur_bessel_bound(&id), 1.0);
        assert!((spectral_bessel_bound(&pair(1.0)).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(schur_bessel_bound(&pair(0.5)), 1.5);
    }

    #[test]
    fn functionals_on_sixty_degree_pair() {
        let g = pair(0.5);
        assert_eq!(sigma(&g, &[0, 1]).unwrap(), 0.5);
        assert_eq!(eta(&g, &[0, 1]).unwrap(), 0.25);
        assert_eq!(separation_constant(&g, &[0, 1]).unwrap(), 0.5);
        assert_eq!(sigma(&g, &[1]).unwrap(), 0.0);
        assert_eq!(separation_constant(&g, &[0]).unwrap(), 0.0);
        assert_eq!(separation_constant(&pair(1.0), &[0, 1]).unwrap(), 1.0);
    }

    #[test]
    fn block_errors() {
        let g = pair(0.5);
        assert_eq!(sigma(&g, &[]), Err(FrameError::EmptyBlock));
        assert_eq!(eta(&g, &[2]), Err(FrameError::IndexOutOfRange { index: 2, len: 2 }));
        assert_eq!(separation_constant(&g, &[1, 1]), Err(FrameError::DuplicateIndex(1)));
        assert!(riesz_certificate(&g, &[]).is_err());
    }

    #[test]
    fn certificates() {
        let c = riesz_certificate(&pair(0.5), &[0, 1]).unwrap();
        assert!(c.certified && !c.borderline);
        assert!((c.lambda_min - 0.5).abs() < 1e-15 && (c.lambda_max - 1.5).abs() < 1e-15);
        assert_eq!((c.a_bound, c.b_bound), (0.5, 1.5));

        let d = riesz_certificate(&pair(1.0), &[0, 1]).unwrap();
        assert!(!d.certified);
        assert_eq!(d.sigma, 1.0);
        assert!(d.lambda_min.abs() < 1e-15);
        assert_eq!(d.label(), "not riesz (singular block gram)");

        let e = riesz_certificate(&pair(1.0 - 1e-13), &[0, 1]).unwrap();
        assert!(e.certified && e.borderline);
    }

    #[test]
    fn spectrally_riesz_without_sigma_certificate() {
        // three unit vectors, pairwise 0.6: σ = 1.2 yet λ_min = 0.4
        let g = GramMatrix::from_real_rows(&[vec![1.0, 0.6, 0.6], vec![0.6, 1.0, 0.6], vec![0.6, 0.6, 1.0]]).unwrap();
        let c = riesz_certificate(&g, &[0, 1, 2]).unwrap();
        assert!(!c.certified && c.spectrally_riesz());
        assert!((c.lambda_min - 0.4f64).abs() < 1e-14);
    }

    #[test]
    fn riesz_inequality_sampling() {
        let s = UnitVectorSequence::from_real(2, vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(verify_riesz_inequality(&s, &[0, 1], 50, 1).unwrap());
        assert!(verify_riesz_inequality(&s, &[1], 5, 1).unwrap());
        assert!(verify_riesz_inequality(&s, &[0], 0, 1).is_err());
    }
}
