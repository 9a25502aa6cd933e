//! Deterministic test-sequence constructors.
//!
//! Random streams use ChaCha8 seeded with `seed_from_u64`; uniforms are
//! `(next_u64 >> 11) · 2⁻⁵³` and Gaussians come from the Box–Muller pair
//! `r = sqrt(−2 ln(1 − u₁))`, `(r cos 2πu₂, r sin 2πu₂)`, consumed in order.

use std::f64::consts::TAU;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{FrameError, Result};
use crate::linalg::UnitVectorSequence;
use crate::scalar::{Field, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    Orthonormal,
    Duplicates,
    AnglePair,
    BasisUnion,
    Harmonic,
    RandomUnit,
}

impl std::str::FromStr for GeneratorKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "orthonormal" => Self::Orthonormal,
            "duplicates" => Self::Duplicates,
            "angle_pair" => Self::AnglePair,
            "basis_union" => Self::BasisUnion,
            "harmonic" => Self::Harmonic,
            "random_unit" => Self::RandomUnit,
            other => return Err(format!("unknown generator kind `{other}`")),
        })
    }
}

/// Parameters of a generated sequence. Fields a kind does not use are ignored:
///
/// * `orthonormal`: `e_1..e_count`, requires `count ≤ dim`
/// * `duplicates`: `multiplicity` copies of `e_1`
/// * `angle_pair`: `(1, 0, …)` and `(cos θ, sin θ, 0, …)`, requires `dim ≥ 2`
/// * `basis_union`: the standard basis followed by its rotation by θ in each
///   coordinate pair `(0,1), (2,3), …`; the first `count ≤ 2·dim` vectors
/// * `harmonic`: `f_k[j] = exp(2πi·jk/count)/√dim`, complex, `dim ≤ count`
/// * `random_unit`: normalized Gaussian vectors from `seed`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub dim: usize,
    pub count: usize,
    #[serde(default)]
    pub angle: f64,
    #[serde(default = "one")]
    pub multiplicity: usize,
    #[serde(default)]
    pub seed: u64,
    pub field: Field,
}

fn one() -> usize {
    1
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, dim: usize, count: usize) -> Self {
        let field = if kind == GeneratorKind::Harmonic {
            Field::Complex
        } else {
            Field::Real
        };
        Self {
            kind,
            dim,
            count,
            angle: 0.0,
            multiplicity: 1,
            seed: 0,
            field,
        }
    }

    pub fn with_angle(mut self, angle: f64) -> Self {
        self.angle = angle;
        self
    }

    pub fn with_multiplicity(mut self, multiplicity: usize) -> Self {
        self.multiplicity = multiplicity;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_field(mut self, field: Field) -> Self {
        self.field = field;
        self
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(FrameError::Argument(m));
        if self.dim == 0 {
            return bad("dim must be at least 1".into());
        }
        if self.count == 0 {
            return bad("count must be at least 1".into());
        }
        if self.multiplicity == 0 {
            return bad("multiplicity must be at least 1".into());
        }
        if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&self.angle) {
            return bad(format!("angle {} outside [0, π/2]", self.angle));
        }
        match self.kind {
            GeneratorKind::Orthonormal if self.count > self.dim => {
                bad(format!("orthonormal needs count ≤ dim ({} > {})", self.count, self.dim))
            }
            GeneratorKind::AnglePair if self.dim < 2 => bad("angle_pair needs dim ≥ 2".into()),
            GeneratorKind::BasisUnion if self.count > 2 * self.dim => {
                bad(format!("basis_union yields at most 2·dim = {} vectors", 2 * self.dim))
            }
            GeneratorKind::Harmonic if self.dim > self.count => {
                bad(format!("harmonic needs dim ≤ count ({} > {})", self.dim, self.count))
            }
            GeneratorKind::Harmonic if self.field == Field::Real => bad("harmonic frames are complex".into()),
            _ => Ok(()),
        }
    }
}

/// Builds the sequence described by `spec`. Output is bit-identical for
/// identical specs.
pub fn generate<T: Real>(spec: &GeneratorSpec) -> Result<UnitVectorSequence<T>> {
    spec.validate()?;
    let dim = spec.dim;
    let zero = Complex::new(T::zero(), T::zero());
    let real = |x: f64| Complex::new(T::lit(x), T::zero());
    let basis = |k: usize| {
        let mut v = vec![zero; dim];
        v[k] = Complex::new(T::one(), T::zero());
        v
    };

    let vectors: Vec<Vec<Complex<T>>> = match spec.kind {
        GeneratorKind::Orthonormal => (0..spec.count).map(basis).collect(),
        GeneratorKind::Duplicates => vec![basis(0); spec.multiplicity],
        GeneratorKind::AnglePair => {
            let mut second = vec![zero; dim];
            second[0] = real(spec.angle.cos());
            second[1] = real(spec.angle.sin());
            vec![basis(0), second]
        }
        GeneratorKind::BasisUnion => {
            let (c, s) = (spec.angle.cos(), spec.angle.sin());
            let mut all: Vec<_> = (0..dim).map(basis).collect();
            for k in 0..dim {
                let mut v = vec![zero; dim];
                if k % 2 == 0 && k + 1 < dim {
                    v[k] = real(c);
                    v[k + 1] = real(s);
                } else if k % 2 == 1 {
                    v[k - 1] = real(-s);
                    v[k] = real(c);
                } else {
                    v[k] = real(1.0);
                }
                all.push(v);
            }
            all.truncate(spec.count);
            all
        }
        GeneratorKind::Harmonic => {
            let n = spec.count;
            let scale = T::one() / T::lit(dim as f64).sqrt();
            (0..n)
                .map(|k| {
                    (0..dim)
                        .map(|j| {
                            // reduce jk mod n before scaling to keep the phase exact
                            let phase = T::lit(TAU * ((j * k) % n) as f64 / n as f64);
                            Complex::new(phase.cos() * scale, phase.sin() * scale)
                        })
                        .collect()
                })
                .collect()
        }
        GeneratorKind::RandomUnit => {
            let mut stream = GaussianStream::new(spec.seed);
            (0..spec.count)
                .map(|_| loop {
                    let raw: Vec<Complex<f64>> = (0..dim)
                        .map(|_| {
                            let re = stream.next_gaussian();
                            let im = match spec.field {
                                Field::Real => 0.0,
                                Field::Complex => stream.next_gaussian(),
                            };
                            Complex::new(re, im)
                        })
                        .collect();
                    let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                    if norm > 0.0 {
                        break raw
                            .iter()
                            .map(|z| Complex::new(T::lit(z.re / norm), T::lit(z.im / norm)))
                            .collect();
                    }
                })
                .collect()
        }
    };
    match spec.kind {
        GeneratorKind::RandomUnit | GeneratorKind::Harmonic => {
            UnitVectorSequence::renormalized(dim, spec.field, vectors, None)
        }
        _ => UnitVectorSequence::new(dim, spec.field, vectors, None),
    }
}

/// Portable seeded standard-normal stream (ChaCha8 + Box–Muller).
#[derive(Debug, Clone)]
pub struct GaussianStream {
    rng: ChaCha8Rng,
    spare: Option<f64>,
}

impl GaussianStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            spare: None,
        }
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn next_uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    pub fn next_gaussian(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = self.next_uniform();
        let u2 = self.next_uniform();
        let r = (-2.0 * (1.0 - u1).ln()).sqrt();
        let (s, c) = (TAU * u2).sin_cos();
        self.spare = Some(r * s);
        r * c
    }
}
