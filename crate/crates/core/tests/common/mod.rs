#![allow(dead_code)]

pub mod cli;

use frame_partition::generators::GaussianStream;
use frame_partition::{
    generate, Field, GeneratorKind, GeneratorSpec, Sequence64, SquareMatrix, WeightMatrix, WeightPower,
};
use nalgebra::DMatrix;
use num_complex::Complex;

/// Every generator kind over a parameter grid, real and complex where the
/// kind allows it. Names are stable and used in failure messages.
pub fn corpus() -> Vec<(String, Sequence64)> {
    let mut out = Vec::new();
    let mut push = |spec: GeneratorSpec| {
        let name = format!(
            "{:?}/d{}/n{}/a{:.3}/m{}/s{}/{}",
            spec.kind, spec.dim, spec.count, spec.angle, spec.multiplicity, spec.seed, spec.field
        );
        out.push((name, generate::<f64>(&spec).expect("corpus spec valid")));
    };
    let fields = [Field::Real, Field::Complex];
    for field in fields {
        for dim in 1..=8 {
            for count in 1..=dim {
                push(GeneratorSpec::new(GeneratorKind::Orthonormal, dim, count).with_field(field));
            }
        }
        for dim in 1..=4 {
            for mult in 1..=8 {
                push(
                    GeneratorSpec::new(GeneratorKind::Duplicates, dim, mult)
                        .with_multiplicity(mult)
                        .with_field(field),
                );
            }
        }
        for dim in 2..=4 {
            for k in 0..10 {
                let angle = std::f64::consts::FRAC_PI_2 * k as f64 / 9.0;
                push(
                    GeneratorSpec::new(GeneratorKind::AnglePair, dim, 2)
                        .with_angle(angle)
                        .with_field(field),
                );
            }
        }
        for dim in 2..=6 {
            for k in 0..8 {
                let angle = std::f64::consts::FRAC_PI_2 * k as f64 / 7.0;
                push(
                    GeneratorSpec::new(GeneratorKind::BasisUnion, dim, 2 * dim)
                        .with_angle(angle)
                        .with_field(field),
                );
            }
        }
        for dim in [2, 4, 8, 16] {
            for count in [4, 8, 16, 32, 64] {
                for seed in 0..4 {
                    push(
                        GeneratorSpec::new(GeneratorKind::RandomUnit, dim, count)
                            .with_seed(seed)
                            .with_field(field),
                    );
                }
            }
        }
    }
    for count in 2..=12 {
        for dim in 1..=count {
            push(GeneratorSpec::new(GeneratorKind::Harmonic, dim, count));
        }
    }
    out
}

pub fn random_sequence(dim: usize, count: usize, seed: u64, field: Field) -> Sequence64 {
    generate(
        &GeneratorSpec::new(GeneratorKind::RandomUnit, dim, count)
            .with_seed(seed)
            .with_field(field),
    )
    .unwrap()
}

/// Symmetric weights with U[0,1] off-diagonal entries.
pub fn random_weights(n: usize, seed: u64) -> WeightMatrix<f64> {
    let mut s = GaussianStream::new(seed);
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let w = s.next_uniform();
            data[i * n + j] = w;
            data[j * n + i] = w;
        }
    }
    WeightMatrix::new(n, data, WeightPower::Abs).unwrap()
}

/// Independent eigenvalue oracle: nalgebra's symmetric solver applied to
/// the real embedding `[[A, −B], [B, A]]` of `H = A + iB`, whose spectrum is
/// that of `H` with every eigenvalue doubled.
pub fn oracle_eigenvalues(m: &SquareMatrix<f64>) -> Vec<f64> {
    let n = m.n();
    let emb = DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let z = m[(r % n, c % n)];
        match (r < n, c < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    let mut vals: Vec<f64> = nalgebra::SymmetricEigen::new(emb).eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals.into_iter().step_by(2).collect()
}

pub fn random_coefficients(n: usize, field: Field, stream: &mut GaussianStream) -> Vec<Complex<f64>> {
    (0..n)
        .map(|_| {
            let re = stream.next_gaussian();
            let im = if field == Field::Complex {
                stream.next_gaussian()
            } else {
                0.0
            };
            Complex::new(re, im)
        })
        .collect()
}

/// Within-block row sum `Σ_{i∈block} a_ij` recomputed from scratch.
pub fn within(a: &WeightMatrix<f64>, block: &[usize], j: usize) -> f64 {
    block.iter().map(|&i| a.get(i, j)).sum()
}
