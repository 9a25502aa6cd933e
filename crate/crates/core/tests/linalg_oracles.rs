mod common;

use common::{oracle_eigenvalues, random_coefficients, random_sequence};
use frame_partition::generators::GaussianStream;
use frame_partition::linalg::{inner, validate_block};
use frame_partition::partition::with_threads;
use frame_partition::{
    analysis_op, gram, hermitian_eigen, hermitian_eigenvalues, synthesis, weight_matrix, CoefficientVector, Field,
    WeightPower,
};
use num_complex::Complex;
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Real), Just(Field::Complex)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn synthesis_energy_is_gram_quadratic_form(
        dim in 1usize..10, count in 1usize..14, seed in any::<u64>(), field in field_strategy()
    ) {
        let seq = random_sequence(dim, count, seed, field);
        let g = gram(&seq);
        let mut s = GaussianStream::new(seed ^ 0x5eed);
        let c = random_coefficients(count, field, &mut s);
        let tc = synthesis(&seq, &CoefficientVector::new(c.clone()).unwrap()).unwrap();
        let energy: f64 = tc.iter().map(|z| z.norm_sqr()).sum();
        let form = g.synthesis_energy(&c);
        prop_assert!((energy - form).abs() <= 1e-10 * energy.max(1.0), "{energy} vs {form}");
    }

    #[test]
    fn analysis_is_adjoint_of_synthesis(
        dim in 1usize..10, count in 1usize..14, seed in any::<u64>(), field in field_strategy()
    ) {
        let seq = random_sequence(dim, count, seed, field);
        let mut s = GaussianStream::new(seed.wrapping_add(1));
        let c = random_coefficients(count, field, &mut s);
        let x = random_coefficients(dim, field, &mut s);
        let lhs = inner(&synthesis(&seq, &CoefficientVector::new(c.clone()).unwrap()).unwrap(), &x);
        let theta_x = analysis_op(&seq, &x).unwrap();
        let rhs = inner(&c, theta_x.as_slice());
        prop_assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm().max(1.0));
    }

    #[test]
    fn gram_is_hermitian_and_psd(
        dim in 1usize..8, count in 1usize..16, seed in any::<u64>(), field in field_strategy()
    ) {
        let g = gram(&random_sequence(dim, count, seed, field));
        for i in 0..count {
            prop_assert_eq!(g.get(i, i).im, 0.0);
            prop_assert!((g.get(i, i).re - 1.0).abs() <= 1e-18 + 2.0 * f64::EPSILON * 4.0);
            for j in 0..count {
                prop_assert_eq!(g.get(i, j), g.get(j, i).conj());
            }
        }
        prop_assert!(g.eigenvalues().unwrap()[0] >= -1e-10);
        prop_assert!(g.is_psd().unwrap());
    }

    #[test]
    fn weight_matrix_matches_elementwise_oracle(
        count in 1usize..10, seed in any::<u64>(), field in field_strategy(), squared in any::<bool>()
    ) {
        let g = gram(&random_sequence(3, count, seed, field));
        let power = if squared { WeightPower::Squared } else { WeightPower::Abs };
        let a = weight_matrix(&g, power);
        for i in 0..count {
            for j in 0..count {
                let z = g.get(i, j);
                let expected = if i == j { 0.0 } else { (z.re * z.re + z.im * z.im).sqrt().powi(power.exponent() as i32) };
                prop_assert!((a.get(i, j) - expected).abs() <= 1e-15);
                prop_assert_eq!(a.get(i, j), a.get(j, i));
            }
        }
    }
}

#[test]
fn eigenvalues_match_independent_oracle() {
    for seed in 0..40u64 {
        for field in [Field::Real, Field::Complex] {
            let dim = 3 + (seed as usize % 6);
            let g = gram(&random_sequence(dim, 8, seed, field));
            let ours = hermitian_eigenvalues(g.matrix()).unwrap();
            let oracle = oracle_eigenvalues(g.matrix());
            for (a, b) in ours.iter().zip(&oracle) {
                assert!((a - b).abs() <= 1e-8, "seed {seed} {field}: {ours:?} vs {oracle:?}");
            }
            assert!(ours.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}

#[test]
fn eigenpairs_have_small_residuals() {
    for seed in 0..20u64 {
        let field = if seed % 2 == 0 { Field::Real } else { Field::Complex };
        let g = gram(&random_sequence(5, 24, seed, field));
        let m = g.matrix();
        let eig = hermitian_eigen(m).unwrap();
        let norm = m.frobenius();
        for k in 0..m.n() {
            let v = eig.vector(k);
            let mv = m.mul_vec(&v);
            let res: f64 = mv
                .iter()
                .zip(&v)
                .map(|(a, b)| (a - b * eig.values[k]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res <= 1e-8 * norm, "seed {seed} pair {k}: residual {res}");
            let vnorm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>();
            assert!((vnorm - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn gram_bit_identical_across_thread_counts() {
    let seq = random_sequence(16, 64, 11, Field::Complex);
    let reference = with_threads(Some(1), || Ok(gram(&seq))).unwrap();
    for t in [2, 3, 8] {
        assert_eq!(with_threads(Some(t), || Ok(gram(&seq))).unwrap(), reference);
    }
}

#[test]
fn orthonormal_analysis_returns_basis_coordinates() {
    let seq = frame_partition::generate::<f64>(&frame_partition::GeneratorSpec::new(
        frame_partition::GeneratorKind::Orthonormal,
        4,
        4,
    ))
    .unwrap();
    let x: Vec<Complex<f64>> = [0.5, -1.0, 2.0, 0.0].iter().map(|&r| Complex::new(r, 0.0)).collect();
    let coords = analysis_op(&seq, &x).unwrap();
    assert_eq!(coords.as_slice(), &x[..]);
    assert!(validate_block(4, &[3, 0]).is_ok());
}
