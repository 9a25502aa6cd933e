//! Riesz-sequence certificates and finite partitions of unit-vector systems.
//!
//! For a finite family of unit vectors `{f_n}` the crate computes the Gram
//! matrix and its functionals (Bessel bounds, σ, η, γ), certifies blocks
//! with `σ < 1` as Riesz sequences with bounds `1 ± σ`, and splits a
//! sequence into at most `2^m` such blocks by iterated local-search
//! bipartition. A second partitioner produces blocks with `η < 1`.
//!
//! Numeric code is generic over [`Real`] (`f32`, `f64`); the aliases below
//! fix the scalar for the common case. File formats and the CLI work in
//! `f64`.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod generators;
pub mod io;
pub mod linalg;
pub mod partition;
pub mod scalar;

pub use analysis::{
    bessel_report, eta, riesz_certificate, schur_bessel_bound, separation_constant, separation_report, sigma,
    spectral_bessel_bound, verify_riesz_inequality, BesselReport, RieszCertificate, SeparationReport,
};
pub use error::{FrameError, Result};
pub use generators::{generate, GeneratorKind, GeneratorSpec};
pub use linalg::{
    analysis_op, gram, hermitian_eigen, hermitian_eigenvalues, synthesis, weight_matrix, CoefficientVector, GramMatrix,
    SquareMatrix, UnitVectorSequence, WeightMatrix, WeightPower,
};
pub use partition::{
    brute_force_bipartition, feichtinger_partition, halving_partition, mills_bipartition, required_levels,
    uniform_partition, Partition, PartitionCertificate, PartitionMode, PartitionOptions,
};
pub use scalar::{Field, Real};

pub type Sequence64 = UnitVectorSequence<f64>;
pub type Sequence32 = UnitVectorSequence<f32>;
pub type Gram64 = GramMatrix<f64>;
pub type Gram32 = GramMatrix<f32>;
pub type Weights64 = WeightMatrix<f64>;
pub type Weights32 = WeightMatrix<f32>;
pub type Coefficients64 = CoefficientVector<f64>;
pub type Certificate64 = PartitionCertificate<f64>;
pub type Certificate32 = PartitionCertificate<f32>;
pub type Riesz64 = RieszCertificate<f64>;
