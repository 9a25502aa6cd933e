use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::halving::{halving_partition, level_target, levels_borderline, required_levels, Partition};
use crate::analysis::{
    is_borderline, riesz_certificate, schur_bessel_bound, separation_report, spectral_bessel_bound, RieszCertificate,
};
use crate::error::{FrameError, Result};
use crate::linalg::{gram, weight_matrix, GramMatrix, UnitVectorSequence, WeightPower};
use crate::scalar::Real;

/// Which per-block functional a partition is certified against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionMode {
    /// Riesz blocks: `σ < 1`, weights `|G_ij|`, `B` from the Schur test.
    Feichtinger,
    /// Uniformly separated blocks: `η < 1`, weights `|G_ij|²`, spectral `B`.
    Uniform,
}

impl PartitionMode {
    pub fn weight_power(self) -> WeightPower {
        match self {
            PartitionMode::Feichtinger => WeightPower::Abs,
            PartitionMode::Uniform => WeightPower::Squared,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PartitionMode::Feichtinger => "feichtinger",
            PartitionMode::Uniform => "uniform",
        }
    }
}

impl std::str::FromStr for PartitionMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "feichtinger" => Ok(Self::Feichtinger),
            "uniform" => Ok(Self::Uniform),
            other => Err(format!("unknown mode `{other}` (expected feichtinger|uniform)")),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct PartitionOptions<T> {
    /// Replaces the computed Bessel constant; must not be smaller than it.
    pub bessel_override: Option<T>,
    /// Thread cap for Gram construction and block certification.
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockCertificate<T> {
    pub indices: Vec<usize>,
    pub sigma: T,
    pub eta: T,
    pub gamma: T,
    pub riesz: RieszCertificate<T>,
    /// `σ < 1` (feichtinger) or `η < 1` (uniform).
    pub certified: bool,
    /// The mode's functional lies in `[1 − 1e−12, 1)`.
    pub borderline: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionCertificate<T> {
    pub partition: Partition,
    pub mode: PartitionMode,
    /// Bessel constant driving the level count: the computed (or
    /// overridden) bound, raised to `1 + max_j Σ_i a_ij` if rounding left
    /// it below that.
    pub global_b: T,
    pub spectral_b: T,
    pub schur_b: T,
    /// `(B − 1)/2^m`
    pub target: T,
    pub levels_borderline: bool,
    pub per_block: Vec<BlockCertificate<T>>,
    pub all_certified: bool,
}

pub fn feichtinger_partition<T: Real>(
    seq: &UnitVectorSequence<T>,
    opts: &PartitionOptions<T>,
) -> Result<PartitionCertificate<T>> {
    partition_sequence(seq, PartitionMode::Feichtinger, opts)
}

pub fn uniform_partition<T: Real>(
    seq: &UnitVectorSequence<T>,
    opts: &PartitionOptions<T>,
) -> Result<PartitionCertificate<T>> {
    partition_sequence(seq, PartitionMode::Uniform, opts)
}

/// Full pipeline: Gram, Bessel constant, level count, halving, per-block
/// certification.
pub fn partition_sequence<T: Real>(
    seq: &UnitVectorSequence<T>,
    mode: PartitionMode,
    opts: &PartitionOptions<T>,
) -> Result<PartitionCertificate<T>> {
    with_threads(opts.threads, || {
        let g = gram(seq);
        let spectral_b = spectral_bessel_bound(&g)?;
        let schur_b = schur_bessel_bound(&g);
        let computed = match mode {
            PartitionMode::Feichtinger => schur_b,
            PartitionMode::Uniform => spectral_b,
        };
        let global_b = match opts.bessel_override {
            Some(b) if b < computed => {
                return Err(FrameError::Argument(format!(
                    "Bessel override {b} is below the computed bound {computed}"
                )))
            }
            Some(b) => b,
            None => computed,
        };
        // Halving divides the largest weight row sum, which is ≤ B − 1 in
        // exact arithmetic; take the max so rounding in B cannot leave a
        // row above the target.
        let weights = weight_matrix(&g, mode.weight_power());
        let global_b = global_b.max(T::one() + weights.max_row_sum());
        let levels = required_levels(global_b)?;
        let partition = halving_partition(&weights, levels)?;
        let per_block = certify_blocks(&g, &partition.blocks, mode)?;
        let all_certified = per_block.iter().all(|b| b.certified);
        Ok(PartitionCertificate {
            target: level_target(global_b, levels),
            levels_borderline: levels_borderline(global_b),
            partition,
            mode,
            global_b,
            spectral_b,
            schur_b,
            per_block,
            all_certified,
        })
    })
}

/// Certifies every block independently (in parallel, order preserved).
pub fn certify_blocks<T: Real>(
    g: &GramMatrix<T>,
    blocks: &[Vec<usize>],
    mode: PartitionMode,
) -> Result<Vec<BlockCertificate<T>>> {
    blocks.par_iter().map(|b| certify_block(g, b, mode)).collect()
}

pub fn certify_block<T: Real>(g: &GramMatrix<T>, block: &[usize], mode: PartitionMode) -> Result<BlockCertificate<T>> {
    let sep = separation_report(g, block)?;
    let riesz = riesz_certificate(g, block)?;
    let value = match mode {
        PartitionMode::Feichtinger => sep.sigma,
        PartitionMode::Uniform => sep.eta,
    };
    Ok(BlockCertificate {
        indices: block.to_vec(),
        sigma: sep.sigma,
        eta: sep.eta,
        gamma: sep.gamma,
        riesz,
        certified: value < T::one(),
        borderline: is_borderline(value),
    })
}

/// Runs `f` on a dedicated pool of `threads` workers, or on the global
/// pool when `None`.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> Result<R> + Send) -> Result<R> {
    match threads {
        None => f(),
        Some(0) => Err(FrameError::Argument("thread count must be at least 1".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| FrameError::Argument(format!("thread pool: {e}")))?
            .install(f),
    }
}
