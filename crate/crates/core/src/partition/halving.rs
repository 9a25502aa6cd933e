use serde::{Deserialize, Serialize};

use super::mills::mills_bipartition;
use crate::error::{FrameError, Result};
use crate::linalg::WeightMatrix;
use crate::scalar::Real;

/// Disjoint nonempty blocks covering `{0, …, n−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
    /// Number of halving rounds applied.
    pub levels: usize,
}

impl Partition {
    /// Checks disjointness, coverage, nonempty blocks and `#blocks ≤ 2^levels`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>, levels: usize) -> Result<Self> {
        let mut owner = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(FrameError::EmptyBlock);
            }
            for &i in block {
                if i >= n {
                    return Err(FrameError::IndexOutOfRange { index: i, len: n });
                }
                if std::mem::replace(&mut owner[i], true) {
                    return Err(FrameError::DuplicateIndex(i));
                }
            }
        }
        if let Some(missing) = owner.iter().position(|&o| !o) {
            return Err(FrameError::Argument(format!(
                "index {missing} is not covered by any block"
            )));
        }
        if levels < usize::BITS as usize && blocks.len() > 1usize << levels {
            return Err(FrameError::Argument(format!(
                "{} blocks exceed 2^{levels}",
                blocks.len()
            )));
        }
        Ok(Self { n, blocks, levels })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Applies [`mills_bipartition`] to every block, `levels` times. Each final
/// block `P` satisfies `Σ_{i∈P} a_ij ≤ 2^−levels · Σ_i a_ij` for `j ∈ P`.
/// Empty halves are dropped; `levels` is kept as requested.
pub fn halving_partition<T: Real>(a: &WeightMatrix<T>, levels: usize) -> Result<Partition> {
    let n = a.len();
    if n == 0 {
        return Err(FrameError::EmptyBlock);
    }
    let mut blocks = vec![(0..n).collect::<Vec<_>>()];
    for _ in 0..levels {
        let mut next = Vec::with_capacity(2 * blocks.len());
        let mut split_any = false;
        for block in &blocks {
            let (first, second) = mills_bipartition(a, block)?;
            split_any |= !second.is_empty();
            next.push(first);
            if !second.is_empty() {
                next.push(second);
            }
        }
        blocks = next;
        if !split_any {
            // every block is already internally weightless
            break;
        }
    }
    Ok(Partition { n, blocks, levels })
}

/// Smallest `m ≥ 0` with `(B − 1)/2^m < 1`.
pub fn required_levels<T: Real>(bessel_bound: T) -> Result<usize> {
    if !bessel_bound.is_finite() || bessel_bound < T::one() {
        return Err(FrameError::Argument(format!(
            "Bessel bound must be finite and at least 1, got {bessel_bound}"
        )));
    }
    let two = T::lit(2.0);
    let mut excess = bessel_bound - T::one();
    let mut m = 0;
    while excess >= T::one() {
        excess /= two;
        m += 1;
    }
    Ok(m)
}

/// `(B − 1)/2^m`
pub fn level_target<T: Real>(bessel_bound: T, levels: usize) -> T {
    (0..levels).fold(bessel_bound - T::one(), |x, _| x / T::lit(2.0))
}

/// True when `B − 1` is within `1e−12` (relative) of a power of two, where
/// the strict level rule flips.
pub fn levels_borderline<T: Real>(bessel_bound: T) -> bool {
    let excess = bessel_bound - T::one();
    if excess <= T::zero() {
        return false;
    }
    let nearest = T::lit(2.0).powf(excess.log2().round());
    (excess - nearest).abs() <= T::lit(1e-12) * nearest
}
