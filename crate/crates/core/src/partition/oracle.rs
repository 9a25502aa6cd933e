use crate::error::{FrameError, Result};
use crate::linalg::{validate_block, WeightMatrix};
use crate::scalar::Real;

/// Size cap of [`brute_force_bipartition`].
pub const ORACLE_MAX_INDICES: usize = 20;

/// Exhaustive scan of the `2^(k−1)` bipartitions of `indices` (first index
/// pinned to `J₁`). Returns a bipartition minimizing the largest
/// within-part row sum, together with that minimum. Ties keep the
/// lowest mask.
pub fn brute_force_bipartition<T: Real>(a: &WeightMatrix<T>, indices: &[usize]) -> Result<(Vec<usize>, Vec<usize>, T)> {
    if indices.len() > ORACLE_MAX_INDICES {
        return Err(FrameError::TooLargeForOracle {
            size: indices.len(),
            cap: ORACLE_MAX_INDICES,
        });
    }
    validate_block(a.len(), indices)?;
    let k = indices.len();
    let mut best_mask = 0u32;
    let mut best = T::infinity();
    for mask in 0..(1u32 << (k - 1)) {
        let side = |t: usize| t > 0 && mask >> (t - 1) & 1 == 1;
        let mut worst = T::zero();
        for t in 0..k {
            let own = side(t);
            let sum = (0..k)
                .filter(|&u| u != t && side(u) == own)
                .fold(T::zero(), |acc, u| acc + a.get(indices[u], indices[t]));
            worst = worst.max(sum);
            if worst >= best {
                break;
            }
        }
        if worst < best {
            best = worst;
            best_mask = mask;
        }
    }
    let (mut first, mut second) = (Vec::new(), Vec::new());
    for (t, &j) in indices.iter().enumerate() {
        if t > 0 && best_mask >> (t - 1) & 1 == 1 {
            second.push(j);
        } else {
            first.push(j);
        }
    }
    Ok((first, second, best))
}
