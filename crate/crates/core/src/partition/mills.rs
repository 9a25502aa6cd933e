//! Constructive Mills' Lemma: split an index set so that every index keeps
//! at most half of its total interaction weight inside its own part.
//!
//! Local search from `(indices, ∅)`: while some index has more weight in its
//! own part than across, move the lowest such index. The within-part weight
//! `Φ` drops by the violation gap at every move, so the search terminates.

use crate::error::{FrameError, Result};
use crate::linalg::{validate_block, WeightMatrix};
use crate::scalar::Real;

/// Result of one local-search bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// Number of index moves performed.
    pub moves: usize,
}

/// Splits `indices` into `(J₁, J₂)` with `Σ_{i∈J_p} a_ij ≤ ½ Σ_{i∈indices} a_ij`
/// for every `j ∈ J_p`. Both parts are returned in ascending order; `J₂`
/// may be empty.
pub fn mills_bipartition<T: Real>(a: &WeightMatrix<T>, indices: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let out = mills_local_search(a, indices)?;
    Ok((out.first, out.second))
}

/// [`mills_bipartition`] with the move count exposed.
pub fn mills_local_search<T: Real>(a: &WeightMatrix<T>, indices: &[usize]) -> Result<Bipartition> {
    validate_block(a.len(), indices)?;
    let mut idx = indices.to_vec();
    idx.sort_unstable();
    let k = idx.len();
    let cap = 1024usize.max(64 * k * k);

    let mut in_second = vec![false; k];
    let (mut within, mut across) = side_sums(a, &idx, &in_second);
    let mut moves = 0usize;
    loop {
        match (0..k).find(|&t| within[t] > across[t]) {
            Some(t) => {
                moves += 1;
                if moves > cap {
                    return Err(FrameError::LocalSearchStalled(cap));
                }
                in_second[t] = !in_second[t];
                let jt = idx[t];
                for u in 0..k {
                    if u == t {
                        continue;
                    }
                    let w = a.get(idx[u], jt);
                    if in_second[u] == in_second[t] {
                        within[u] += w;
                        across[u] -= w;
                    } else {
                        within[u] -= w;
                        across[u] += w;
                    }
                }
                std::mem::swap(&mut within[t], &mut across[t]);
            }
            None => {
                // Incremental updates drift; accept only on direct sums.
                let (w, c) = side_sums(a, &idx, &in_second);
                if (0..k).all(|t| w[t] <= c[t]) {
                    break;
                }
                within = w;
                across = c;
            }
        }
    }

    let (mut first, mut second) = (Vec::new(), Vec::new());
    for (t, &j) in idx.iter().enumerate() {
        if in_second[t] {
            second.push(j);
        } else {
            first.push(j);
        }
    }
    Ok(Bipartition { first, second, moves })
}

/// Per-index (own side, other side) weight sums, summed in ascending order.
fn side_sums<T: Real>(a: &WeightMatrix<T>, idx: &[usize], in_second: &[bool]) -> (Vec<T>, Vec<T>) {
    let k = idx.len();
    let mut within = vec![T::zero(); k];
    let mut across = vec![T::zero(); k];
    for t in 0..k {
        for u in 0..k {
            if u == t {
                continue;
            }
            let w = a.get(idx[u], idx[t]);
            if in_second[u] == in_second[t] {
                within[t] += w;
            } else {
                across[t] += w;
            }
        }
    }
    (within, across)
}

/// Largest within-part row sum `max_p max_{j∈P} Σ_{i∈P} a_ij`.
pub fn max_within_row_sum<T: Real>(a: &WeightMatrix<T>, parts: &[&[usize]]) -> T {
    parts.iter().fold(T::zero(), |m, part| {
        part.iter().fold(m, |m, &j| m.max(a.row_sum_over(j, part)))
    })
}
