//! Vector and matrix substrate: sequences, operators, Gram and weight
//! matrices, Hermitian eigensolves.

mod eigen;
mod gram;
mod matrix;
mod operators;
mod sequence;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use gram::{gram, weight_matrix, GramMatrix, WeightMatrix, WeightPower};
pub use matrix::SquareMatrix;
pub use operators::{analysis_op, inner, synthesis};
pub use sequence::{CoefficientVector, UnitVectorSequence};

use crate::error::{FrameError, Result};

/// Checks that `block` is a nonempty set of distinct indices below `n`.
pub fn validate_block(n: usize, block: &[usize]) -> Result<()> {
    if block.is_empty() {
        return Err(FrameError::EmptyBlock);
    }
    let mut seen = vec![false; n];
    for &i in block {
        if i >= n {
            return Err(FrameError::IndexOutOfRange { index: i, len: n });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(FrameError::DuplicateIndex(i));
        }
    }
    Ok(())
}
