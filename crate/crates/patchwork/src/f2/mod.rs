//! Exact linear and small exterior algebra over F₂.
//!
//! Everything here is bit-packed and deterministic: dense vectors and
//! matrices with Gaussian elimination (`rank`, `solve`, `nullspace`),
//! wedge products and Plücker coordinates for subspaces of a small
//! ambient space, a union-find, and a sparse column reducer used by the
//! cell-complex homology routines.

mod matrix;
mod sparse;
mod union_find;
mod vector;
mod wedge;

pub use matrix::F2Matrix;
pub use sparse::{sparse_nullspace, sparse_rank};
pub use union_find::UnionFind;
pub use vector::F2Vector;
pub use wedge::{line_generator, pluecker, WedgeVector};

use thiserror::Error;

/// Ambient-space vectors of t(F₂)/t*(F₂) are capped at 16 coordinates and
/// carried as plain bit masks.
pub type Bits = u32;

/// Maximum supported ambient dimension for `WedgeVector` and `Bits`.
pub const MAX_AMBIENT_DIM: usize = 16;

/// Parity of ⟨a, b⟩ for two masked vectors.
#[inline]
pub fn dot(a: Bits, b: Bits) -> bool {
    (a & b).count_ones() % 2 == 1
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("wedge degree {degree} exceeds ambient dimension {ambient}")]
    DegreeOverflow { degree: usize, ambient: usize },
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("index {index} out of range {size}")]
    IndexOutOfRange { index: usize, size: usize },
}
