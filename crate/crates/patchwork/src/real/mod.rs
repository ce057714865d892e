//! The real cell model: quadrant lifts of the cubical subdivision glue
//! into a regular CW-complex ℝK for the real toric variety, and the
//! T-hypersurface ℝX_ε sits inside it as the subcomplex selected by the
//! sign cocycle. Components, Betti numbers, divisor incidence, and the
//! degree-one inclusion test are computed directly on these complexes.

mod build;
mod checks;
mod topology;

pub use build::{build_rk, build_rk_with, build_tx, build_tx_with, sedentarity, DEFAULT_MAX_CELLS};
pub use checks::{avoided_lift_check, h1_inclusion_surjective, manifold_check};
pub use topology::{betti, component_betti, components, Components};

use crate::f2::Bits;
use crate::lattice::SimplexId;
use thiserror::Error;

/// One cell of the real model: a cubical cell [lower; upper] of the
/// triangulation together with the canonical representative of its
/// argument class in t(F₂)/Sed(upper).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RealCell {
    pub lower: SimplexId,
    pub upper: SimplexId,
    pub arg: Bits,
}

/// A regular cell complex of quadrant lifts; both ℝK and ℝX_ε are
/// instances. Cells are listed per dimension with codimension-one face
/// incidence; `divisors` carries, per cell, the facets of P whose toric
/// divisor region contains the cell.
pub struct RealComplex {
    /// Ambient dimension n of the triangulated polytope.
    pub ambient: usize,
    pub cells: Vec<Vec<RealCell>>,
    /// `faces[d][i]`: indices into `cells[d−1]`, XOR-reduced (an even face
    /// repetition cancels).
    pub faces: Vec<Vec<Vec<u32>>>,
    /// Tight-facet mask of the upper simplex, per cell.
    pub divisors: Vec<Vec<u64>>,
    /// Whether this is the T-hypersurface subcomplex (as opposed to ℝK).
    pub is_subcomplex: bool,
}

impl RealComplex {
    pub fn cell_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn top_dim(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.cell_count() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealError {
    #[error("sedentarity dimension mismatch on {simplex:?}: span {span}, codimension {codim}")]
    SedDimensionMismatch {
        simplex: Vec<usize>,
        span: usize,
        codim: usize,
    },
    #[error("refusing to build {expected} cells (cap {cap})")]
    TooManyCells { expected: usize, cap: usize },
    #[error("operation requires dimension {expected}, complex has dimension {actual}")]
    UnsupportedDimension { expected: usize, actual: usize },
}
