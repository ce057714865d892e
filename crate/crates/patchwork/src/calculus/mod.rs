//! Discrete differential calculus of sign distributions on primitive
//! complexes: dual bases and wall jumps, first and second derivatives,
//! ρ-uniformity, twists, intersection numbers, the maximality criteria,
//! the simple-integrability solver, and the T-curve Laplacian.

mod distributions;
mod frames;
mod haas;
mod intersection;
mod ops;

pub use distributions::{named_distribution, sphere_indicators, NamedDistribution, QuadraticCoeffs};
pub use frames::{omega, Frames, Wall};
pub use haas::{
    haas_check, kappa, laplacian, laplacian_nullity, solve_simple_harnack, HaasReport, Kappa,
    Prediction,
};
pub use intersection::{intersection_number, matrix_m0, MatrixM0};
pub use ops::{
    first_derivative, first_derivative_of, rho_chain, rho_uniformity, second_derivative,
    second_derivative_of, twist, RhoChain,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Scan Knudsen triangulations of P³_d upward and return the first
/// non-ρ-uniform one together with its frames.
pub fn first_nonuniform_knudsen3(
    max_size: i64,
) -> Option<(crate::lattice::PrimitiveComplex, Frames)> {
    for d in 1..=max_size {
        let k = crate::families::knudsen(3, d).ok()?;
        let f = Frames::new(&k);
        let (uniform, _) = rho_uniformity(&f);
        if !uniform {
            return Some((k, f));
        }
    }
    None
}

/// A sign distribution: one F₂ value per vertex of the complex.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignDistribution {
    bits: Vec<bool>,
}

impl SignDistribution {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn constant(len: usize, value: bool) -> Self {
        Self {
            bits: vec![value; len],
        }
    }

    /// Indicator of a single vertex.
    pub fn indicator(len: usize, vertex: usize) -> Self {
        let mut bits = vec![false; len];
        bits[vertex] = true;
        Self { bits }
    }

    pub fn from_fn(len: usize, f: impl FnMut(usize) -> bool) -> Self {
        Self {
            bits: (0..len).map(f).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn get(&self, vertex: usize) -> bool {
        self.bits[vertex]
    }

    pub fn set(&mut self, vertex: usize, value: bool) {
        self.bits[vertex] = value;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn xor(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }
}

impl std::fmt::Debug for SignDistribution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", u8::from(b))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error("unknown simplex {0:?}")]
    UnknownSimplex(Vec<usize>),
    #[error("simplex {0:?} lies on the boundary")]
    BoundarySimplex(Vec<usize>),
    #[error("vertex {vertex} is not a vertex of {simplex:?}")]
    NotAVertexOf { vertex: usize, simplex: Vec<usize> },
    #[error("wedge sum is neither zero nor the normal-plane generator (internal inconsistency)")]
    NotInLine,
    #[error("the triangulation is not rho-uniform")]
    NotRhoUniform,
    #[error("operation requires dimension {expected}, complex has dimension {actual}")]
    WrongDimension { expected: usize, actual: usize },
    #[error("simplex {0:?} is not interior")]
    NotInterior(Vec<usize>),
}
