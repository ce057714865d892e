//! Triangulation families of the dilated standard simplices Pⁿ_d:
//! the Knudsen hyperplane-cut triangulations, Viro sums K ± L with the
//! derived Viro and Itenberg–Viro families, and face restrictions π_I.

mod knudsen;
mod viro;

pub use knudsen::{knudsen, knudsen_brute_force};
pub use viro::{itenberg_viro, restrict_to_face, viro_family, viro_sum};

use crate::lattice::ComplexError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Which family a generator request refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Knudsen,
    Viro,
    ItenbergViro,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "knudsen" => Ok(Family::Knudsen),
            "viro" => Ok(Family::Viro),
            "itenberg-viro" => Ok(Family::ItenbergViro),
            other => Err(format!(
                "unknown family `{other}` (expected knudsen, viro, or itenberg-viro)"
            )),
        }
    }
}

/// Build a named family member.
pub fn generate(
    family: Family,
    dim: usize,
    size: i64,
) -> Result<crate::lattice::PrimitiveComplex, FamilyError> {
    match family {
        Family::Knudsen => Ok(knudsen(dim, size)?),
        Family::Viro => viro_family(dim, size),
        Family::ItenbergViro => itenberg_viro(dim, size),
    }
}
