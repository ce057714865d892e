//! Experiment drivers: seeded Monte-Carlo estimates of the expected
//! component count, exhaustive small-instance sweeps, SVG rendering of
//! planar patchworks, and the consolidated JSON report.

mod exhaustive;
mod monte_carlo;
mod report;
mod svg;

pub use exhaustive::{exhaustive_b0, ExhaustiveB0};
pub use monte_carlo::{monte_carlo_b0, ExperimentResult};
pub use report::{report, Bounds, ComponentReport, Report};
pub use svg::render_svg;

use crate::real::RealError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("too many vertices for an exhaustive sweep: {count} (cap {cap})")]
    TooManyVertices { count: usize, cap: usize },
    #[error("rendering requires dimension {expected}, complex has dimension {actual}")]
    WrongDimension { expected: usize, actual: usize },
    #[error(transparent)]
    Real(#[from] RealError),
    #[error(transparent)]
    Calculus(#[from] crate::calculus::CalculusError),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}
