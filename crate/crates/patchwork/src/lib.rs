//! Combinatorial patchworking of real algebraic hypersurfaces.
//!
//! This crate builds T-hypersurfaces from primitive triangulations of
//! non-singular lattice polytopes and sign distributions over F₂, computes
//! their topology directly on the quadrant cell model of the real toric
//! variety, and implements the discrete calculus (dual bases, wall jumps,
//! first and second derivatives, twists, intersection numbers) behind the
//! maximality criteria for their number of connected components.
//!
//! The main entry points:
//!
//! - [`lattice`]: lattice polytopes, primitive triangulations, face
//!   structure, enlarged boundaries, cubical cells.
//! - [`families`]: the Knudsen, Viro, and Itenberg–Viro triangulations of
//!   dilated standard simplices, Viro sums, and face restrictions.
//! - [`f2`]: bit-packed linear and exterior algebra over F₂.
//! - [`calculus`]: the discrete differential calculus of sign
//!   distributions and the maximality criteria.
//! - [`real`]: the real cell model ℝK of the toric variety, the
//!   T-hypersurface as a subcomplex, components and Betti numbers.
//! - [`experiments`]: Monte-Carlo and exhaustive sweeps, SVG rendering of
//!   planar patchworks, machine-readable reports.
//! - [`io`]: the JSON formats for triangulations, sign distributions, and
//!   cell-complex dumps.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod calculus;
pub mod experiments;
pub mod f2;
pub mod families;
pub mod io;
pub mod lattice;
pub mod real;
