//! Non-singular lattice polytopes and primitive triangulations.
//!
//! `LatticePolytope` carries explicit facet inequalities; `build_complex`
//! validates a triangulation against it (primitivity per simplex, tiling by
//! normalized volume, pseudomanifold walls) and derives the face lattice,
//! boundary subcomplex, the enlarged boundaries, and cubical cells.

mod complex;
pub mod fixtures;
mod polytope;

pub use complex::{build_complex, Cube, PrimitiveComplex, SimplexId};
pub use polytope::{Facet, LatticePoint, LatticePolytope};

use thiserror::Error;

/// A simplex as a strictly increasing list of point indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    verts: Vec<usize>,
}

impl Simplex {
    pub fn new(mut verts: Vec<usize>) -> Self {
        verts.sort_unstable();
        verts.dedup();
        Self { verts }
    }

    pub fn from_sorted(verts: Vec<usize>) -> Self {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        Self { verts }
    }

    pub fn vertex(v: usize) -> Self {
        Self { verts: vec![v] }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn dim(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.verts.iter().all(|v| other.contains(*v))
    }

    /// The face obtained by dropping one vertex.
    pub fn opposite(&self, v: usize) -> Simplex {
        Simplex::from_sorted(self.verts.iter().copied().filter(|&u| u != v).collect())
    }

    /// All faces of codimension one.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.verts.iter().map(move |&v| self.opposite(v))
    }

    /// Join with a vertex not already present.
    pub fn join(&self, v: usize) -> Simplex {
        debug_assert!(!self.contains(v));
        let mut verts = self.verts.clone();
        verts.push(v);
        verts.sort_unstable();
        Simplex::from_sorted(verts)
    }

    /// All non-empty faces, by dimension.
    pub fn all_faces(&self) -> Vec<Simplex> {
        let k = self.verts.len();
        let mut out = Vec::new();
        for mask in 1u32..(1 << k) {
            let verts: Vec<usize> = (0..k)
                .filter(|i| (mask >> i) & 1 == 1)
                .map(|i| self.verts[i])
                .collect();
            out.push(Simplex::from_sorted(verts));
        }
        out
    }
}

impl std::fmt::Debug for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.verts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("simplex {0:?} is not primitive (determinant {1})")]
    NonPrimitiveSimplex(Vec<usize>, i64),
    #[error("triangulation does not tile the polytope: {0}")]
    VolumeMismatch(String),
    #[error("dangling face: {0}")]
    DanglingFace(String),
    #[error("polytope is singular at vertex {0:?}")]
    SingularPolytope(Vec<i64>),
    #[error("unknown simplex {0:?}")]
    UnknownSimplex(Vec<usize>),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Exact determinant of a small integer matrix (fraction-free elimination).
pub(crate) fn int_determinant(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    (sign * m[n - 1][n - 1]) as i64
}
