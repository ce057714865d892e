//! Named sign distributions and the per-vertex sphere indicators.

use super::{second_derivative, Frames, SignDistribution};
use crate::lattice::PrimitiveComplex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Coefficients of a quadratic polynomial over F₂ in the vertex
/// coordinates: constant + Σ linear\[i\]·xᵢ + Σ x_i·x_j over the listed
/// pairs (0-based coordinate indices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticCoeffs {
    #[serde(default)]
    pub constant: bool,
    #[serde(default)]
    pub linear: Vec<bool>,
    #[serde(default)]
    pub quadratic: Vec<(usize, usize)>,
}

/// The built-in sign distributions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedDistribution {
    /// hⁿ(x) = Σ_{i<j} xᵢxⱼ mod 2.
    Harnack,
    Quadratic(QuadraticCoeffs),
    Constant(bool),
    /// Seeded deterministic draw (ChaCha8, one bit per vertex in index
    /// order).
    Random(u64),
}

/// Evaluate a named distribution at every vertex of the complex.
pub fn named_distribution(kind: &NamedDistribution, k: &PrimitiveComplex) -> SignDistribution {
    let len = k.points().len();
    match kind {
        NamedDistribution::Harnack => SignDistribution::from_fn(len, |v| {
            let c = &k.point(v).coords;
            let mut acc = 0i64;
            for i in 0..c.len() {
                for j in i + 1..c.len() {
                    acc += c[i] * c[j];
                }
            }
            acc.rem_euclid(2) == 1
        }),
        NamedDistribution::Quadratic(q) => SignDistribution::from_fn(len, |v| {
            let c = &k.point(v).coords;
            let mut acc = i64::from(q.constant);
            for (i, &b) in q.linear.iter().enumerate() {
                if b && i < c.len() {
                    acc += c[i];
                }
            }
            for &(i, j) in &q.quadratic {
                if i < c.len() && j < c.len() {
                    acc += c[i] * c[j];
                }
            }
            acc.rem_euclid(2) == 1
        }),
        NamedDistribution::Constant(b) => SignDistribution::constant(len, *b),
        NamedDistribution::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            SignDistribution::from_fn(len, |_| rng.gen())
        }
    }
}

/// Interior vertices β whose star is crossed the simple-integrable way:
/// |D²ε| = |ρ(β)| on every wall containing β. Each such vertex contributes
/// a detached sphere to the T-hypersurface, so b₀ ≥ 1 + the count.
pub fn sphere_indicators(
    k: &PrimitiveComplex,
    frames: &Frames,
    eps: &SignDistribution,
) -> Vec<usize> {
    k.interior_vertices()
        .into_iter()
        .filter(|&beta| {
            frames
                .walls_of_vertex(k, beta)
                .all(|wall| second_derivative(eps, wall) == wall.rho_at(beta).unwrap())
        })
        .collect()
}
