//! First and second derivatives, twists, ρ-uniformity, and the ρ chain.

use super::{CalculusError, Frames, SignDistribution, Wall};
use crate::f2::Bits;
use crate::lattice::{PrimitiveComplex, Simplex};

/// Dε on a maximal simplex: Σ_α ε(α)·e(α).
pub fn first_derivative(
    k: &PrimitiveComplex,
    frames: &Frames,
    eps: &SignDistribution,
    max_idx: usize,
) -> Bits {
    let s = &k.maximal_simplices()[max_idx];
    let mut acc: Bits = 0;
    for &v in s.verts() {
        if eps.get(v) {
            acc ^= frames.dual_vector(k, max_idx, v).unwrap();
        }
    }
    acc
}

/// Dε looked up by simplex.
pub fn first_derivative_of(
    k: &PrimitiveComplex,
    frames: &Frames,
    eps: &SignDistribution,
    s: &Simplex,
) -> Result<Bits, CalculusError> {
    let id = k
        .index_of(s)
        .ok_or_else(|| CalculusError::UnknownSimplex(s.verts().to_vec()))?;
    if id.0 != k.dim() {
        return Err(CalculusError::UnknownSimplex(s.verts().to_vec()));
    }
    Ok(first_derivative(k, frames, eps, id.1))
}

/// |D²ε| on an interior wall: ε(α₊) + ε(α₋) + Σ_α ε(α)|ρ(α)|.
pub fn second_derivative(eps: &SignDistribution, wall: &Wall) -> bool {
    let mut acc = eps.get(wall.apices[0]) ^ eps.get(wall.apices[1]);
    for (&v, &r) in wall.simplex.verts().iter().zip(&wall.rho) {
        if r && eps.get(v) {
            acc = !acc;
        }
    }
    acc
}

/// |D²ε| looked up by simplex; boundary walls are rejected.
pub fn second_derivative_of(
    k: &PrimitiveComplex,
    frames: &Frames,
    eps: &SignDistribution,
    s: &Simplex,
) -> Result<bool, CalculusError> {
    Ok(second_derivative(eps, frames.wall_of(k, s)?))
}

/// The twist bit |D²ε + ρ(β)| of a wall in the direction of one of its
/// vertices.
pub fn twist(
    k: &PrimitiveComplex,
    frames: &Frames,
    eps: &SignDistribution,
    s: &Simplex,
    beta: usize,
) -> Result<bool, CalculusError> {
    let wall = frames.wall_of(k, s)?;
    let rho = wall
        .rho_at(beta)
        .ok_or_else(|| CalculusError::NotAVertexOf {
            vertex: beta,
            simplex: s.verts().to_vec(),
        })?;
    Ok(second_derivative(eps, wall) ^ rho)
}

/// ρ-uniformity: ρ must be constant on the relevant vertices I(σ) of every
/// interior wall. Returns the failing walls.
pub fn rho_uniformity(frames: &Frames) -> (bool, Vec<Simplex>) {
    let failing: Vec<Simplex> = frames
        .walls()
        .iter()
        .filter(|w| !w.is_uniform())
        .map(|w| w.simplex.clone())
        .collect();
    (failing.is_empty(), failing)
}

/// The chain ρ of a ρ-uniform complex: a value per (n−1)-simplex outside
/// B₀K (the uniform value of ρ on I(σ) off B₁K, and ρ(ap(σ)) on
/// B₁K \ B₀K).
pub struct RhoChain {
    /// Indexed like `simplices(n−1)`; `None` on B₀K and boundary simplices.
    pub values: Vec<Option<bool>>,
}

impl RhoChain {
    /// Verify ∂ρ = 0 relative to B₀K: for every (n−2)-simplex outside
    /// B₀K, the normal vectors of its supporting walls XOR to zero.
    pub fn is_cycle(&self, k: &PrimitiveComplex, frames: &Frames) -> bool {
        let n = k.dim();
        if n < 2 {
            return true;
        }
        for (t, tau) in k.simplices(n - 2).iter().enumerate() {
            if k.in_b0((n - 2, t)) {
                continue;
            }
            let mut acc: Bits = 0;
            for (w, wall_simplex) in k.simplices(n - 1).iter().enumerate() {
                if !tau.is_face_of(wall_simplex) {
                    continue;
                }
                if let Some(Some(value)) = self.values.get(w).copied() {
                    if value {
                        let wall = frames.wall_at(w).expect("valued wall is interior");
                        acc ^= wall.normal;
                    }
                }
            }
            if acc != 0 {
                return false;
            }
        }
        true
    }
}

/// Compute the ρ chain; fails with `NotRhoUniform` when a wall has a
/// non-constant jump on its relevant vertices.
pub fn rho_chain(k: &PrimitiveComplex, frames: &Frames) -> Result<RhoChain, CalculusError> {
    let n = k.dim();
    let mut values = vec![None; k.simplices(n - 1).len()];
    for wall in frames.walls() {
        if !wall.is_uniform() {
            return Err(CalculusError::NotRhoUniform);
        }
        let id = (n - 1, wall.index);
        if k.in_b0(id) {
            continue;
        }
        let value = if k.in_b1(id) {
            let ap = k.apex(id).expect("B1 \\ B0 simplex has an apex");
            wall.rho_at(ap).expect("apex belongs to the wall")
        } else {
            wall.uniform_rho()
                .expect("wall off B1 has a relevant vertex")
        };
        values[wall.index] = Some(value);
    }
    Ok(RhoChain { values })
}
