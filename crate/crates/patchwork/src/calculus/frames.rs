//! Per-simplex frame data: the dual basis vectors attached to the vertices
//! of each maximal simplex, and for every interior wall the pair of
//! adjacent maximal simplices with its normal generator and jump bits ρ.

use super::CalculusError;
use crate::f2::{pluecker, Bits, WedgeVector, MAX_AMBIENT_DIM};
use crate::lattice::{PrimitiveComplex, Simplex};

/// ω(σᵖ): the generator of ⋀ᵖTσᵖ(F₂), i.e. the Plücker vector of the
/// mod-2 edge directions. For p = 0 this is the scalar 1.
pub fn omega(k: &PrimitiveComplex, s: &Simplex) -> Result<WedgeVector, CalculusError> {
    if k.index_of(s).is_none() {
        return Err(CalculusError::UnknownSimplex(s.verts().to_vec()));
    }
    let n = k.dim();
    if s.dim() == 0 {
        return Ok(WedgeVector::one(n));
    }
    let base = k.point(s.verts()[0]);
    let rows: Vec<Bits> = s.verts()[1..]
        .iter()
        .map(|&v| {
            let diff = k.point(v).sub(base);
            let mut mask: Bits = 0;
            for (i, &c) in diff.iter().enumerate() {
                if c.rem_euclid(2) == 1 {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    Ok(pluecker(&rows, n))
}

/// Data attached to one interior (n−1)-simplex.
#[derive(Clone, Debug)]
pub struct Wall {
    /// Index into `simplices(n−1)`.
    pub index: usize,
    /// The wall simplex itself.
    pub simplex: Simplex,
    /// The two adjacent maximal simplices, in increasing index order.
    pub cofaces: [usize; 2],
    /// Vertices of the cofaces opposite to the wall, aligned with `cofaces`.
    pub apices: [usize; 2],
    /// The generator [N(σ)] of the normal line.
    pub normal: Bits,
    /// |ρ_σ(α)| per wall vertex, aligned with the sorted vertex list.
    pub rho: Vec<bool>,
    /// I(σ) membership per wall vertex: interior vertices whose opposite
    /// face in σ is not contained in ∂K.
    pub relevant: Vec<bool>,
}

impl Wall {
    pub fn rho_at(&self, vertex: usize) -> Option<bool> {
        self.simplex
            .verts()
            .iter()
            .position(|&v| v == vertex)
            .map(|i| self.rho[i])
    }

    pub fn relevant_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.simplex
            .verts()
            .iter()
            .zip(&self.relevant)
            .filter(|(_, &r)| r)
            .map(|(&v, _)| v)
    }

    /// Whether ρ restricted to I(σ) is constant.
    pub fn is_uniform(&self) -> bool {
        let values: Vec<bool> = self
            .rho
            .iter()
            .zip(&self.relevant)
            .filter(|(_, &r)| r)
            .map(|(&b, _)| b)
            .collect();
        values.windows(2).all(|w| w[0] == w[1])
    }

    /// The constant value of ρ on I(σ), when uniform and non-empty.
    pub fn uniform_rho(&self) -> Option<bool> {
        if !self.is_uniform() {
            return None;
        }
        self.rho
            .iter()
            .zip(&self.relevant)
            .find(|(_, &r)| r)
            .map(|(&b, _)| b)
    }
}

/// Immutable frame cache for a complex: dual vectors per maximal simplex
/// and wall data per interior (n−1)-simplex.
pub struct Frames {
    n: usize,
    /// `dual[m][i]` is the dual vector of the i-th vertex of maximal
    /// simplex m.
    dual: Vec<Vec<Bits>>,
    walls: Vec<Wall>,
    /// Map from (n−1)-simplex index to position in `walls`.
    wall_index: Vec<Option<usize>>,
}

impl Frames {
    pub fn new(k: &PrimitiveComplex) -> Self {
        let n = k.dim();
        assert!(
            n <= MAX_AMBIENT_DIM,
            "ambient dimension above the supported cap"
        );
        let dual: Vec<Vec<Bits>> = k
            .maximal_simplices()
            .iter()
            .map(|s| dual_vectors(k, s))
            .collect();
        let mut walls = Vec::new();
        let mut wall_index = vec![None; k.simplices(n - 1).len()];
        for w in k.interior_walls() {
            let simplex = k.simplices(n - 1)[w].clone();
            let cof = k.wall_cofaces(w);
            let cofaces = [cof[0], cof[1]];
            let apices = cofaces.map(|m| {
                let max = &k.maximal_simplices()[m];
                *max.verts()
                    .iter()
                    .find(|v| !simplex.contains(**v))
                    .expect("coface has a vertex off the wall")
            });
            // The normal generator is the dual vector of either apex in its
            // own simplex; both computations must agree.
            let pos_plus = vertex_position(&k.maximal_simplices()[cofaces[0]], apices[0]);
            let pos_minus = vertex_position(&k.maximal_simplices()[cofaces[1]], apices[1]);
            let normal = dual[cofaces[0]][pos_plus];
            debug_assert_eq!(
                normal, dual[cofaces[1]][pos_minus],
                "normal generator mismatch across the wall"
            );
            debug_assert_ne!(normal, 0);
            let rho: Vec<bool> = simplex
                .verts()
                .iter()
                .map(|&v| {
                    let plus = dual[cofaces[0]][vertex_position(&k.maximal_simplices()[cofaces[0]], v)];
                    let minus =
                        dual[cofaces[1]][vertex_position(&k.maximal_simplices()[cofaces[1]], v)];
                    let jump = plus ^ minus;
                    debug_assert!(jump == 0 || jump == normal, "rho off the normal line");
                    jump != 0
                })
                .collect();
            let relevant: Vec<bool> = simplex
                .verts()
                .iter()
                .map(|&v| {
                    if k.is_boundary((0, vertex_index(k, v))) {
                        return false;
                    }
                    if simplex.verts().len() == 1 {
                        // A 0-dimensional wall (n = 1): the opposite face is
                        // empty, counted as boundary.
                        return false;
                    }
                    let opp = simplex.opposite(v);
                    let id = k.index_of(&opp).expect("face of a wall");
                    !k.is_boundary(id)
                })
                .collect();
            wall_index[w] = Some(walls.len());
            walls.push(Wall {
                index: w,
                simplex,
                cofaces,
                apices,
                normal,
                rho,
                relevant,
            });
        }
        Self {
            n,
            dual,
            walls,
            wall_index,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Dual vector of a vertex inside a maximal simplex, `None` when the
    /// vertex does not belong to it.
    pub fn dual_vector(&self, k: &PrimitiveComplex, max_idx: usize, vertex: usize) -> Option<Bits> {
        let s = &k.maximal_simplices()[max_idx];
        s.verts()
            .iter()
            .position(|&v| v == vertex)
            .map(|i| self.dual[max_idx][i])
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    /// Wall data for an (n−1)-simplex index, if interior.
    pub fn wall_at(&self, wall_simplex_idx: usize) -> Option<&Wall> {
        self.wall_index[wall_simplex_idx].map(|i| &self.walls[i])
    }

    /// Wall data by simplex; errors distinguish unknown and boundary input.
    pub fn wall_of(&self, k: &PrimitiveComplex, s: &Simplex) -> Result<&Wall, CalculusError> {
        let id = k
            .index_of(s)
            .ok_or_else(|| CalculusError::UnknownSimplex(s.verts().to_vec()))?;
        if id.0 != k.dim() - 1 {
            return Err(CalculusError::UnknownSimplex(s.verts().to_vec()));
        }
        self.wall_at(id.1)
            .ok_or_else(|| CalculusError::BoundarySimplex(s.verts().to_vec()))
    }

    /// Walls containing a given vertex.
    pub fn walls_of_vertex<'a>(
        &'a self,
        _k: &PrimitiveComplex,
        vertex: usize,
    ) -> impl Iterator<Item = &'a Wall> + 'a {
        self.walls.iter().filter(move |w| w.simplex.contains(vertex))
    }
}

fn vertex_position(s: &Simplex, v: usize) -> usize {
    s.verts()
        .iter()
        .position(|&u| u == v)
        .expect("vertex belongs to simplex")
}

fn vertex_index(k: &PrimitiveComplex, v: usize) -> usize {
    k.index_of(&Simplex::vertex(v))
        .expect("vertex exists")
        .1
}

/// The dual basis of a maximal simplex: for each vertex α the generator of
/// N(lk(α;σⁿ)), computed by inverting the mod-2 edge matrix from the first
/// vertex; the first vertex receives the sum of the others.
fn dual_vectors(k: &PrimitiveComplex, s: &Simplex) -> Vec<Bits> {
    let n = k.dim();
    let base = k.point(s.verts()[0]);
    // Rows of the edge matrix, as n-bit masks.
    let rows: Vec<Bits> = s.verts()[1..]
        .iter()
        .map(|&v| {
            let mut mask: Bits = 0;
            for (i, c) in k.point(v).sub(base).iter().enumerate() {
                if c.rem_euclid(2) == 1 {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    // Gauss-Jordan on [M | I] packed in a u64 per row.
    let mut aug: Vec<u64> = rows
        .iter()
        .enumerate()
        .map(|(i, &r)| (r as u64) | (1u64 << (n + i)))
        .collect();
    for c in 0..n {
        let pivot = (c..n)
            .find(|&r| (aug[r] >> c) & 1 == 1)
            .expect("edge matrix of a primitive simplex is invertible");
        aug.swap(c, pivot);
        for r in 0..n {
            if r != c && (aug[r] >> c) & 1 == 1 {
                aug[r] ^= aug[c];
            }
        }
    }
    // Column i of the inverse is the dual vector of vertex i+1.
    let mut duals = vec![0 as Bits; n + 1];
    for i in 0..n {
        let mut e: Bits = 0;
        for (j, row) in aug.iter().enumerate() {
            if (row >> (n + i)) & 1 == 1 {
                e |= 1 << j;
            }
        }
        duals[i + 1] = e;
        duals[0] ^= e;
    }
    duals
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::dot;
    use crate::lattice::fixtures;

    #[test]
    fn unit_triangle_duals() {
        let k = fixtures::unit_triangle();
        let f = Frames::new(&k);
        // Points sorted lex: (0,0), (0,1), (1,0).
        let pts = k.points();
        let at = |c: [i64; 2]| pts.iter().position(|p| p.coords == c.to_vec()).unwrap();
        let e = |c: [i64; 2]| f.dual_vector(&k, 0, at(c)).unwrap();
        assert_eq!(e([1, 0]), 0b01);
        assert_eq!(e([0, 1]), 0b10);
        assert_eq!(e([0, 0]), 0b11);
    }

    #[test]
    fn dual_basis_identities() {
        // For every maximal simplex, every base vertex α, and every
        // β ∈ lk(α): ⟨β−α, e(β)⟩ = 1 and ⟨β'−α, e(β)⟩ = 0 for β' ∉ {α,β};
        // moreover Σ_α e(α) = 0.
        for k in [
            fixtures::unit_triangle(),
            fixtures::e1(),
            crate::families::knudsen(2, 3).unwrap(),
            crate::families::itenberg_viro(3, 2).unwrap(),
        ] {
            let f = Frames::new(&k);
            for (m, s) in k.maximal_simplices().iter().enumerate() {
                let mut sum: Bits = 0;
                for &alpha in s.verts() {
                    sum ^= f.dual_vector(&k, m, alpha).unwrap();
                    for &beta in s.verts() {
                        if beta == alpha {
                            continue;
                        }
                        let diff = k.point(beta).sub(k.point(alpha));
                        let mut mask: Bits = 0;
                        for (i, &c) in diff.iter().enumerate() {
                            if c.rem_euclid(2) == 1 {
                                mask |= 1 << i;
                            }
                        }
                        for &gamma in s.verts() {
                            if gamma == alpha {
                                continue;
                            }
                            let expected = gamma == beta;
                            assert_eq!(
                                dot(mask, f.dual_vector(&k, m, gamma).unwrap()),
                                expected,
                                "dual basis pairing"
                            );
                        }
                    }
                }
                assert_eq!(sum, 0, "sum rule over maximal simplex");
            }
        }
    }

    #[test]
    fn e1_wall_data() {
        let k = fixtures::e1();
        let f = Frames::new(&k);
        let pts = k.points();
        let at = |c: [i64; 2]| pts.iter().position(|p| p.coords == c.to_vec()).unwrap();
        assert_eq!(f.walls().len(), 1);
        let wall = &f.walls()[0];
        // [N(AB)] = (0,1).
        assert_eq!(wall.normal, 0b10);
        assert_eq!(wall.rho_at(at([0, 0])), Some(true));
        assert_eq!(wall.rho_at(at([1, 0])), Some(true));
        // Congruence α₊ − α₋ ≡ Σ |ρ(β)| β (mod 2).
        let apex_diff = k.point(wall.apices[0]).sub(k.point(wall.apices[1]));
        let mut lhs: Bits = 0;
        for (i, &c) in apex_diff.iter().enumerate() {
            if c.rem_euclid(2) == 1 {
                lhs |= 1 << i;
            }
        }
        let mut rhs: Bits = 0;
        for (&v, &r) in wall.simplex.verts().iter().zip(&wall.rho) {
            if r {
                rhs ^= k.point(v).mod2();
            }
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn e1_variant_wall_rho_vanishes() {
        let k = fixtures::e1_variant();
        let f = Frames::new(&k);
        let pts = k.points();
        let a = pts.iter().position(|p| p.coords == vec![0, 0]).unwrap();
        let b = pts.iter().position(|p| p.coords == vec![1, 0]).unwrap();
        let wall = f
            .wall_of(&k, &Simplex::new(vec![a, b]))
            .expect("AB is interior");
        assert_eq!(wall.rho_at(a), Some(false));
        assert_eq!(wall.rho_at(b), Some(false));
    }

    #[test]
    fn rho_parity_and_congruence() {
        // Σ_α |ρ(α)| = 0 and the apex congruence on every wall of a few
        // complexes.
        for k in [
            fixtures::e1(),
            crate::families::knudsen(2, 4).unwrap(),
            crate::families::itenberg_viro(3, 3).unwrap(),
        ] {
            let f = Frames::new(&k);
            for wall in f.walls() {
                let parity = wall.rho.iter().filter(|&&b| b).count() % 2;
                assert_eq!(parity, 0, "rho parity on {:?}", wall.simplex);
                let apex_diff = k.point(wall.apices[0]).sub(k.point(wall.apices[1]));
                let mut lhs: Bits = 0;
                for (i, &c) in apex_diff.iter().enumerate() {
                    if c.rem_euclid(2) == 1 {
                        lhs |= 1 << i;
                    }
                }
                let mut rhs: Bits = 0;
                for (&v, &r) in wall.simplex.verts().iter().zip(&wall.rho) {
                    if r {
                        rhs ^= k.point(v).mod2();
                    }
                }
                assert_eq!(lhs, rhs, "apex congruence on {:?}", wall.simplex);
            }
        }
    }

    #[test]
    fn omega_examples_and_closedness() {
        let k = fixtures::e1();
        let pts = k.points();
        let at = |c: [i64; 2]| pts.iter().position(|p| p.coords == c.to_vec()).unwrap();
        // Edge from (0,0) to (1,-1) reduces to (1,1).
        let w = omega(&k, &Simplex::new(vec![at([0, 0]), at([1, -1])])).unwrap();
        assert!(w.coefficient(&[0]) && w.coefficient(&[1]));
        // Top simplex: the full generator.
        let top = omega(&k, &Simplex::new(vec![at([0, 0]), at([0, 1]), at([1, 0])])).unwrap();
        assert!(top.coefficient(&[0, 1]));
        // Closedness: the mod-2 sum of ω over the p-faces of every
        // (p+1)-simplex vanishes, for p ≥ 1.
        let iv = crate::families::itenberg_viro(2, 4).unwrap();
        for q in 2..=iv.dim() {
            for s in iv.simplices(q) {
                let mut acc = WedgeVector::zero(iv.dim(), q - 1);
                for face in s.facets() {
                    acc.add_assign(&omega(&iv, &face).unwrap());
                }
                assert!(acc.is_zero(), "omega is closed");
            }
        }
        let iv3 = crate::families::itenberg_viro(3, 2).unwrap();
        for q in 2..=iv3.dim() {
            for s in iv3.simplices(q) {
                let mut acc = WedgeVector::zero(iv3.dim(), q - 1);
                for face in s.facets() {
                    acc.add_assign(&omega(&iv3, &face).unwrap());
                }
                assert!(acc.is_zero(), "omega is closed in dimension 3");
            }
        }
    }
}
