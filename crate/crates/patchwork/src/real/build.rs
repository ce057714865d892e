//! Construction of ℝK and ℝX_ε from a primitive triangulation.

use super::{RealCell, RealComplex, RealError};
use crate::calculus::SignDistribution;
use crate::f2::{dot, Bits};
use crate::lattice::{PrimitiveComplex, Simplex, SimplexId};
use std::collections::HashMap;

/// Default cap on the number of cells of a build.
pub const DEFAULT_MAX_CELLS: usize = 1 << 24;

/// Rational rank of an integer matrix by fraction-free elimination.
fn int_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        if let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) {
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && m[r][c] != 0 {
                    let (a, b) = (m[rank][c], m[r][c]);
                    for j in 0..cols {
                        m[r][j] = m[r][j] * a - m[rank][j] * b;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Echelonize a list of bit masks (reduced form, pivot = lowest set bit).
fn echelonize(mut basis: Vec<Bits>) -> Vec<Bits> {
    let mut out: Vec<Bits> = Vec::new();
    for mut v in basis.drain(..) {
        for b in &out {
            let pivot = b.trailing_zeros();
            if (v >> pivot) & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            out.push(v);
            out.sort_by_key(|b| b.trailing_zeros());
            // Back-substitute to keep the reduced form.
            let snapshot = out.clone();
            for (i, w) in out.iter_mut().enumerate() {
                for (j, b) in snapshot.iter().enumerate() {
                    if i != j {
                        let pivot = b.trailing_zeros();
                        if (*w >> pivot) & 1 == 1 {
                            *w ^= b;
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|b| b.trailing_zeros());
    out
}

/// Canonical representative of `v` modulo the echelonized basis.
#[inline]
fn canonical(v: Bits, basis: &[Bits]) -> Bits {
    let mut v = v;
    for b in basis {
        let pivot = b.trailing_zeros();
        if (v >> pivot) & 1 == 1 {
            v ^= b;
        }
    }
    v
}

/// The sedentarity basis of a simplex: the mod-2 span of the primitive
/// normals of the facets of P tight on it, echelonized. Its dimension must
/// equal the codimension of the smallest face of P containing the simplex.
pub fn sedentarity(k: &PrimitiveComplex, id: SimplexId) -> Result<Vec<Bits>, RealError> {
    let n = k.dim();
    let mask = k.tight_facets_mask(id);
    let facets = &k.polytope().facets;
    let mut normals = Vec::new();
    let mut tight_idx = Vec::new();
    for (f, facet) in facets.iter().enumerate() {
        if (mask >> f) & 1 == 1 {
            normals.push(facet.normal_mod2());
            tight_idx.push(f);
        }
    }
    let basis = echelonize(normals);
    // Codimension of Q: n minus the rational rank of the differences of
    // the vertices of P tight on all those facets.
    let q_vertices: Vec<&crate::lattice::LatticePoint> = k
        .polytope()
        .vertices
        .iter()
        .filter(|v| tight_idx.iter().all(|&f| facets[f].is_tight(v)))
        .collect();
    let q_dim = if q_vertices.is_empty() {
        // No face data; only legitimate when nothing is tight (Q = P).
        if tight_idx.is_empty() {
            n
        } else {
            0
        }
    } else {
        let base = q_vertices[0];
        let rows: Vec<Vec<i64>> = q_vertices[1..].iter().map(|v| v.sub(base)).collect();
        int_rank(&rows)
    };
    let codim = n - q_dim;
    if basis.len() != codim {
        return Err(RealError::SedDimensionMismatch {
            simplex: k.simplex(id).verts().to_vec(),
            span: basis.len(),
            codim,
        });
    }
    Ok(basis)
}

/// Sedentarity bases for every simplex, indexed like the face lattice.
fn all_sedentarities(k: &PrimitiveComplex) -> Result<Vec<Vec<Vec<Bits>>>, RealError> {
    let mut out = Vec::new();
    for d in 0..=k.dim() {
        let mut per_dim = Vec::new();
        for i in 0..k.simplices(d).len() {
            per_dim.push(sedentarity(k, (d, i))?);
        }
        out.push(per_dim);
    }
    Ok(out)
}

/// Enumerate the canonical argument representatives modulo a basis: all
/// masks supported off the pivot bits.
fn canonical_args(n: usize, basis: &[Bits]) -> Vec<Bits> {
    let pivot_mask: Bits = basis.iter().map(|b| 1 << b.trailing_zeros()).sum();
    let free: Vec<usize> = (0..n).filter(|&i| (pivot_mask >> i) & 1 == 0).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for sel in 0u32..(1 << free.len()) {
        let mut v: Bits = 0;
        for (j, &bit) in free.iter().enumerate() {
            if (sel >> j) & 1 == 1 {
                v |= 1 << bit;
            }
        }
        out.push(v);
    }
    out
}

/// Mod-2 edge mask between two points.
#[inline]
fn edge_mask(k: &PrimitiveComplex, a: usize, b: usize) -> Bits {
    k.point(a).mod2() ^ k.point(b).mod2()
}

/// Whether the lift of the cube at argument `arg` belongs to ℝX_ε: some
/// edge of the lower simplex has dε(σ¹) + ⟨ω(σ¹), arg⟩ = 1.
fn in_hypersurface(
    k: &PrimitiveComplex,
    eps: &SignDistribution,
    lower: &Simplex,
    arg: Bits,
) -> bool {
    let verts = lower.verts();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let d_eps = eps.get(verts[i]) ^ eps.get(verts[j]);
            if d_eps ^ dot(edge_mask(k, verts[i], verts[j]), arg) {
                return true;
            }
        }
    }
    false
}

struct Builder<'a> {
    k: &'a PrimitiveComplex,
    sed: Vec<Vec<Vec<Bits>>>,
    cells: Vec<Vec<RealCell>>,
    index: Vec<HashMap<(SimplexId, SimplexId, Bits), u32>>,
}

impl<'a> Builder<'a> {
    fn new(k: &'a PrimitiveComplex, dims: usize) -> Result<Self, RealError> {
        Ok(Self {
            k,
            sed: all_sedentarities(k)?,
            cells: vec![Vec::new(); dims],
            index: vec![HashMap::new(); dims],
        })
    }

    fn push(&mut self, dim: usize, cell: RealCell) {
        let idx = self.cells[dim].len() as u32;
        self.index[dim].insert((cell.lower, cell.upper, cell.arg), idx);
        self.cells[dim].push(cell);
    }

    /// Codimension-one faces of a cell, XOR-reduced.
    fn face_list(&self, dim: usize, cell: &RealCell) -> Vec<u32> {
        let k = self.k;
        let lower = k.simplex(cell.lower);
        let upper = k.simplex(cell.upper);
        let mut faces = Vec::new();
        // Raise the lower simplex by one vertex of upper \ lower.
        for &v in upper.verts() {
            if lower.contains(v) {
                continue;
            }
            let raised = lower.join(v);
            let id = k.index_of(&raised).expect("face of upper simplex");
            // Every face of a member cell is a member: the witness edge of
            // the lower simplex survives raising, and argument reduction
            // does not change the membership value.
            let f = self.index[dim - 1]
                .get(&(id, cell.upper, cell.arg))
                .expect("raised face of a real cell is present");
            faces.push(*f);
        }
        // Drop one vertex of upper not in lower.
        for &v in upper.verts() {
            if lower.contains(v) {
                continue;
            }
            let dropped = upper.opposite(v);
            let id = k.index_of(&dropped).expect("facet of upper simplex");
            let arg = canonical(cell.arg, &self.sed[id.0][id.1]);
            let f = self.index[dim - 1]
                .get(&(cell.lower, id, arg))
                .expect("dropped face of a real cell is present");
            faces.push(*f);
        }
        // XOR semantics: cancel repeated faces.
        faces.sort_unstable();
        let mut reduced = Vec::with_capacity(faces.len());
        let mut i = 0;
        while i < faces.len() {
            if i + 1 < faces.len() && faces[i] == faces[i + 1] {
                i += 2;
            } else {
                reduced.push(faces[i]);
                i += 1;
            }
        }
        reduced
    }

    fn finish(self, is_subcomplex: bool) -> RealComplex {
        let mut faces = vec![Vec::new(); self.cells.len()];
        for d in 1..self.cells.len() {
            faces[d] = self.cells[d]
                .iter()
                .map(|c| self.face_list(d, c))
                .collect();
        }
        let divisors = self
            .cells
            .iter()
            .map(|list| {
                list.iter()
                    .map(|c| self.k.tight_facets_mask(c.upper))
                    .collect()
            })
            .collect();
        RealComplex {
            ambient: self.k.dim(),
            cells: self.cells,
            faces,
            divisors,
            is_subcomplex,
        }
    }
}

/// Upper bound on the number of lifts of the cubes with lower dimension at
/// least `min_lower`.
fn expected_cells(
    k: &PrimitiveComplex,
    sed: &[Vec<Vec<Bits>>],
    min_lower: usize,
) -> usize {
    let n = k.dim();
    let mut total = 0usize;
    for q in min_lower..=n {
        for (i, upper) in k.simplices(q).iter().enumerate() {
            let lifts = 1usize << (n - sed[q][i].len());
            // Number of faces of dimension >= min_lower.
            let mut face_count = 0usize;
            for p in min_lower..=q {
                face_count += binomial(upper.verts().len(), p + 1);
            }
            total = total.saturating_add(lifts.saturating_mul(face_count));
        }
    }
    total
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Build the full quadrant model ℝK.
pub fn build_rk(k: &PrimitiveComplex) -> Result<RealComplex, RealError> {
    build_rk_with(k, DEFAULT_MAX_CELLS)
}

pub fn build_rk_with(k: &PrimitiveComplex, max_cells: usize) -> Result<RealComplex, RealError> {
    let n = k.dim();
    let mut builder = Builder::new(k, n + 1)?;
    let expected = expected_cells(k, &builder.sed, 0);
    if expected > max_cells {
        return Err(RealError::TooManyCells {
            expected,
            cap: max_cells,
        });
    }
    for dim in 0..=n {
        for q in dim..=n {
            for (ui, upper) in k.simplices(q).iter().enumerate() {
                let args = canonical_args(n, &builder.sed[q][ui]);
                for lower in upper.all_faces() {
                    if lower.dim() + dim != q {
                        continue;
                    }
                    let lid = k.index_of(&lower).expect("face of a simplex");
                    for &arg in &args {
                        builder.push(
                            dim,
                            RealCell {
                                lower: lid,
                                upper: (q, ui),
                                arg,
                            },
                        );
                    }
                }
            }
        }
    }
    Ok(builder.finish(false))
}

/// Build the T-hypersurface ℝX_ε directly as a subcomplex of ℝK.
pub fn build_tx(k: &PrimitiveComplex, eps: &SignDistribution) -> Result<RealComplex, RealError> {
    build_tx_with(k, eps, DEFAULT_MAX_CELLS)
}

pub fn build_tx_with(
    k: &PrimitiveComplex,
    eps: &SignDistribution,
    max_cells: usize,
) -> Result<RealComplex, RealError> {
    let n = k.dim();
    assert_eq!(eps.len(), k.points().len(), "sign distribution length");
    let mut builder = Builder::new(k, n.max(1))?;
    let expected = expected_cells(k, &builder.sed, 1);
    if expected > max_cells {
        return Err(RealError::TooManyCells {
            expected,
            cap: max_cells,
        });
    }
    for dim in 0..n {
        for q in (dim + 1).max(1)..=n {
            for (ui, upper) in k.simplices(q).iter().enumerate() {
                let args = canonical_args(n, &builder.sed[q][ui]);
                for lower in upper.all_faces() {
                    if lower.dim() + dim != q || lower.dim() < 1 {
                        continue;
                    }
                    let lid = k.index_of(&lower).expect("face of a simplex");
                    for &arg in &args {
                        if in_hypersurface(k, eps, &lower, arg) {
                            builder.push(
                                dim,
                                RealCell {
                                    lower: lid,
                                    upper: (q, ui),
                                    arg,
                                },
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(builder.finish(true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::knudsen;
    use crate::lattice::fixtures;
    use crate::lattice::LatticePolytope;

    #[test]
    fn sedentarity_of_standard_simplex() {
        let k = knudsen(2, 3).unwrap();
        // Interior simplex: trivial sedentarity.
        let center = k
            .points()
            .iter()
            .position(|p| p.coords == vec![1, 1])
            .unwrap();
        let id = k
            .index_of(&crate::lattice::Simplex::vertex(center))
            .unwrap();
        assert!(sedentarity(&k, id).unwrap().is_empty());
        // A vertex on one facet only.
        let edge_pt = k
            .points()
            .iter()
            .position(|p| p.coords == vec![1, 0])
            .unwrap();
        let id = k.index_of(&crate::lattice::Simplex::vertex(edge_pt)).unwrap();
        let sed = sedentarity(&k, id).unwrap();
        assert_eq!(sed.len(), 1);
        assert_eq!(sed[0], 0b10); // normal (0,1) of the facet y = 0
        // The origin: full sedentarity.
        let origin = k
            .points()
            .iter()
            .position(|p| p.coords == vec![0, 0])
            .unwrap();
        let id = k.index_of(&crate::lattice::Simplex::vertex(origin)).unwrap();
        assert_eq!(sedentarity(&k, id).unwrap().len(), 2);
    }

    #[test]
    fn circle_from_segment() {
        // ℝP¹: the segment P¹₁ lifts to a 4-cycle.
        let seg = crate::families::itenberg_viro(1, 1).unwrap();
        let rk = build_rk(&seg).unwrap();
        assert_eq!(rk.cells[0].len(), 4);
        assert_eq!(rk.cells[1].len(), 4);
        for f in &rk.faces[1] {
            assert_eq!(f.len(), 2);
        }
    }

    #[test]
    fn euler_characteristic_of_projective_plane() {
        let t1 = fixtures::unit_triangle();
        let rk = build_rk(&t1).unwrap();
        let chi: i64 = rk
            .cells
            .iter()
            .enumerate()
            .map(|(d, l)| (if d % 2 == 0 { 1 } else { -1 }) * l.len() as i64)
            .sum();
        assert_eq!(chi, 1, "χ(ℝP²) = 1");
        assert_eq!(rk.cells[0].len(), 13);
        assert_eq!(rk.cells[1].len(), 24);
        assert_eq!(rk.cells[2].len(), 12);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for complex in [
            build_rk(&fixtures::e1()).unwrap(),
            build_rk(&knudsen(2, 2).unwrap()).unwrap(),
            build_rk(&crate::families::itenberg_viro(3, 2).unwrap()).unwrap(),
        ] {
            for d in 2..complex.cells.len() {
                for faces in &complex.faces[d] {
                    let mut acc: std::collections::BTreeMap<u32, usize> = Default::default();
                    for &f in faces {
                        for &ff in &complex.faces[d - 1][f as usize] {
                            *acc.entry(ff).or_default() += 1;
                        }
                    }
                    assert!(
                        acc.values().all(|&c| c % 2 == 0),
                        "∂∂ ≠ 0 in dimension {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn tx_membership_examples() {
        // P¹₁, ε ≡ 0: a single point.
        let seg = crate::families::itenberg_viro(1, 1).unwrap();
        let eps = SignDistribution::constant(2, false);
        let tx = build_tx(&seg, &eps).unwrap();
        assert_eq!(tx.cell_count(), 1);
        // P¹₃, ε ≡ 0: three points.
        let seg3 = crate::families::itenberg_viro(1, 3).unwrap();
        let eps3 = SignDistribution::constant(4, false);
        let tx3 = build_tx(&seg3, &eps3).unwrap();
        assert_eq!(tx3.cell_count(), 3);
    }

    #[test]
    fn cell_cap_is_enforced() {
        let k = knudsen(2, 3).unwrap();
        let eps = SignDistribution::constant(k.points().len(), false);
        assert!(matches!(
            build_tx_with(&k, &eps, 4),
            Err(RealError::TooManyCells { .. })
        ));
        assert!(matches!(
            build_rk_with(&k, 4),
            Err(RealError::TooManyCells { .. })
        ));
    }

    #[test]
    fn singular_polytope_is_rejected_via_sedentarity() {
        // A complex cannot be built on a singular polytope at all, so
        // exercise the sedentarity check directly on a handcrafted mask.
        // The triangle conv{(0,0),(1,0),(0,2)} has facet normals (0,1),
        // (1,0), (-2,-1); at the vertex (0,2) the tight normals (1,0) and
        // (-2,-1) reduce mod 2 to (1,0) twice: span 1 < codim 2.
        let rows = vec![vec![1i64, 0], vec![-2, -1]];
        assert_eq!(int_rank(&rows), 2);
        let reduced = echelonize(vec![0b01, 0b01]);
        assert_eq!(reduced.len(), 1);
        let _ = LatticePolytope::standard_simplex(2, 1); // silence unused import warnings
    }
}
