//! Intersection numbers (β; σⁿ⁻²)_ε and the matrix they assemble into.
//!
//! Three cases, by the relative position of the interior vertex β and the
//! interior (n−2)-simplex:
//! 1. disjoint open stars: the number vanishes;
//! 2. β joins the simplex into a wall: the twist bit of that wall in the
//!    direction of β;
//! 3. β is a vertex of the simplex: the coefficient of the wedge sum
//!    Σ e(β) ∧ (D²ε + ρ(opposite vertex)) over the supporting walls, on
//!    the generator of ⋀²N(σⁿ⁻²).

use super::{second_derivative, CalculusError, Frames, SignDistribution};
use crate::f2::{line_generator, F2Matrix, F2Vector, WedgeVector};
use crate::lattice::{PrimitiveComplex, Simplex};

fn require_interior_vertex(k: &PrimitiveComplex, beta: usize) -> Result<(), CalculusError> {
    if beta >= k.points().len() {
        return Err(CalculusError::UnknownSimplex(vec![beta]));
    }
    if !k.is_interior_vertex(beta) {
        return Err(CalculusError::NotInterior(vec![beta]));
    }
    Ok(())
}

/// Basis of N(σ) = (Tσ)⊥(F₂): the nullspace of the mod-2 edge matrix.
fn normal_space_basis(k: &PrimitiveComplex, s: &Simplex) -> Vec<u32> {
    let n = k.dim();
    let base = k.point(s.verts()[0]);
    let rows: Vec<F2Vector> = s.verts()[1..]
        .iter()
        .map(|&v| {
            F2Vector::from_bits(
                &k.point(v)
                    .sub(base)
                    .iter()
                    .map(|c| c.rem_euclid(2) == 1)
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let m = F2Matrix::from_rows(if rows.is_empty() {
        vec![F2Vector::zeros(n)]
    } else {
        rows
    })
    .unwrap();
    m.nullspace()
        .iter()
        .map(|v| {
            let mut mask = 0u32;
            for i in v.iter_ones() {
                mask |= 1 << i;
            }
            mask
        })
        .collect()
}

/// (β; σⁿ⁻²)_ε for an interior vertex and an interior (n−2)-simplex.
pub fn intersection_number(
    k: &PrimitiveComplex,
    frames: &Frames,
    eps: &SignDistribution,
    beta: usize,
    s: &Simplex,
) -> Result<bool, CalculusError> {
    let n = k.dim();
    if n < 2 {
        return Err(CalculusError::WrongDimension {
            expected: 2,
            actual: n,
        });
    }
    require_interior_vertex(k, beta)?;
    let id = k
        .index_of(s)
        .ok_or_else(|| CalculusError::UnknownSimplex(s.verts().to_vec()))?;
    if id.0 != n - 2 {
        return Err(CalculusError::UnknownSimplex(s.verts().to_vec()));
    }
    if k.is_boundary(id) {
        return Err(CalculusError::NotInterior(s.verts().to_vec()));
    }

    if s.contains(beta) {
        // Case 3: wedge sum over the supporting walls.
        let mut acc = WedgeVector::zero(n, 2);
        for wall in frames.walls() {
            if !s.is_face_of(&wall.simplex) {
                continue;
            }
            let opposite = *wall
                .simplex
                .verts()
                .iter()
                .find(|v| !s.contains(**v))
                .expect("wall strictly contains the simplex");
            let t = second_derivative(eps, wall) ^ wall.rho_at(opposite).unwrap();
            if t {
                // e(β) from the smaller adjacent maximal simplex; the wedge
                // against the normal line kills the representative choice.
                let e = frames
                    .dual_vector(k, wall.cofaces[0], beta)
                    .expect("beta belongs to the wall cofaces");
                let summand = WedgeVector::from_mask(n, e)
                    .wedge(&WedgeVector::from_mask(n, wall.normal))
                    .expect("degree 2 fits");
                acc.add_assign(&summand);
            }
        }
        if acc.is_zero() {
            return Ok(false);
        }
        let basis = normal_space_basis(k, s);
        debug_assert_eq!(basis.len(), 2, "normal space of an (n-2)-simplex");
        let generator =
            line_generator(&basis, n).expect("echelonized normal basis is independent");
        if acc == generator {
            Ok(true)
        } else {
            Err(CalculusError::NotInLine)
        }
    } else {
        let join_verts: Vec<usize> = {
            let mut v = s.verts().to_vec();
            v.push(beta);
            v
        };
        let join = Simplex::new(join_verts);
        match frames.wall_of(k, &join) {
            // Case 2: the twist bit of the joining wall.
            Ok(wall) => Ok(second_derivative(eps, wall) ^ wall.rho_at(beta).unwrap()),
            Err(CalculusError::UnknownSimplex(_)) => Ok(false), // Case 1.
            Err(other) => Err(other),
        }
    }
}

/// The intersection matrix: rows are interior vertices, columns interior
/// (n−2)-simplices, in index order.
pub struct MatrixM0 {
    pub matrix: F2Matrix,
    /// Point index per row.
    pub rows: Vec<usize>,
    /// Index into `simplices(n−2)` per column.
    pub cols: Vec<usize>,
}

pub fn matrix_m0(
    k: &PrimitiveComplex,
    frames: &Frames,
    eps: &SignDistribution,
) -> Result<MatrixM0, CalculusError> {
    let n = k.dim();
    if n < 2 {
        return Err(CalculusError::WrongDimension {
            expected: 2,
            actual: n,
        });
    }
    let rows = k.interior_vertices();
    let cols: Vec<usize> = (0..k.simplices(n - 2).len())
        .filter(|&i| !k.is_boundary((n - 2, i)))
        .collect();
    let mut matrix = F2Matrix::zeros(rows.len(), cols.len());
    for (r, &beta) in rows.iter().enumerate() {
        for (c, &si) in cols.iter().enumerate() {
            let s = k.simplices(n - 2)[si].clone();
            if intersection_number(k, frames, eps, beta, &s)? {
                matrix.set(r, c, true);
            }
        }
    }
    Ok(MatrixM0 { matrix, rows, cols })
}
