//! Viro sums K + L and K + (−1)L of triangulations of standard simplices,
//! the recursive Viro and Itenberg–Viro families, and face restrictions.

use super::FamilyError;
use crate::lattice::{
    build_complex, LatticePoint, LatticePolytope, PrimitiveComplex, Simplex,
};
use std::collections::BTreeSet;

/// Check that the polytope of `k` is the standard simplex Pⁿ_d and return d.
fn standard_size(k: &PrimitiveComplex) -> Result<i64, FamilyError> {
    let n = k.dim();
    let expected_d = k
        .polytope()
        .vertices
        .iter()
        .map(|v| v.coords.iter().sum::<i64>())
        .max()
        .unwrap_or(0);
    let expected = LatticePolytope::standard_simplex(n, expected_d);
    let mut ours = k.polytope().vertices.clone();
    ours.sort();
    if ours != expected.vertices {
        return Err(FamilyError::SizeMismatch(format!(
            "polytope is not a standard simplex of size {expected_d}"
        )));
    }
    Ok(expected_d)
}

/// Maximal simplices (as coordinate lists) of the restriction of `k` to the
/// face selected by `in_face`, which must be a face of dimension `face_dim`.
fn face_restriction(
    k: &PrimitiveComplex,
    face_dim: usize,
    in_face: impl Fn(&LatticePoint) -> bool,
) -> Vec<Vec<Vec<i64>>> {
    let mut out = BTreeSet::new();
    let in_face_idx: Vec<bool> = k.points().iter().map(&in_face).collect();
    for s in k.maximal_simplices() {
        let verts: Vec<usize> = s
            .verts()
            .iter()
            .copied()
            .filter(|&v| in_face_idx[v])
            .collect();
        if verts.len() == face_dim + 1 {
            let coords: Vec<Vec<i64>> = verts.iter().map(|&v| k.point(v).coords.clone()).collect();
            out.insert(coords);
        }
    }
    out.into_iter().collect()
}

/// The Viro sum of a triangulation K of Pⁿ⁺¹_d and a triangulation L of
/// Pⁿ_{d+1}: the unique triangulation of Pⁿ⁺¹_{d+1} that restricts to a
/// translate of K above the hyperplane {x_{n+1} = 1} and fills the prism
/// below it by joins of faces of K with faces of L. `eta` selects the join
/// order: false for K + L, true for K + (−1)L.
pub fn viro_sum(
    k: &PrimitiveComplex,
    l: &PrimitiveComplex,
    eta: bool,
) -> Result<PrimitiveComplex, FamilyError> {
    let m = k.dim();
    if l.dim() + 1 != m {
        return Err(FamilyError::DimensionMismatch(format!(
            "K has dimension {m}, L has dimension {}",
            l.dim()
        )));
    }
    let n = l.dim();
    let d = standard_size(k)?;
    let dl = standard_size(l)?;
    if dl != d + 1 {
        return Err(FamilyError::SizeMismatch(format!(
            "K has size {d}, L must have size {} but has {dl}",
            d + 1
        )));
    }

    // Translate K by e_{n+1}; embed L in the hyperplane {x_{n+1} = 0}.
    let translate = |c: &[i64]| -> Vec<i64> {
        let mut v = c.to_vec();
        v[n] += 1;
        v
    };
    let embed = |c: &[i64]| -> Vec<i64> {
        let mut v = c.to_vec();
        v.push(0);
        v
    };

    let mut maximal: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    for s in k.maximal_simplices() {
        let mut verts: Vec<Vec<i64>> = s
            .verts()
            .iter()
            .map(|&v| translate(&k.point(v).coords))
            .collect();
        verts.sort();
        maximal.insert(verts);
    }

    // Prism joins: for each 0 ≤ i ≤ n, the join of a face restriction of
    // the translated K with a face restriction of L.
    for i in 0..=n {
        let (k_parts, l_parts) = if !eta {
            // K-side face: hull{0, d·e₁, …, d·e_i} (bottom of K).
            let k_parts = face_restriction(k, i, |p| {
                p.coords[n] == 0 && (i..n).all(|l| p.coords[l] == 0)
            });
            // L-side face: hull{(d+1)e_i, …, (d+1)e_n}, with e₀ = 0.
            let l_parts = face_restriction(l, n - i, |p| {
                (0..i.saturating_sub(1)).all(|l| p.coords[l] == 0)
                    && (i == 0 || p.coords.iter().sum::<i64>() == d + 1)
            });
            (k_parts, l_parts)
        } else {
            // K-side face: hull{d·e_i, …, d·e_n}, with e₀ = 0.
            let k_parts = face_restriction(k, n - i, |p| {
                p.coords[n] == 0
                    && (0..i.saturating_sub(1)).all(|l| p.coords[l] == 0)
                    && (i == 0 || p.coords[..n].iter().sum::<i64>() == d)
            });
            // L-side face: hull{0, (d+1)e₁, …, (d+1)e_i}.
            let l_parts = face_restriction(l, i, |p| (i..n).all(|l| p.coords[l] == 0));
            (k_parts, l_parts)
        };
        for kp in &k_parts {
            for lp in &l_parts {
                let mut verts: Vec<Vec<i64>> = kp.iter().map(|c| translate(c)).collect();
                verts.extend(lp.iter().map(|c| embed(c)));
                verts.sort();
                maximal.insert(verts);
            }
        }
    }

    // Index points lexicographically and validate.
    let mut point_set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for s in &maximal {
        for p in s {
            point_set.insert(p.clone());
        }
    }
    let points: Vec<LatticePoint> = point_set.iter().cloned().map(LatticePoint::new).collect();
    let index: std::collections::BTreeMap<&Vec<i64>, usize> = point_set.iter().zip(0..).collect();
    let simplices: Vec<Simplex> = maximal
        .iter()
        .map(|s| Simplex::new(s.iter().map(|p| index[p]).collect()))
        .collect();
    Ok(build_complex(
        points,
        simplices,
        LatticePolytope::standard_simplex(m, d + 1),
    )?)
}

/// The unique primitive triangulation of the segment P¹_d.
fn segment(d: i64) -> PrimitiveComplex {
    let points: Vec<LatticePoint> = (0..=d).map(|i| LatticePoint::new(vec![i])).collect();
    let maximal: Vec<Simplex> = (0..d as usize)
        .map(|i| Simplex::new(vec![i, i + 1]))
        .collect();
    build_complex(points, maximal, LatticePolytope::standard_simplex(1, d))
        .expect("segment triangulation is valid")
}

/// Pⁿ₁ as a single maximal simplex.
fn unit_simplex(n: usize) -> PrimitiveComplex {
    let polytope = LatticePolytope::standard_simplex(n, 1);
    let points = polytope.lattice_points();
    let maximal = vec![Simplex::new((0..points.len()).collect())];
    build_complex(points, maximal, polytope).expect("unit simplex is valid")
}

/// The Itenberg–Viro triangulation IVⁿ_d, defined recursively by
/// IVⁿ_d = IVⁿ_{d−1} + (−1)^{d−1} IVⁿ⁻¹_d with segment and unit-simplex
/// base cases.
pub fn itenberg_viro(n: usize, d: i64) -> Result<PrimitiveComplex, FamilyError> {
    assert!(n >= 1 && d >= 1);
    if n == 1 {
        return Ok(segment(d));
    }
    if d == 1 {
        return Ok(unit_simplex(n));
    }
    let k = itenberg_viro(n, d - 1)?;
    let l = itenberg_viro(n - 1, d)?;
    viro_sum(&k, &l, (d - 1) % 2 == 1)
}

/// The Viro triangulation Vⁿ_d: same recursion with the join order always
/// the plain sum.
pub fn viro_family(n: usize, d: i64) -> Result<PrimitiveComplex, FamilyError> {
    assert!(n >= 1 && d >= 1);
    if n == 1 {
        return Ok(segment(d));
    }
    if d == 1 {
        return Ok(unit_simplex(n));
    }
    let k = viro_family(n, d - 1)?;
    let l = viro_family(n - 1, d)?;
    viro_sum(&k, &l, false)
}

/// Restriction π_I of a triangulation of Pⁿ_d to the face spanned by
/// {d·e_i : i ∈ I}, with e₀ = 0, reindexed order-preservingly as a
/// triangulation of P^{|I|−1}_d.
pub fn restrict_to_face(
    k: &PrimitiveComplex,
    index_set: &[usize],
) -> Result<PrimitiveComplex, FamilyError> {
    let n = k.dim();
    let d = standard_size(k)?;
    let mut set: Vec<usize> = index_set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() != index_set.len() || set.len() < 2 || set.iter().any(|&i| i > n) {
        return Err(FamilyError::InvalidIndexSet(format!(
            "{index_set:?} is not a subset of {{0,…,{n}}} with at least two elements"
        )));
    }
    let face_dim = set.len() - 1;
    let with_zero = set[0] == 0;
    let in_face = |p: &LatticePoint| -> bool {
        for l in 1..=n {
            if !set.contains(&l) && p.coords[l - 1] != 0 {
                return false;
            }
        }
        with_zero || p.coords.iter().sum::<i64>() == d
    };
    // Order-preserving coordinates on the face: y_j = x_{i_j}, j ≥ 1.
    let project = |c: &[i64]| -> Vec<i64> { set[1..].iter().map(|&i| c[i - 1]).collect() };
    let parts = face_restriction(k, face_dim, in_face);
    let mut point_set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for s in &parts {
        for p in s {
            point_set.insert(project(p));
        }
    }
    let points: Vec<LatticePoint> = point_set.iter().cloned().map(LatticePoint::new).collect();
    let index: std::collections::BTreeMap<&Vec<i64>, usize> = point_set.iter().zip(0..).collect();
    let simplices: Vec<Simplex> = parts
        .iter()
        .map(|s| Simplex::new(s.iter().map(|p| index[&project(p)]).collect()))
        .collect();
    Ok(build_complex(
        points,
        simplices,
        LatticePolytope::standard_simplex(face_dim, d),
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn same_triangulation(a: &PrimitiveComplex, b: &PrimitiveComplex) -> bool {
        a.points() == b.points() && a.maximal_simplices() == b.maximal_simplices()
    }

    #[test]
    fn smallest_viro_sum() {
        // K = unique triangulation of P²₁, L = IV¹₂: a triangulation of P²₂.
        let k = unit_simplex(2);
        let l = segment(2);
        let sum = viro_sum(&k, &l, false).unwrap();
        assert_eq!(sum.maximal_simplices().len(), 4);
        let minus = viro_sum(&k, &l, true).unwrap();
        assert_eq!(minus.maximal_simplices().len(), 4);
    }

    #[test]
    fn volume_additivity() {
        for (n, d) in [(2, 2), (2, 3), (3, 2)] {
            let k = itenberg_viro(n, d).unwrap();
            let l = itenberg_viro(n - 1, d + 1).unwrap();
            for eta in [false, true] {
                let sum = viro_sum(&k, &l, eta).unwrap();
                assert_eq!(
                    sum.maximal_simplices().len() as i64,
                    (d + 1).pow(n as u32),
                    "(d+1)^n maximal simplices"
                );
            }
        }
    }

    #[test]
    fn iv24_matches_figure() {
        // IV²₄ has 16 triangles and contains the three long edges
        // (0,2)–(3,1), (3,1)–(0,0), (1,3)–(0,2).
        let iv = itenberg_viro(2, 4).unwrap();
        assert_eq!(iv.maximal_simplices().len(), 16);
        let idx = |c: [i64; 2]| {
            iv.points()
                .iter()
                .position(|p| p.coords == c.to_vec())
                .unwrap()
        };
        for (a, b) in [([0, 2], [3, 1]), ([3, 1], [0, 0]), ([1, 3], [0, 2])] {
            let edge = Simplex::new(vec![idx(a), idx(b)]);
            assert!(
                iv.contains_simplex(&edge),
                "edge {a:?}-{b:?} missing from IV²₄"
            );
        }
    }

    #[test]
    fn iv34_valid() {
        let iv = itenberg_viro(3, 4).unwrap();
        assert_eq!(iv.maximal_simplices().len(), 64);
    }

    #[test]
    fn restriction_identity() {
        let k = itenberg_viro(2, 3).unwrap();
        let full = restrict_to_face(&k, &[0, 1, 2]).unwrap();
        assert!(same_triangulation(&k, &full));
    }

    #[test]
    fn restriction_1d_is_unique() {
        let k = knudsen_2_3();
        let r = restrict_to_face(&k, &[0, 1]).unwrap();
        assert!(same_triangulation(&r, &segment(3)));
    }

    fn knudsen_2_3() -> PrimitiveComplex {
        super::super::knudsen(2, 3).unwrap()
    }

    #[test]
    fn restriction_of_iv34_is_iv24() {
        let iv34 = itenberg_viro(3, 4).unwrap();
        let r = restrict_to_face(&iv34, &[0, 1, 2]).unwrap();
        let iv24 = itenberg_viro(2, 4).unwrap();
        assert!(same_triangulation(&r, &iv24));
    }

    #[test]
    fn restriction_compatibility() {
        // π_{I∪{n+1}}(K ± L) = π_{I∪{n+1}}(K) ± π_I(L) for both signs,
        // exercised through the IV³ recursion inputs.
        for (d, eta) in [(2, true), (3, false)] {
            // IV³_{d+1} = IV³_d + (−1)^d IV²_{d+1}; here n + 1 = 3.
            let k = itenberg_viro(3, d).unwrap();
            let l = itenberg_viro(2, d + 1).unwrap();
            let sum = viro_sum(&k, &l, eta).unwrap();
            for i in [[0usize, 1], [0, 2], [1, 2]] {
                let lhs = restrict_to_face(&sum, &[i[0], i[1], 3]).unwrap();
                let rk = restrict_to_face(&k, &[i[0], i[1], 3]).unwrap();
                let rl = restrict_to_face(&l, &i).unwrap();
                let rhs = viro_sum(&rk, &rl, eta).unwrap();
                assert!(
                    same_triangulation(&lhs, &rhs),
                    "restriction compatibility failed at I = {i:?}, eta = {eta}"
                );
            }
        }
    }

    #[test]
    fn invalid_inputs() {
        let k = unit_simplex(2);
        let l = segment(3);
        assert!(matches!(
            viro_sum(&k, &l, false),
            Err(FamilyError::SizeMismatch(_))
        ));
        let l2 = unit_simplex(2);
        assert!(matches!(
            viro_sum(&k, &l2, false),
            Err(FamilyError::DimensionMismatch(_))
        ));
        assert!(matches!(
            restrict_to_face(&k, &[0]),
            Err(FamilyError::InvalidIndexSet(_))
        ));
        assert!(matches!(
            restrict_to_face(&k, &[0, 5]),
            Err(FamilyError::InvalidIndexSet(_))
        ));
    }
}
