//! The Knudsen triangulation Rⁿ_d of Pⁿ_d: maximal simplices are the
//! chambers of the hyperplane arrangement {Σ_{l=i..j} x_l = k}.
//!
//! A primitive lattice simplex is a chamber exactly when, for every
//! interval (i,j), the partial sum Σ_{l=i..j} x_l varies by at most one
//! over its vertices: such a simplex is not cut by any arrangement
//! hyperplane, and a chamber cannot properly contain a primitive simplex.

use crate::lattice::{
    build_complex, int_determinant, ComplexError, LatticePoint, LatticePolytope, PrimitiveComplex,
    Simplex,
};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Partial sums over all coordinate intervals [i, j].
fn interval_sums(p: &[i64]) -> Vec<i64> {
    let n = p.len();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        let mut acc = 0;
        for j in i..n {
            acc += p[j];
            out.push(acc);
        }
    }
    out
}

/// Whether a set of points has all interval widths at most one.
fn within_slabs(points: &[&Vec<i64>]) -> bool {
    let n = points[0].len();
    let sums: Vec<Vec<i64>> = points.iter().map(|p| interval_sums(p)).collect();
    for s in 0..n * (n + 1) / 2 {
        let min = sums.iter().map(|v| v[s]).min().unwrap();
        let max = sums.iter().map(|v| v[s]).max().unwrap();
        if max - min > 1 {
            return false;
        }
    }
    true
}

fn is_primitive(verts: &[&Vec<i64>]) -> bool {
    let base = verts[0];
    let rows: Vec<Vec<i64>> = verts[1..]
        .iter()
        .map(|v| v.iter().zip(base.iter()).map(|(a, b)| a - b).collect())
        .collect();
    int_determinant(&rows).abs() == 1
}

/// Flood-fill construction of Rⁿ_d, starting from the corner chamber
/// conv{0, e₁, …, eₙ} and crossing every interior wall once.
pub fn knudsen(n: usize, d: i64) -> Result<PrimitiveComplex, ComplexError> {
    assert!(n >= 1 && d >= 1, "knudsen requires n >= 1 and d >= 1");
    let polytope = LatticePolytope::standard_simplex(n, d);
    let in_simplex = |p: &Vec<i64>| p.iter().all(|&c| c >= 0) && p.iter().sum::<i64>() <= d;

    // Corner chamber at the origin.
    let mut start: Vec<Vec<i64>> = vec![vec![0; n]];
    for i in 0..n {
        let mut c = vec![0; n];
        c[i] = 1;
        start.push(c);
    }
    start.sort();

    let mut chambers: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    chambers.insert(start.clone());
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(chamber) = queue.pop_front() {
        for drop in 0..chamber.len() {
            let wall: Vec<&Vec<i64>> = chamber
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, p)| p)
                .collect();
            // Skip walls on the boundary of Pⁿ_d: a common tight facet.
            let on_coord = (0..n).any(|i| wall.iter().all(|p| p[i] == 0));
            let on_sum = wall.iter().all(|p| p.iter().sum::<i64>() == d);
            if on_coord || on_sum {
                continue;
            }
            if let Some(neighbor) = cross_wall(&wall, &chamber[drop], d, &in_simplex) {
                let mut verts: Vec<Vec<i64>> = wall.iter().map(|p| (*p).clone()).collect();
                verts.push(neighbor);
                verts.sort();
                if chambers.insert(verts.clone()) {
                    queue.push_back(verts);
                }
            }
        }
    }

    // Index points lexicographically and build.
    let mut point_set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for c in &chambers {
        for p in c {
            point_set.insert(p.clone());
        }
    }
    let points: Vec<LatticePoint> = point_set.iter().cloned().map(LatticePoint::new).collect();
    let index: BTreeMap<&Vec<i64>, usize> = point_set.iter().zip(0..).collect();
    let maximal: Vec<Simplex> = chambers
        .iter()
        .map(|c| Simplex::new(c.iter().map(|p| index[p]).collect()))
        .collect();
    build_complex(points, maximal, polytope)
}

/// The unique chamber apex on the far side of a wall, or `None` when the
/// wall has no valid neighbor (it lies on the boundary). Candidates are
/// confined to a small coordinate window by the slab constraints.
fn cross_wall(
    wall: &[&Vec<i64>],
    old_apex: &Vec<i64>,
    _d: i64,
    in_simplex: &impl Fn(&Vec<i64>) -> bool,
) -> Option<Vec<i64>> {
    let n = wall[0].len();
    // Oriented wall hyperplane through the wall vertices.
    let base = wall[0];
    let rows: Vec<Vec<i64>> = wall[1..]
        .iter()
        .map(|v| v.iter().zip(base.iter()).map(|(a, b)| a - b).collect())
        .collect();
    // Normal via cofactor expansion: solve for a vector orthogonal to all rows.
    let normal = wall_normal(&rows, n);
    let side =
        |p: &Vec<i64>| -> i64 { (0..n).map(|i| normal[i] * (p[i] - base[i])).sum::<i64>() };
    let old_side = side(old_apex);
    debug_assert!(old_side != 0);

    let mut ranges = Vec::with_capacity(n);
    for i in 0..n {
        let lo = wall.iter().map(|p| p[i]).min().unwrap();
        let hi = wall.iter().map(|p| p[i]).max().unwrap();
        ranges.push(((hi - 1), (lo + 1)));
    }
    let mut found: Option<Vec<i64>> = None;
    let mut candidate = vec![0i64; n];
    search_candidates(&mut candidate, 0, &ranges, &mut |cand: &Vec<i64>| {
        if !in_simplex(cand) {
            return;
        }
        if side(cand) * old_side >= 0 {
            return;
        }
        let mut verts: Vec<&Vec<i64>> = wall.to_vec();
        verts.push(cand);
        if !within_slabs(&verts) || !is_primitive(&verts) {
            return;
        }
        debug_assert!(found.is_none(), "two chambers across one wall");
        found = Some(cand.clone());
    });
    found
}

fn search_candidates(
    candidate: &mut Vec<i64>,
    coord: usize,
    ranges: &[(i64, i64)],
    visit: &mut impl FnMut(&Vec<i64>),
) {
    if coord == ranges.len() {
        visit(candidate);
        return;
    }
    for c in ranges[coord].0..=ranges[coord].1 {
        candidate[coord] = c;
        search_candidates(candidate, coord + 1, ranges, visit);
    }
}

/// Integer normal of the hyperplane spanned by `rows` (n−1 vectors in ℤⁿ),
/// by cofactor expansion of the determinant with a symbolic last row.
fn wall_normal(rows: &[Vec<i64>], n: usize) -> Vec<i64> {
    let mut normal = vec![0i64; n];
    for i in 0..n {
        let minor: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if i % 2 == 0 { 1 } else { -1 };
        normal[i] = sign * int_determinant(&minor);
    }
    normal
}

/// Reference construction: enumerate all primitive lattice simplices of
/// Pⁿ_d with interval widths at most one. Exponential; only for small d.
pub fn knudsen_brute_force(n: usize, d: i64) -> Result<PrimitiveComplex, ComplexError> {
    let polytope = LatticePolytope::standard_simplex(n, d);
    let points = polytope.lattice_points();
    let coords: Vec<Vec<i64>> = points.iter().map(|p| p.coords.clone()).collect();
    let mut maximal = Vec::new();
    let mut chosen = Vec::new();
    subsets(&coords, 0, n + 1, &mut chosen, &mut |subset: &Vec<usize>| {
        let verts: Vec<&Vec<i64>> = subset.iter().map(|&i| &coords[i]).collect();
        if within_slabs(&verts) && is_primitive(&verts) {
            maximal.push(Simplex::new(subset.clone()));
        }
    });
    build_complex(points, maximal, polytope)
}

fn subsets(
    coords: &[Vec<i64>],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&Vec<usize>),
) {
    if remaining == 0 {
        visit(chosen);
        return;
    }
    if coords.len() - from < remaining {
        return;
    }
    for i in from..coords.len() {
        chosen.push(i);
        subsets(coords, i + 1, remaining - 1, chosen, visit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional() {
        for d in 1..=5 {
            let k = knudsen(1, d).unwrap();
            assert_eq!(k.maximal_simplices().len() as i64, d);
            assert_eq!(k.f_vector(), vec![(d + 1) as usize, d as usize]);
        }
    }

    #[test]
    fn chamber_counts() {
        // dⁿ maximal simplices: the normalized volume of Pⁿ_d.
        for (n, d) in [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3)] {
            let k = knudsen(n, d).unwrap();
            assert_eq!(
                k.maximal_simplices().len() as i64,
                d.pow(n as u32),
                "knudsen({n},{d})"
            );
        }
    }

    #[test]
    fn flood_fill_matches_brute_force() {
        for (n, d) in [(1, 3), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
            let fast = knudsen(n, d).unwrap();
            let slow = knudsen_brute_force(n, d).unwrap();
            assert_eq!(fast.maximal_simplices(), slow.maximal_simplices());
            assert_eq!(fast.points(), slow.points());
        }
    }

    #[test]
    fn knudsen_2_2_explicit() {
        let k = knudsen(2, 2).unwrap();
        assert_eq!(k.maximal_simplices().len(), 4);
        let coords = |s: &Simplex| -> Vec<Vec<i64>> {
            s.verts().iter().map(|&v| k.point(v).coords.clone()).collect()
        };
        let has = |tri: &[[i64; 2]]| {
            k.maximal_simplices().iter().any(|s| {
                let c = coords(s);
                tri.iter().all(|p| c.contains(&p.to_vec()))
            })
        };
        assert!(has(&[[0, 0], [1, 0], [0, 1]]));
        assert!(has(&[[1, 0], [0, 1], [1, 1]]));
        assert!(has(&[[1, 0], [2, 0], [1, 1]]));
        assert!(has(&[[0, 1], [0, 2], [1, 1]]));
    }

    #[test]
    fn interior_vertex_link_is_circle() {
        // Knudsen R²₃ has the single interior vertex (1,1); its link must be
        // a cycle of edges.
        let k = knudsen(2, 3).unwrap();
        let v = k
            .points()
            .iter()
            .position(|p| p.coords == vec![1, 1])
            .unwrap();
        assert!(k.is_interior_vertex(v));
        let (_, link) = k.star_link(&Simplex::vertex(v)).unwrap();
        let verts: Vec<usize> = link
            .iter()
            .filter(|s| s.dim() == 0)
            .map(|s| s.verts()[0])
            .collect();
        let edges: Vec<&Simplex> = link.iter().filter(|s| s.dim() == 1).collect();
        assert_eq!(verts.len(), edges.len());
        for &w in &verts {
            let deg = edges.iter().filter(|e| e.contains(w)).count();
            assert_eq!(deg, 2, "link vertex degree");
        }
        // Connectivity: walk the cycle.
        let mut seen = vec![verts[0]];
        loop {
            let cur = *seen.last().unwrap();
            let next = edges.iter().find_map(|e| {
                let (a, b) = (e.verts()[0], e.verts()[1]);
                let other = if a == cur { b } else if b == cur { a } else { return None };
                (!seen.contains(&other)).then_some(other)
            });
            match next {
                Some(w) => seen.push(w),
                None => break,
            }
        }
        assert_eq!(seen.len(), verts.len(), "link is a single circle");
    }

    #[test]
    fn enlarged_boundaries_on_r23() {
        let k = knudsen(2, 3).unwrap();
        let center = k
            .points()
            .iter()
            .position(|p| p.coords == vec![1, 1])
            .unwrap();
        for d in 0..=2 {
            for (i, s) in k.simplices(d).iter().enumerate() {
                let id = (d, i);
                if k.in_b1(id) && !k.in_b0(id) {
                    assert_eq!(k.apex(id), Some(center));
                    assert!(s.contains(center));
                } else {
                    assert_eq!(k.apex(id), None);
                }
                // B0 in dimension 0 agrees with ∂K in dimension 0.
                if d == 0 {
                    assert_eq!(k.in_b0(id), k.is_boundary(id));
                }
            }
        }
        // The explicit listing agrees with the flags; every apex is the
        // center vertex.
        let (b0, b1, ap) = k.enlarged_boundaries();
        assert!(b0.len() < b1.len());
        assert!(b0.iter().all(|s| b1.contains(s)));
        assert!(!ap.is_empty());
        assert!(ap.iter().all(|(s, v)| *v == center && s.contains(center)));
    }

    #[test]
    fn size5_boundaries_are_strict() {
        // On the size-5 triangle: B₀K ⊊ B₁K ⊊ K.
        let k = knudsen(2, 5).unwrap();
        let mut b0_count = 0;
        let mut b1_count = 0;
        let mut total = 0;
        for d in 0..=2 {
            for i in 0..k.simplices(d).len() {
                total += 1;
                if k.in_b0((d, i)) {
                    b0_count += 1;
                    assert!(k.in_b1((d, i)), "B0 within B1");
                }
                if k.in_b1((d, i)) {
                    b1_count += 1;
                }
            }
        }
        assert!(b0_count < b1_count && b1_count < total);
    }
}
