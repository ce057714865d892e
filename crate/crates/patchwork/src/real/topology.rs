//! Components, divisor incidence, and F₂ Betti numbers of real complexes.

use super::RealComplex;
use crate::f2::{sparse_rank, UnionFind};
use std::collections::BTreeSet;

/// Connected components of a real complex with per-cell labels and the
/// toric divisors each component meets.
pub struct Components {
    pub count: usize,
    /// Component id per cell, indexed like `cells`.
    pub labels: Vec<Vec<u32>>,
    /// Facet indices of P met by each component.
    pub divisors: Vec<BTreeSet<usize>>,
}

/// Union-find over all cells joined along face incidence.
pub fn components(x: &RealComplex) -> Components {
    let offsets: Vec<usize> = x
        .cells
        .iter()
        .scan(0usize, |acc, l| {
            let o = *acc;
            *acc += l.len();
            Some(o)
        })
        .collect();
    let total = x.cell_count();
    let mut uf = UnionFind::new(total);
    for d in 1..x.cells.len() {
        for (i, faces) in x.faces[d].iter().enumerate() {
            for &f in faces {
                uf.union(offsets[d] + i, offsets[d - 1] + f as usize)
                    .expect("indices in range");
            }
        }
    }
    // Deterministic labels: order of first appearance, scanning dimensions
    // upward.
    let mut label_of_root = std::collections::HashMap::new();
    let mut labels = Vec::with_capacity(x.cells.len());
    let mut count = 0u32;
    for (d, list) in x.cells.iter().enumerate() {
        let mut per_dim = Vec::with_capacity(list.len());
        for i in 0..list.len() {
            let root = uf.find(offsets[d] + i).expect("index in range");
            let label = *label_of_root.entry(root).or_insert_with(|| {
                let l = count;
                count += 1;
                l
            });
            per_dim.push(label);
        }
        labels.push(per_dim);
    }
    let mut divisors = vec![BTreeSet::new(); count as usize];
    for (d, list) in x.cells.iter().enumerate() {
        for i in 0..list.len() {
            let mask = x.divisors[d][i];
            if mask != 0 {
                let set = &mut divisors[labels[d][i] as usize];
                for f in 0..64 {
                    if (mask >> f) & 1 == 1 {
                        set.insert(f);
                    }
                }
            }
        }
    }
    Components {
        count: count as usize,
        labels,
        divisors,
    }
}

/// F₂ Betti numbers: bₖ = dim ker ∂ₖ − rank ∂ₖ₊₁, with the XOR boundary
/// of the regular cell structure.
pub fn betti(x: &RealComplex) -> Vec<usize> {
    let dims = x.cells.len();
    let mut ranks = vec![0usize; dims + 1];
    for d in 1..dims {
        let columns: Vec<Vec<u32>> = x.faces[d].iter().map(|f| f.to_vec()).collect();
        ranks[d] = sparse_rank(&columns);
    }
    (0..dims)
        .map(|d| x.cells[d].len() - ranks[d] - ranks[d + 1])
        .collect()
}

/// Betti numbers of a single component.
pub fn component_betti(x: &RealComplex, comps: &Components, component: u32) -> Vec<usize> {
    let dims = x.cells.len();
    // Renumber the member cells per dimension.
    let mut member_index: Vec<Vec<Option<u32>>> = Vec::with_capacity(dims);
    let mut counts = vec![0usize; dims];
    for d in 0..dims {
        let mut per_dim = Vec::with_capacity(x.cells[d].len());
        for i in 0..x.cells[d].len() {
            if comps.labels[d][i] == component {
                per_dim.push(Some(counts[d] as u32));
                counts[d] += 1;
            } else {
                per_dim.push(None);
            }
        }
        member_index.push(per_dim);
    }
    let mut ranks = vec![0usize; dims + 1];
    for d in 1..dims {
        let mut columns = Vec::new();
        for (i, faces) in x.faces[d].iter().enumerate() {
            if member_index[d][i].is_none() {
                continue;
            }
            let col: Vec<u32> = faces
                .iter()
                .map(|&f| member_index[d - 1][f as usize].expect("faces stay in the component"))
                .collect();
            let mut col = col;
            col.sort_unstable();
            columns.push(col);
        }
        ranks[d] = sparse_rank(&columns);
    }
    (0..dims).map(|d| counts[d] - ranks[d] - ranks[d + 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::SignDistribution;
    use crate::lattice::fixtures;
    use crate::real::{build_rk, build_tx};

    #[test]
    fn empty_complex() {
        let x = RealComplex {
            ambient: 2,
            cells: vec![Vec::new(), Vec::new()],
            faces: vec![Vec::new(), Vec::new()],
            divisors: vec![Vec::new(), Vec::new()],
            is_subcomplex: true,
        };
        assert_eq!(components(&x).count, 0);
        assert_eq!(betti(&x), vec![0, 0]);
    }

    #[test]
    fn projective_spaces() {
        // ℝP¹: Betti (1,1).
        let seg = crate::families::itenberg_viro(1, 1).unwrap();
        assert_eq!(betti(&build_rk(&seg).unwrap()), vec![1, 1]);
        // ℝP²: Betti (1,1,1).
        let t1 = fixtures::unit_triangle();
        assert_eq!(betti(&build_rk(&t1).unwrap()), vec![1, 1, 1]);
        // ℝP³: Betti (1,1,1,1).
        let p31 = crate::families::itenberg_viro(3, 1).unwrap();
        assert_eq!(betti(&build_rk(&p31).unwrap()), vec![1, 1, 1, 1]);
    }

    #[test]
    fn line_in_projective_plane() {
        // Any ε on P²₁ gives a degree-one curve: Betti (1,1).
        let t1 = fixtures::unit_triangle();
        for signs in 0..8u32 {
            let eps = SignDistribution::from_fn(3, |v| (signs >> v) & 1 == 1);
            let tx = build_tx(&t1, &eps).unwrap();
            assert_eq!(betti(&tx), vec![1, 1]);
            let comps = components(&tx);
            assert_eq!(comps.count, 1);
        }
    }

    #[test]
    fn maximal_cubic_is_two_circles() {
        let k = crate::families::knudsen(2, 3).unwrap();
        let eps = SignDistribution::from_fn(k.points().len(), |v| {
            let c = &k.point(v).coords;
            (c[0] + c[1] + c[0] * c[1]).rem_euclid(2) == 1
        });
        let tx = build_tx(&k, &eps).unwrap();
        assert_eq!(betti(&tx), vec![2, 2]);
    }

    #[test]
    fn component_count_matches_betti_zero() {
        let k = crate::families::knudsen(2, 3).unwrap();
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..12 {
            let eps = SignDistribution::from_fn(k.points().len(), |_| rng.gen());
            let tx = build_tx(&k, &eps).unwrap();
            assert_eq!(components(&tx).count, betti(&tx)[0]);
        }
    }
}
