//! Independent oracle for the T-hypersurface constructor: rebuild the
//! member-cell set from the full quadrant model by evaluating the sign
//! cocycle through the exterior-algebra route (ω from Plücker
//! coordinates), and compare against `build_tx`.

use patchwork::calculus::{named_distribution, omega, NamedDistribution, SignDistribution};
use patchwork::families::{itenberg_viro, knudsen};
use patchwork::lattice::PrimitiveComplex;
use patchwork::real::{build_rk, build_tx, components, RealCell};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Membership of a lifted cube in the hypersurface, decided through the
/// dual-complex definition: some edge of the lower simplex must carry
/// dε(σ¹) + ω(σ¹)(arg) = 1, with ω read off the degree-one wedge vector.
fn member_by_omega(
    k: &PrimitiveComplex,
    eps: &SignDistribution,
    cell: &RealCell,
) -> bool {
    let lower = k.simplex(cell.lower);
    if lower.dim() < 1 {
        return false;
    }
    let verts = lower.verts();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let edge = patchwork::lattice::Simplex::new(vec![verts[i], verts[j]]);
            let w = omega(k, &edge).unwrap();
            // Evaluate the covector on the argument via its coordinate
            // support.
            let mut pairing = false;
            for s in w.support() {
                let bit = s[0];
                if (cell.arg >> bit) & 1 == 1 {
                    pairing = !pairing;
                }
            }
            if eps.get(verts[i]) ^ eps.get(verts[j]) ^ pairing {
                return true;
            }
        }
    }
    false
}

fn cell_key(c: &RealCell) -> (usize, usize, usize, usize, u32) {
    (c.lower.0, c.lower.1, c.upper.0, c.upper.1, c.arg)
}

fn compare(k: &PrimitiveComplex, eps: &SignDistribution) {
    let rk = build_rk(k).unwrap();
    let tx = build_tx(k, eps).unwrap();
    let mut oracle: Vec<BTreeSet<_>> = vec![BTreeSet::new(); rk.cells.len()];
    for (d, list) in rk.cells.iter().enumerate() {
        for c in list {
            if member_by_omega(k, eps, c) {
                oracle[d].insert(cell_key(c));
            }
        }
    }
    for (d, list) in tx.cells.iter().enumerate() {
        let ours: BTreeSet<_> = list.iter().map(cell_key).collect();
        assert_eq!(ours, oracle[d], "member cells of dimension {d}");
    }
    for d in tx.cells.len()..rk.cells.len() {
        assert!(oracle[d].is_empty(), "no member cells above dimension n-1");
    }
}

#[test]
fn tx_matches_dual_complex_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdc0);
    for k in [knudsen(2, 3).unwrap(), knudsen(2, 4).unwrap()] {
        for _ in 0..8 {
            let eps = SignDistribution::from_fn(k.points().len(), |_| rng.gen());
            compare(&k, &eps);
        }
    }
    let k = itenberg_viro(3, 2).unwrap();
    for _ in 0..4 {
        let eps = SignDistribution::from_fn(k.points().len(), |_| rng.gen());
        compare(&k, &eps);
    }
    let k = itenberg_viro(3, 3).unwrap();
    let h = named_distribution(&NamedDistribution::Harnack, &k);
    compare(&k, &h);
}

#[test]
fn harnack_hypersurfaces_reach_every_divisor() {
    // A simple-integrability solution meets every toric divisor region.
    for (k, eps) in [
        (knudsen(2, 5).unwrap(), None),
        (itenberg_viro(3, 4).unwrap(), Some(NamedDistribution::Harnack)),
    ] {
        let eps = match eps {
            Some(kind) => named_distribution(&kind, &k),
            None => {
                let frames = patchwork::calculus::Frames::new(&k);
                patchwork::calculus::solve_simple_harnack(&k, &frames).expect("integrable")
            }
        };
        let tx = build_tx(&k, &eps).unwrap();
        let comps = components(&tx);
        let mut all: BTreeSet<usize> = BTreeSet::new();
        for set in &comps.divisors {
            all.extend(set.iter().copied());
        }
        assert_eq!(
            all.len(),
            k.polytope().facets.len(),
            "every divisor is met by some component"
        );
        // And exactly one component touches them all.
        let full = comps
            .divisors
            .iter()
            .filter(|s| s.len() == k.polytope().facets.len())
            .count();
        assert_eq!(full, 1);
    }
}
