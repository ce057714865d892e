//! Maximal T-surfaces from the Harnack distribution h³ = xy + xz + yz on
//! the Itenberg–Viro triangulations: detached spheres around every
//! interior vertex plus one component meeting all toric divisors.
//!
//! ```bash
//! cargo run --example harnack_surface
//! ```

use patchwork::calculus::{named_distribution, NamedDistribution};
use patchwork::families::itenberg_viro;
use patchwork::real::{build_tx, component_betti, components};

fn main() {
    for d in [4i64, 5] {
        let k = itenberg_viro(3, d).expect("valid");
        let h3 = named_distribution(&NamedDistribution::Harnack, &k);
        let tx = build_tx(&k, &h3).expect("desk scale");
        let comps = components(&tx);
        println!(
            "IV(3,{d}) + harnack: {} components, {} interior points",
            comps.count,
            k.polytope().interior_lattice_points().len()
        );
        for c in 0..comps.count as u32 {
            let divisors: Vec<usize> = comps.divisors[c as usize].iter().copied().collect();
            if divisors.is_empty() {
                println!(
                    "  component {c}: detached, Betti {:?}",
                    component_betti(&tx, &comps, c)
                );
            } else {
                println!("  component {c}: meets divisors {divisors:?}");
            }
        }
    }
}
