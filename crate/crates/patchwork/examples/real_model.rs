//! The quadrant cell model of real toric varieties: Betti numbers of ℝK
//! for the projective spaces, and the structural checks on hypersurfaces.
//!
//! ```bash
//! cargo run --example real_model
//! ```

use patchwork::calculus::{named_distribution, Frames, NamedDistribution};
use patchwork::families::itenberg_viro;
use patchwork::real::{
    avoided_lift_check, betti, build_rk, build_tx, h1_inclusion_surjective, manifold_check,
};

fn main() {
    // ℝPⁿ for n = 1, 2, 3 from the unit simplices.
    for n in 1..=3usize {
        let k = itenberg_viro(n, 1).unwrap();
        let rk = build_rk(&k).unwrap();
        println!(
            "RP{n}: {} cells, Betti {:?}",
            rk.cell_count(),
            betti(&rk)
        );
    }
    // A quartic surface: smoothness checks and the degree-one inclusion.
    let k = itenberg_viro(3, 4).unwrap();
    let frames = Frames::new(&k);
    let h3 = named_distribution(&NamedDistribution::Harnack, &k);
    let tx = build_tx(&k, &h3).unwrap();
    println!(
        "IV(3,4) + harnack: {} cells, Betti {:?}",
        tx.cell_count(),
        betti(&tx)
    );
    println!("  manifold check: {}", manifold_check(&tx));
    println!(
        "  avoided-lift check: {}",
        avoided_lift_check(&k, &frames, &h3)
    );
    println!(
        "  H1 inclusion onto: {}",
        h1_inclusion_surjective(&k, &h3).unwrap()
    );
    // The cell dump for external verification.
    let seg = itenberg_viro(1, 1).unwrap();
    let circle = build_rk(&seg).unwrap();
    println!(
        "cell dump of the circle: {}",
        patchwork::io::cells_to_json(&circle, &seg)
    );
}
