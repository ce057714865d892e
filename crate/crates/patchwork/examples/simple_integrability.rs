//! Solving the simple-integrability system: a sign distribution whose
//! second derivative matches the ρ chain off B₀K yields a T-hypersurface
//! with the maximal number of components.
//!
//! ```bash
//! cargo run --example simple_integrability
//! ```

use patchwork::calculus::{
    rho_chain, second_derivative, solve_simple_harnack, sphere_indicators, Frames,
};
use patchwork::families::{itenberg_viro, knudsen};
use patchwork::real::{build_tx, components};

fn main() {
    for (name, k) in [
        ("knudsen(2,4)", knudsen(2, 4).unwrap()),
        ("IV(2,5)", itenberg_viro(2, 5).unwrap()),
        ("IV(3,4)", itenberg_viro(3, 4).unwrap()),
    ] {
        let frames = Frames::new(&k);
        match solve_simple_harnack(&k, &frames) {
            None => println!("{name}: not simply integrable"),
            Some(eps) => {
                // Verify the solution satisfies every wall equation.
                let chain = rho_chain(&k, &frames).unwrap();
                let ok = frames.walls().iter().all(|w| {
                    chain.values[w.index].is_none_or(|v| second_derivative(&eps, w) == v)
                });
                let b0 = components(&build_tx(&k, &eps).unwrap()).count;
                let interior = k.interior_vertices().len();
                println!(
                    "{name}: solved ({}), b0 = {b0} = 1 + {interior} interior vertices, spheres at {:?}",
                    if ok { "verified" } else { "INVALID" },
                    sphere_indicators(&k, &frames, &eps)
                );
            }
        }
    }
    // A non-ρ-uniform triangulation is never simply integrable.
    let k = knudsen(3, 5).unwrap();
    let frames = Frames::new(&k);
    println!(
        "knudsen(3,5): simply integrable: {}",
        solve_simple_harnack(&k, &frames).is_some()
    );
}
