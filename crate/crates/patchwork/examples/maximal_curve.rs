//! The maximal quintic T-curve: knudsen(2,5) with the quadratic sign
//! distribution x + y + xy reaches the component upper bound
//! 1 + #interior points = 7, and the patchwork is rendered to SVG.
//!
//! ```bash
//! cargo run --example maximal_curve
//! ```

use patchwork::calculus::{named_distribution, NamedDistribution, QuadraticCoeffs};
use patchwork::experiments::render_svg;
use patchwork::families::knudsen;
use patchwork::real::{betti, build_tx, components};

fn main() {
    let k = knudsen(2, 5).expect("valid");
    let eps = named_distribution(
        &NamedDistribution::Quadratic(QuadraticCoeffs {
            constant: false,
            linear: vec![true, true],
            quadratic: vec![(0, 1)],
        }),
        &k,
    );
    let tx = build_tx(&k, &eps).expect("desk scale");
    let comps = components(&tx);
    println!(
        "quintic T-curve: {} components (upper bound {})",
        comps.count,
        1 + k.polytope().interior_lattice_points().len()
    );
    println!("Betti numbers: {:?}", betti(&tx));
    let svg = render_svg(&k, &eps).expect("two-dimensional");
    let path = std::env::temp_dir().join("maximal_quintic.svg");
    std::fs::write(&path, &svg).expect("writable temp dir");
    println!("patchwork written to {}", path.display());
}
