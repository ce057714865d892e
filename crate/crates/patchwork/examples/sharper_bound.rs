//! The ρ-uniformity defect κ and the sharpened component bound on the
//! smallest non-ρ-uniform Knudsen triangulation, knudsen(3,5).
//!
//! ```bash
//! cargo run --example sharper_bound
//! ```

use patchwork::calculus::{kappa, matrix_m0, rho_uniformity, Frames, SignDistribution};
use patchwork::families::knudsen;
use patchwork::real::{build_tx, components};
use rand::{Rng, SeedableRng};

fn main() {
    for d in 1..=5i64 {
        let k = knudsen(3, d).unwrap();
        let frames = Frames::new(&k);
        let (uniform, failing) = rho_uniformity(&frames);
        println!(
            "knudsen(3,{d}): rho-uniform {uniform} ({} failing walls)",
            failing.len()
        );
    }
    let k = knudsen(3, 5).unwrap();
    let frames = Frames::new(&k);
    let kap = kappa(&k, &frames);
    let interior = k.polytope().interior_lattice_points().len();
    let bound = 1 + interior - kap.value;
    println!(
        "knudsen(3,5): kappa = {} (exact: {}), sharpened bound b0 <= {bound} (plain bound {})",
        kap.value,
        kap.exact,
        1 + interior
    );
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31337);
    let mut max_b0 = 0;
    let mut min_rank = usize::MAX;
    for _ in 0..50 {
        let eps = SignDistribution::from_fn(k.points().len(), |_| rng.gen());
        let b0 = components(&build_tx(&k, &eps).unwrap()).count;
        max_b0 = max_b0.max(b0);
        min_rank = min_rank.min(matrix_m0(&k, &frames, &eps).unwrap().matrix.rank());
        assert!(b0 <= bound);
    }
    println!("50 random signs: max b0 seen {max_b0}, min intersection-matrix rank {min_rank}");
}
