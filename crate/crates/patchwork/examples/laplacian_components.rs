//! The T-curve Laplacian: for plane curves the number of components is
//! one plus the nullity of the intersection matrix on interior vertices.
//!
//! ```bash
//! cargo run --example laplacian_components
//! ```

use patchwork::calculus::{laplacian, laplacian_nullity, Frames, SignDistribution};
use patchwork::families::knudsen;
use patchwork::real::{build_tx, components};
use rand::{Rng, SeedableRng};

fn main() {
    let k = knudsen(2, 4).expect("valid");
    let frames = Frames::new(&k);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    println!(
        "knudsen(2,4): {} interior vertices",
        k.interior_vertices().len()
    );
    for trial in 0..8 {
        let eps = SignDistribution::from_fn(k.points().len(), |_| rng.gen());
        let lap = laplacian(&k, &frames, &eps).unwrap();
        let nullity = laplacian_nullity(&k, &frames, &eps).unwrap();
        let b0 = components(&build_tx(&k, &eps).unwrap()).count;
        println!(
            "trial {trial}: laplacian rank {}, nullity {nullity}, b0 = {b0} = 1 + nullity: {}",
            lap.rank(),
            b0 == 1 + nullity
        );
        assert_eq!(b0, 1 + nullity);
    }
}
