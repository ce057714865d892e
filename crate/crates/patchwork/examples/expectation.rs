//! Expected number of components under uniformly random signs: the exact
//! exhaustive distribution against the seeded Monte-Carlo estimate.
//!
//! ```bash
//! cargo run --example expectation
//! ```

use patchwork::experiments::{exhaustive_b0, monte_carlo_b0};
use patchwork::families::{itenberg_viro, knudsen};

fn main() {
    let k = knudsen(2, 3).unwrap();
    let sweep = exhaustive_b0(&k).unwrap();
    println!(
        "knudsen(2,3) exhaustive: histogram {:?}, mean {:.4}, {} maximizers of b0 = {}",
        sweep.histogram,
        sweep.mean(),
        sweep.maximal_set.len(),
        sweep.maximal_b0
    );
    let mc = monte_carlo_b0(&k, 4096, 0x5eed).unwrap();
    println!(
        "knudsen(2,3) Monte-Carlo (4096 trials): mean {:.4} ± {:.4}, ratio {:.4}",
        mc.mean_b0,
        mc.std_b0 / (mc.trials as f64).sqrt(),
        mc.ratio
    );
    for (name, k, trials) in [
        ("knudsen(2,6)", knudsen(2, 6).unwrap(), 512u64),
        ("IV(3,4)", itenberg_viro(3, 4).unwrap(), 512),
    ] {
        let r = monte_carlo_b0(&k, trials, 7).unwrap();
        println!(
            "{name} ({trials} trials): mean b0 {:.3}, normalized ratio {:.4}",
            r.mean_b0, r.ratio
        );
    }
}
