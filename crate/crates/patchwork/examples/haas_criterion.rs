//! Exhaustive verification of the maximality criterion on the cubic:
//! over all 2¹⁰ sign distributions on knudsen(2,3), the prediction agrees
//! with the component count computed on the cell complex.
//!
//! ```bash
//! cargo run --example haas_criterion
//! ```

use patchwork::calculus::{haas_check, Frames, Prediction, SignDistribution};
use patchwork::families::knudsen;
use patchwork::real::{build_tx, components};

fn main() {
    let k = knudsen(2, 3).expect("valid");
    let frames = Frames::new(&k);
    let len = k.points().len();
    let mut agree = 0u32;
    let mut maximizers = 0u32;
    for code in 0u32..(1 << len) {
        let eps = SignDistribution::from_fn(len, |v| (code >> v) & 1 == 1);
        let report = haas_check(&k, &frames, &eps, false).unwrap();
        let predicted = report.predicted_maximal == Prediction::Yes;
        let tx = build_tx(&k, &eps).unwrap();
        let actual = components(&tx).count == 2;
        if predicted == actual {
            agree += 1;
        }
        if actual {
            maximizers += 1;
        }
    }
    println!(
        "prediction matches the oracle on {agree}/{} distributions; {maximizers} reach b0 = 2",
        1 << len
    );
}
