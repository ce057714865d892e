//! Seeded Monte-Carlo estimation of the expected number of connected
//! components over uniformly random sign distributions.

use super::ExperimentError;
use crate::calculus::SignDistribution;
use crate::lattice::PrimitiveComplex;
use crate::real::{build_tx, components};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Aggregated result of a Monte-Carlo run. Sums are exact integers so that
/// aggregation is order-independent; the ratio normalizes the mean by
/// 1 + #interior lattice points.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentResult {
    pub trials: u64,
    pub seed: u64,
    pub sum_b0: u64,
    pub sum_sq_b0: u64,
    pub mean_b0: f64,
    pub std_b0: f64,
    pub interior_points: usize,
    pub ratio: f64,
}

/// Draw a sign distribution for one trial: stream `trial` of the seeded
/// generator, one bit per vertex in index order.
pub(crate) fn trial_distribution(seed: u64, trial: u64, len: usize) -> SignDistribution {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    SignDistribution::from_fn(len, |_| rng.gen())
}

/// Run `trials` independent draws and report mean, sample deviation, and
/// the normalized ratio.
pub fn monte_carlo_b0(
    k: &PrimitiveComplex,
    trials: u64,
    seed: u64,
) -> Result<ExperimentResult, ExperimentError> {
    assert!(trials >= 1);
    let len = k.points().len();
    let mut sum = 0u64;
    let mut sum_sq = 0u64;
    for trial in 0..trials {
        let eps = trial_distribution(seed, trial, len);
        let tx = build_tx(k, &eps)?;
        let b0 = components(&tx).count as u64;
        sum += b0;
        sum_sq += b0 * b0;
    }
    let mean = sum as f64 / trials as f64;
    let variance = if trials > 1 {
        (sum_sq as f64 - trials as f64 * mean * mean) / (trials as f64 - 1.0)
    } else {
        0.0
    };
    let interior = k.polytope().interior_lattice_points().len();
    Ok(ExperimentResult {
        trials,
        seed,
        sum_b0: sum,
        sum_sq_b0: sum_sq,
        mean_b0: mean,
        std_b0: variance.max(0.0).sqrt(),
        interior_points: interior,
        ratio: mean / (1.0 + interior as f64),
    })
}
