//! Exact distribution of the component count over all sign distributions.

use super::ExperimentError;
use crate::calculus::SignDistribution;
use crate::lattice::PrimitiveComplex;
use crate::real::{build_tx, components};
use std::collections::BTreeMap;

/// Vertex-count cap for the 2^f₀ sweep.
pub const EXHAUSTIVE_VERTEX_CAP: usize = 20;

/// Exact histogram of b₀ over every sign distribution, together with the
/// set of maximizers.
pub struct ExhaustiveB0 {
    pub histogram: BTreeMap<usize, u64>,
    pub maximal_b0: usize,
    pub maximal_set: Vec<SignDistribution>,
}

impl ExhaustiveB0 {
    pub fn total(&self) -> u64 {
        self.histogram.values().sum()
    }

    pub fn mean(&self) -> f64 {
        let total = self.total() as f64;
        self.histogram
            .iter()
            .map(|(&b0, &count)| b0 as f64 * count as f64)
            .sum::<f64>()
            / total
    }
}

pub fn exhaustive_b0(k: &PrimitiveComplex) -> Result<ExhaustiveB0, ExperimentError> {
    let len = k.points().len();
    if len > EXHAUSTIVE_VERTEX_CAP {
        return Err(ExperimentError::TooManyVertices {
            count: len,
            cap: EXHAUSTIVE_VERTEX_CAP,
        });
    }
    let mut histogram = BTreeMap::new();
    let mut maximal_b0 = 0;
    let mut maximal_set = Vec::new();
    for code in 0u64..(1 << len) {
        let eps = SignDistribution::from_fn(len, |v| (code >> v) & 1 == 1);
        let tx = build_tx(k, &eps)?;
        let b0 = components(&tx).count;
        *histogram.entry(b0).or_insert(0u64) += 1;
        use std::cmp::Ordering;
        match b0.cmp(&maximal_b0) {
            Ordering::Greater => {
                maximal_b0 = b0;
                maximal_set.clear();
                maximal_set.push(eps);
            }
            Ordering::Equal => maximal_set.push(eps),
            Ordering::Less => {}
        }
    }
    Ok(ExhaustiveB0 {
        histogram,
        maximal_b0,
        maximal_set,
    })
}
