//! The consolidated analysis report for one (K, ε) pair.

use super::ExperimentError;
use crate::calculus::{
    haas_check, kappa, laplacian_nullity, rho_uniformity, sphere_indicators, Frames, HaasReport,
    Kappa, SignDistribution,
};
use crate::lattice::PrimitiveComplex;
use crate::real::{betti, build_tx, component_betti, components};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub cells: usize,
    /// Facet indices of the toric divisors the component meets.
    pub divisors: Vec<usize>,
    /// Betti numbers, computed for divisor-free components (the detached
    /// sphere candidates).
    pub betti: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Bounds {
    /// 1 + #interior lattice points.
    pub component_upper: usize,
    /// 1 + #interior − κ(K).
    pub kappa_sharpened: i64,
    /// 1 + #sphere indicators.
    pub sphere_lower: usize,
    pub upper_attained: bool,
    pub sharpened_attained: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub dim: usize,
    pub f_vector: Vec<usize>,
    pub interior_points: Vec<Vec<i64>>,
    pub rho_uniform: bool,
    pub rho_failures: Vec<Vec<usize>>,
    pub kappa: Kappa,
    pub haas: HaasReport,
    pub b0: usize,
    pub betti: Vec<usize>,
    pub components: Vec<ComponentReport>,
    pub sphere_indicators: Vec<usize>,
    pub laplacian_nullity: Option<usize>,
    pub bounds: Bounds,
}

/// Assemble the full analysis of one pair (K, ε).
pub fn report(k: &PrimitiveComplex, eps: &SignDistribution) -> Result<Report, ExperimentError> {
    let frames = Frames::new(k);
    let (rho_uniform, failures) = rho_uniformity(&frames);
    let kappa_result = kappa(k, &frames);
    let haas = haas_check(k, &frames, eps, k.dim() == 3)?;
    let tx = build_tx(k, eps)?;
    let comps = components(&tx);
    let betti_all = betti(&tx);
    let component_reports: Vec<ComponentReport> = (0..comps.count as u32)
        .map(|c| {
            let cells = comps
                .labels
                .iter()
                .map(|per_dim| per_dim.iter().filter(|&&l| l == c).count())
                .sum();
            let divisors: Vec<usize> = comps.divisors[c as usize].iter().copied().collect();
            let betti = if divisors.is_empty() {
                Some(component_betti(&tx, &comps, c))
            } else {
                None
            };
            ComponentReport {
                cells,
                divisors,
                betti,
            }
        })
        .collect();
    let spheres = sphere_indicators(k, &frames, eps);
    let laplacian_nullity = if k.dim() == 2 {
        Some(laplacian_nullity(k, &frames, eps)?)
    } else {
        None
    };
    let interior = k.polytope().interior_lattice_points();
    let b0 = comps.count;
    let upper = 1 + interior.len();
    let sharpened = 1 + interior.len() as i64 - kappa_result.value as i64;
    let sphere_lower = 1 + spheres.len();
    Ok(Report {
        dim: k.dim(),
        f_vector: k.f_vector(),
        interior_points: interior.iter().map(|p| p.coords.clone()).collect(),
        rho_uniform,
        rho_failures: failures.iter().map(|s| s.verts().to_vec()).collect(),
        kappa: kappa_result,
        haas,
        b0,
        betti: betti_all,
        components: component_reports,
        sphere_indicators: spheres,
        laplacian_nullity,
        bounds: Bounds {
            component_upper: upper,
            kappa_sharpened: sharpened,
            sphere_lower,
            upper_attained: b0 == upper,
            sharpened_attained: b0 as i64 == sharpened,
        },
    })
}
