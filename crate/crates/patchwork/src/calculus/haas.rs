//! The maximality criteria: the generalised Haas conditions, the defect
//! count κ, the simple-integrability solver, and the T-curve Laplacian.

use super::{
    intersection_number, rho_chain, rho_uniformity, second_derivative, CalculusError, Frames,
    SignDistribution,
};
use crate::f2::{F2Matrix, F2Vector};
use crate::lattice::{PrimitiveComplex, Simplex};
use serde::Serialize;

/// Outcome of the maximality prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prediction {
    Yes,
    No,
    NeedsCond2,
}

/// Report of the four maximality conditions.
#[derive(Clone, Debug, Serialize)]
pub struct HaasReport {
    /// Condition 1: the triangulation is ρ-uniform.
    pub cond1_rho_uniform: bool,
    pub cond1_failures: Vec<Vec<usize>>,
    /// Condition 2: the degree-one homological inclusion is onto
    /// (`None` when not computed; trivially true in dimension two).
    pub cond2_ell: Option<bool>,
    /// Condition 3: |D²ε| matches ρ on every wall off B₁K.
    pub cond3_d2_eq_rho: bool,
    pub cond3_violations: Vec<Vec<usize>>,
    /// Condition 4: the intersection number of (ap(σ), σ) vanishes for
    /// every (n−2)-simplex σ of B₁K \ B₀K.
    pub cond4_b1_pairing: bool,
    pub cond4_violations: Vec<Vec<usize>>,
    pub predicted_maximal: Prediction,
}

/// Evaluate the maximality conditions for (K, ε). For n = 3 the homological
/// condition 2 is computed on demand; above dimension 3 it is reported as
/// not computed.
pub fn haas_check(
    k: &PrimitiveComplex,
    frames: &Frames,
    eps: &SignDistribution,
    compute_cond2: bool,
) -> Result<HaasReport, CalculusError> {
    let n = k.dim();
    if n < 2 {
        return Err(CalculusError::WrongDimension {
            expected: 2,
            actual: n,
        });
    }
    let (cond1, failures) = rho_uniformity(frames);
    let cond1_failures: Vec<Vec<usize>> =
        failures.iter().map(|s| s.verts().to_vec()).collect();

    // Condition 3, checked entrywise on walls carrying a relevant vertex
    // (exactly the walls off B₁K): |D²ε| must equal ρ at every relevant
    // vertex.
    let mut cond3_violations = Vec::new();
    for wall in frames.walls() {
        let d2 = second_derivative(eps, wall);
        let ok = wall
            .simplex
            .verts()
            .iter()
            .zip(&wall.relevant)
            .filter(|(_, &r)| r)
            .all(|(&v, _)| wall.rho_at(v).unwrap() == d2);
        if !ok {
            cond3_violations.push(wall.simplex.verts().to_vec());
        }
        debug_assert_eq!(
            wall.relevant.iter().any(|&r| r),
            !k.in_b1((n - 1, wall.index)),
            "relevant vertices characterise walls off B1K"
        );
    }
    let cond3 = cond3_violations.is_empty();

    // Condition 4 on the (n−2)-simplices of B₁K \ B₀K.
    let mut cond4_violations = Vec::new();
    for (i, s) in k.simplices(n - 2).iter().enumerate() {
        let id = (n - 2, i);
        if !k.in_b1(id) || k.in_b0(id) {
            continue;
        }
        let apex = k.apex(id).expect("B1 \\ B0 simplex has an apex");
        if intersection_number(k, frames, eps, apex, s)? {
            cond4_violations.push(s.verts().to_vec());
        }
    }
    let cond4 = cond4_violations.is_empty();

    let cond2_ell = if n == 2 {
        Some(true)
    } else if n == 3 && compute_cond2 {
        Some(
            crate::real::h1_inclusion_surjective(k, eps)
                .expect("dimension-three guard already checked"),
        )
    } else {
        None
    };

    let predicted_maximal = if !(cond1 && cond3 && cond4) || cond2_ell == Some(false) {
        Prediction::No
    } else if n == 2 || cond2_ell == Some(true) {
        Prediction::Yes
    } else {
        Prediction::NeedsCond2
    };

    Ok(HaasReport {
        cond1_rho_uniform: cond1,
        cond1_failures,
        cond2_ell,
        cond3_d2_eq_rho: cond3,
        cond3_violations,
        cond4_b1_pairing: cond4,
        cond4_violations,
        predicted_maximal,
    })
}

/// κ(K) together with an exactness flag: the maximum number of
/// ρ-uniformity failures that are pairwise at graph distance at least two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Kappa {
    pub value: usize,
    pub exact: bool,
}

/// Threshold above which the independent-set search falls back to a greedy
/// lower bound.
const KAPPA_EXACT_LIMIT: usize = 40;

pub fn kappa(k: &PrimitiveComplex, frames: &Frames) -> Kappa {
    let (_, failing) = rho_uniformity(frames);
    if failing.is_empty() {
        return Kappa {
            value: 0,
            exact: true,
        };
    }
    // Conflict graph: failures closer than distance two.
    let m = failing.len();
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let d = k
                .simplex_distance(&failing[i], &failing[j])
                .expect("failing simplices belong to the complex");
            if d < 2 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    if m <= KAPPA_EXACT_LIMIT {
        Kappa {
            value: max_independent_set(&adj),
            exact: true,
        }
    } else {
        Kappa {
            value: greedy_independent_set(&adj),
            exact: false,
        }
    }
}

/// Exact maximum independent set by branch and bound.
fn max_independent_set(adj: &[Vec<bool>]) -> usize {
    fn branch(adj: &[Vec<bool>], candidates: &mut Vec<usize>, chosen: usize, best: &mut usize) {
        if chosen + candidates.len() <= *best {
            return;
        }
        if candidates.is_empty() {
            *best = (*best).max(chosen);
            return;
        }
        // Branch on the highest-degree candidate within the candidate set.
        let (pos, &v) = candidates
            .iter()
            .enumerate()
            .max_by_key(|(_, &v)| candidates.iter().filter(|&&u| adj[v][u]).count())
            .unwrap();
        // Include v.
        let mut included: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&u| u != v && !adj[v][u])
            .collect();
        branch(adj, &mut included, chosen + 1, best);
        // Exclude v.
        candidates.remove(pos);
        branch(adj, candidates, chosen, best);
        candidates.push(v);
    }
    let mut best = 0;
    let mut candidates: Vec<usize> = (0..adj.len()).collect();
    branch(adj, &mut candidates, 0, &mut best);
    best
}

fn greedy_independent_set(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    let mut alive = vec![true; n];
    let mut count = 0;
    loop {
        let pick = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (0..n).filter(|&u| alive[u] && adj[v][u]).count());
        match pick {
            None => break,
            Some(v) => {
                count += 1;
                alive[v] = false;
                for u in 0..n {
                    if adj[v][u] {
                        alive[u] = false;
                    }
                }
            }
        }
    }
    count
}

/// Solve the simple-integrability system |D²ε| = |ρ| over every wall off
/// B₀K. Returns one solution, or `None` when the system is inconsistent or
/// the complex is not ρ-uniform.
pub fn solve_simple_harnack(
    k: &PrimitiveComplex,
    frames: &Frames,
) -> Option<SignDistribution> {
    let chain = match rho_chain(k, frames) {
        Ok(c) => c,
        Err(_) => return None,
    };
    let unknowns = k.points().len();
    let mut rows = Vec::new();
    let mut rhs_bits = Vec::new();
    for wall in frames.walls() {
        let Some(value) = chain.values[wall.index] else {
            continue;
        };
        let mut row = F2Vector::zeros(unknowns);
        row.flip(wall.apices[0]);
        row.flip(wall.apices[1]);
        for (&v, &r) in wall.simplex.verts().iter().zip(&wall.rho) {
            if r {
                row.flip(v);
            }
        }
        rows.push(row);
        rhs_bits.push(value);
    }
    if rows.is_empty() {
        return Some(SignDistribution::constant(unknowns, false));
    }
    let matrix = F2Matrix::from_rows(rows).expect("uniform row lengths");
    let rhs = F2Vector::from_bits(&rhs_bits);
    let (solution, _) = matrix.solve(&rhs).expect("dimensions agree")?;
    Some(SignDistribution::from_fn(unknowns, |v| solution.get(v)))
}

/// The T-curve Laplacian (n = 2 only): the intersection matrix acting on
/// interior-vertex cochains.
pub fn laplacian(
    k: &PrimitiveComplex,
    frames: &Frames,
    eps: &SignDistribution,
) -> Result<F2Matrix, CalculusError> {
    if k.dim() != 2 {
        return Err(CalculusError::WrongDimension {
            expected: 2,
            actual: k.dim(),
        });
    }
    let interior = k.interior_vertices();
    let mut m = F2Matrix::zeros(interior.len(), interior.len());
    for (r, &beta) in interior.iter().enumerate() {
        for (c, &gamma) in interior.iter().enumerate() {
            if intersection_number(k, frames, eps, beta, &Simplex::vertex(gamma))? {
                m.set(r, c, true);
            }
        }
    }
    Ok(m)
}

/// Nullity of the Laplacian; the number of connected components of the
/// T-curve is one plus this number.
pub fn laplacian_nullity(
    k: &PrimitiveComplex,
    frames: &Frames,
    eps: &SignDistribution,
) -> Result<usize, CalculusError> {
    let m = laplacian(k, frames, eps)?;
    Ok(m.cols() - m.rank())
}
