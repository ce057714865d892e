use super::{int_determinant, ComplexError};
use serde::{Deserialize, Serialize};

/// A point of the lattice t*(ℤ) ≅ ℤⁿ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint {
    pub coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn sub(&self, other: &LatticePoint) -> Vec<i64> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect()
    }

    /// Coordinates reduced mod 2 as a bit mask.
    pub fn mod2(&self) -> u32 {
        let mut mask = 0;
        for (i, &c) in self.coords.iter().enumerate() {
            if c.rem_euclid(2) == 1 {
                mask |= 1 << i;
            }
        }
        mask
    }
}

impl std::fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// One facet inequality ⟨normal, x⟩ ≥ offset with a primitive normal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn eval(&self, p: &LatticePoint) -> i64 {
        self.normal
            .iter()
            .zip(&p.coords)
            .map(|(a, b)| a * b)
            .sum::<i64>()
            - self.offset
    }

    pub fn is_tight(&self, p: &LatticePoint) -> bool {
        self.eval(p) == 0
    }

    /// Normal reduced mod 2 as a bit mask.
    pub fn normal_mod2(&self) -> u32 {
        let mut mask = 0;
        for (i, &c) in self.normal.iter().enumerate() {
            if c.rem_euclid(2) == 1 {
                mask |= 1 << i;
            }
        }
        mask
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A non-singular lattice polytope P = {x : ⟨normal, x⟩ ≥ offset ∀ facets},
/// given by its vertex set and facet inequalities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePolytope {
    pub dim: usize,
    pub vertices: Vec<LatticePoint>,
    pub facets: Vec<Facet>,
}

impl LatticePolytope {
    pub fn new(dim: usize, vertices: Vec<LatticePoint>, facets: Vec<Facet>) -> Self {
        Self {
            dim,
            vertices,
            facets,
        }
    }

    /// The dilated standard simplex Pⁿ_d = conv{0, d·e₁, …, d·eₙ}.
    pub fn standard_simplex(n: usize, d: i64) -> Self {
        assert!(n >= 1 && d >= 1);
        let mut vertices = vec![LatticePoint::new(vec![0; n])];
        for i in 0..n {
            let mut c = vec![0; n];
            c[i] = d;
            vertices.push(LatticePoint::new(c));
        }
        vertices.sort();
        let mut facets = Vec::new();
        for i in 0..n {
            let mut normal = vec![0; n];
            normal[i] = 1;
            facets.push(Facet { normal, offset: 0 });
        }
        facets.push(Facet {
            normal: vec![-1; n],
            offset: -d,
        });
        Self::new(n, vertices, facets)
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.facets.iter().all(|f| f.eval(p) >= 0)
    }

    pub fn strictly_contains(&self, p: &LatticePoint) -> bool {
        self.facets.iter().all(|f| f.eval(p) > 0)
    }

    /// Indices of facets tight on the given point.
    pub fn tight_facets(&self, p: &LatticePoint) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&i| self.facets[i].is_tight(p))
            .collect()
    }

    fn bounding_box(&self) -> Vec<(i64, i64)> {
        (0..self.dim)
            .map(|i| {
                let lo = self.vertices.iter().map(|v| v.coords[i]).min().unwrap();
                let hi = self.vertices.iter().map(|v| v.coords[i]).max().unwrap();
                (lo, hi)
            })
            .collect()
    }

    fn enumerate_box(bounds: &[(i64, i64)]) -> Vec<LatticePoint> {
        let mut out = vec![LatticePoint::new(Vec::new())];
        for &(lo, hi) in bounds {
            let mut next = Vec::new();
            for p in &out {
                for c in lo..=hi {
                    let mut coords = p.coords.clone();
                    coords.push(c);
                    next.push(LatticePoint::new(coords));
                }
            }
            out = next;
        }
        out
    }

    /// All lattice points of P, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let mut pts: Vec<LatticePoint> = Self::enumerate_box(&self.bounding_box())
            .into_iter()
            .filter(|p| self.contains(p))
            .collect();
        pts.sort();
        pts
    }

    /// Lattice points strictly inside P, in lexicographic order.
    pub fn interior_lattice_points(&self) -> Vec<LatticePoint> {
        let mut pts: Vec<LatticePoint> = Self::enumerate_box(&self.bounding_box())
            .into_iter()
            .filter(|p| self.strictly_contains(p))
            .collect();
        pts.sort();
        pts
    }

    /// Normalized volume n!·vol(P), computed from exact lattice-point counts
    /// of the dilates 0·P, …, n·P by finite differences. Independent of any
    /// triangulation, so it serves as the tiling oracle.
    pub fn normalized_volume(&self) -> i64 {
        let n = self.dim;
        let count = |k: i64| -> i64 {
            if k == 0 {
                return 1;
            }
            let bounds: Vec<(i64, i64)> = self.bounding_box().iter().map(|&(lo, hi)| (lo * k, hi * k)).collect();
            Self::enumerate_box(&bounds)
                .into_iter()
                .filter(|p| {
                    self.facets.iter().all(|f| {
                        f.normal
                            .iter()
                            .zip(&p.coords)
                            .map(|(a, b)| a * b)
                            .sum::<i64>()
                            >= k * f.offset
                    })
                })
                .count() as i64
        };
        let mut acc = 0i64;
        let mut binom = 1i64;
        for k in 0..=n as i64 {
            let sign = if (n as i64 - k) % 2 == 0 { 1 } else { -1 };
            acc += sign * binom * count(k);
            binom = binom * (n as i64 - k) / (k + 1);
        }
        acc
    }

    /// Check the whole polytope contract: vertices inside with at least n
    /// tight facets, primitive facet normals, simplicity, and unimodular
    /// edge cones at every vertex.
    pub fn validate(&self) -> Result<(), ComplexError> {
        if self.dim == 0 || self.vertices.is_empty() || self.facets.is_empty() {
            return Err(ComplexError::InvalidInput(
                "empty polytope description".into(),
            ));
        }
        for v in &self.vertices {
            if v.dim() != self.dim {
                return Err(ComplexError::InvalidInput(format!(
                    "vertex {v:?} has wrong dimension"
                )));
            }
        }
        for f in &self.facets {
            if f.normal.len() != self.dim {
                return Err(ComplexError::InvalidInput(
                    "facet normal has wrong dimension".into(),
                ));
            }
            let g = f.normal.iter().fold(0, |acc, &x| gcd(acc, x));
            if g != 1 {
                return Err(ComplexError::InvalidInput(format!(
                    "facet normal {:?} is not primitive",
                    f.normal
                )));
            }
        }
        for v in &self.vertices {
            if !self.contains(v) {
                return Err(ComplexError::InvalidInput(format!(
                    "vertex {v:?} violates a facet inequality"
                )));
            }
            if self.tight_facets(v).len() < self.dim {
                return Err(ComplexError::SingularPolytope(v.coords.clone()));
            }
        }
        // Simplicity and unimodularity of the edge cone at each vertex.
        for v in &self.vertices {
            let tight = self.tight_facets(v);
            if tight.len() != self.dim {
                // More than n tight facets at a vertex: not simple.
                return Err(ComplexError::SingularPolytope(v.coords.clone()));
            }
            let mut directions = Vec::new();
            for drop in &tight {
                // The edge at v along all tight facets except `drop`.
                let others: Vec<usize> = tight.iter().copied().filter(|f| f != drop).collect();
                let mut endpoint = None;
                for w in &self.vertices {
                    if w == v {
                        continue;
                    }
                    if others.iter().all(|&f| self.facets[f].is_tight(w)) {
                        // Of all vertices on the edge's supporting face keep
                        // the nearest; a 1-face has exactly two vertices.
                        endpoint = match endpoint {
                            None => Some(w),
                            Some(prev) => {
                                return Err(ComplexError::InvalidInput(format!(
                                    "vertices {prev:?} and {w:?} both follow {v:?} along an edge; polytope data is inconsistent"
                                )));
                            }
                        };
                    }
                }
                let w = endpoint.ok_or_else(|| ComplexError::SingularPolytope(v.coords.clone()))?;
                let diff = w.sub(v);
                let g = diff.iter().fold(0, |acc, &x| gcd(acc, x));
                directions.push(diff.iter().map(|&x| x / g).collect::<Vec<i64>>());
            }
            let det = int_determinant(&directions);
            if det.abs() != 1 {
                return Err(ComplexError::SingularPolytope(v.coords.clone()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_simplex_is_valid() {
        for n in 1..=3 {
            for d in 1..=4 {
                let p = LatticePolytope::standard_simplex(n, d);
                p.validate().unwrap();
                assert_eq!(p.normalized_volume(), (d as i64).pow(n as u32));
            }
        }
    }

    #[test]
    fn lattice_point_counts() {
        // f₀(Pⁿ_d) = C(d+n, n), by direct enumeration.
        let binom = |n: u64, k: u64| -> u64 {
            let mut acc = 1;
            for i in 0..k {
                acc = acc * (n - i) / (i + 1);
            }
            acc
        };
        for n in 1..=3usize {
            for d in 1..=4i64 {
                let p = LatticePolytope::standard_simplex(n, d);
                assert_eq!(
                    p.lattice_points().len() as u64,
                    binom(d as u64 + n as u64, n as u64)
                );
            }
        }
    }

    #[test]
    fn interior_points() {
        let p25 = LatticePolytope::standard_simplex(2, 5);
        assert_eq!(p25.interior_lattice_points().len(), 6);
        let p34 = LatticePolytope::standard_simplex(3, 4);
        let interior = p34.interior_lattice_points();
        assert_eq!(interior, vec![LatticePoint::new(vec![1, 1, 1])]);
    }

    #[test]
    fn singular_triangle_rejected() {
        // conv{(0,0),(1,0),(0,2)} is simple but singular at (0,2) and (0,0)?
        // At (0,0): edges (1,0),(0,1) after primitivization -> fine; at
        // (0,2): edges (0,-1) and primitive (1,-2): det = ±1. Actually the
        // triangle (0,0),(1,0),(0,2) is singular at (1,0): edges (-1,0) and
        // (-1,2), det = -2.
        let p = LatticePolytope::new(
            2,
            vec![
                LatticePoint::new(vec![0, 0]),
                LatticePoint::new(vec![1, 0]),
                LatticePoint::new(vec![0, 2]),
            ],
            vec![
                Facet {
                    normal: vec![1, 0],
                    offset: 0,
                },
                Facet {
                    normal: vec![0, 1],
                    offset: 0,
                },
                Facet {
                    normal: vec![-2, -1],
                    offset: -2,
                },
            ],
        );
        assert!(matches!(
            p.validate(),
            Err(ComplexError::SingularPolytope(_))
        ));
    }
}
