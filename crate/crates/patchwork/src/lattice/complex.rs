use super::{int_determinant, ComplexError, LatticePoint, LatticePolytope, Simplex};
use std::collections::{BTreeSet, HashMap, VecDeque};

/// Reference to a simplex of a `PrimitiveComplex` as (dimension, index).
pub type SimplexId = (usize, usize);

/// A cell [lower; upper] of the cubical subdivision, of dimension
/// `upper.dim() - lower.dim()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cube {
    pub lower: Simplex,
    pub upper: Simplex,
}

impl Cube {
    pub fn dim(&self) -> usize {
        self.upper.dim() - self.lower.dim()
    }
}

/// A primitive triangulation of a non-singular lattice polytope, with the
/// face lattice and boundary structure fully derived. Immutable after
/// construction; every query is pure.
pub struct PrimitiveComplex {
    polytope: LatticePolytope,
    points: Vec<LatticePoint>,
    n: usize,
    /// Simplices per dimension, lexicographically sorted by vertex indices.
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    /// For each (n−1)-simplex, the maximal simplices containing it (1 or 2).
    wall_cofaces: Vec<Vec<usize>>,
    /// ∂K flag, per dimension per simplex.
    boundary: Vec<Vec<bool>>,
    /// B₀K: every vertex on ∂K.
    b0: Vec<Vec<bool>>,
    /// B₁K: every vertex on ∂K or with its opposite face in ∂K.
    b1: Vec<Vec<bool>>,
    /// Unique interior vertex of a simplex of B₁K \ B₀K.
    apex: Vec<Vec<Option<usize>>>,
    vertex_maximal: Vec<Vec<usize>>,
    adjacency: Vec<Vec<usize>>,
    /// Facets of P tight on all vertices of the simplex, as a bit mask.
    tight: Vec<Vec<u64>>,
}

impl PrimitiveComplex {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn point(&self, v: usize) -> &LatticePoint {
        &self.points[v]
    }

    pub fn simplices(&self, dim: usize) -> &[Simplex] {
        &self.simplices[dim]
    }

    pub fn maximal_simplices(&self) -> &[Simplex] {
        &self.simplices[self.n]
    }

    pub fn simplex(&self, id: SimplexId) -> &Simplex {
        &self.simplices[id.0][id.1]
    }

    pub fn index_of(&self, s: &Simplex) -> Option<SimplexId> {
        let d = s.dim();
        if d >= self.index.len() {
            return None;
        }
        self.index[d].get(s).map(|&i| (d, i))
    }

    pub fn contains_simplex(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn is_boundary(&self, id: SimplexId) -> bool {
        self.boundary[id.0][id.1]
    }

    pub fn in_b0(&self, id: SimplexId) -> bool {
        self.b0[id.0][id.1]
    }

    pub fn in_b1(&self, id: SimplexId) -> bool {
        self.b1[id.0][id.1]
    }

    /// The unique interior vertex of a simplex of B₁K \ B₀K.
    pub fn apex(&self, id: SimplexId) -> Option<usize> {
        self.apex[id.0][id.1]
    }

    /// The enlarged boundaries as explicit simplex lists together with the
    /// apex map on B₁K \ B₀K.
    pub fn enlarged_boundaries(&self) -> (Vec<Simplex>, Vec<Simplex>, Vec<(Simplex, usize)>) {
        let mut b0 = Vec::new();
        let mut b1 = Vec::new();
        let mut ap = Vec::new();
        for (d, list) in self.simplices.iter().enumerate() {
            for (i, s) in list.iter().enumerate() {
                if self.b0[d][i] {
                    b0.push(s.clone());
                }
                if self.b1[d][i] {
                    b1.push(s.clone());
                }
                if let Some(v) = self.apex[d][i] {
                    ap.push((s.clone(), v));
                }
            }
        }
        (b0, b1, ap)
    }

    pub fn is_interior_vertex(&self, v: usize) -> bool {
        !self.boundary[0][self.index[0][&Simplex::vertex(v)]]
    }

    pub fn interior_vertices(&self) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&v| self.is_interior_vertex(v))
            .collect()
    }

    /// Maximal simplices containing the given (n−1)-simplex.
    pub fn wall_cofaces(&self, wall_idx: usize) -> &[usize] {
        &self.wall_cofaces[wall_idx]
    }

    /// Indices of interior (n−1)-simplices (two maximal cofaces).
    pub fn interior_walls(&self) -> Vec<usize> {
        (0..self.simplices[self.n - 1].len())
            .filter(|&i| self.wall_cofaces[i].len() == 2)
            .collect()
    }

    pub fn maximal_simplices_of_vertex(&self, v: usize) -> &[usize] {
        &self.vertex_maximal[v]
    }

    /// Facets of P tight on the whole simplex, as a bit mask.
    pub fn tight_facets_mask(&self, id: SimplexId) -> u64 {
        self.tight[id.0][id.1]
    }

    /// Closed star and link of a simplex: the star is every simplex having
    /// σ as a face together with all their faces; the link is the set of
    /// star members whose closure misses the closure of σ.
    pub fn star_link(&self, s: &Simplex) -> Result<(Vec<Simplex>, Vec<Simplex>), ComplexError> {
        if self.index_of(s).is_none() {
            return Err(ComplexError::UnknownSimplex(s.verts().to_vec()));
        }
        let mut star = BTreeSet::new();
        for &m in &self.vertex_maximal[s.verts()[0]] {
            let max = &self.simplices[self.n][m];
            if s.is_face_of(max) {
                for f in max.all_faces() {
                    if s.is_face_of(&f) {
                        star.insert(f);
                    }
                }
            }
        }
        // Close under faces.
        let mut closed: BTreeSet<Simplex> = BTreeSet::new();
        for t in &star {
            for f in t.all_faces() {
                closed.insert(f);
            }
        }
        let link: Vec<Simplex> = closed
            .iter()
            .filter(|t| t.verts().iter().all(|v| !s.contains(*v)))
            .cloned()
            .collect();
        Ok((closed.into_iter().collect(), link))
    }

    /// All cubical cells [σᵖ; σ^q] with q − p = k, each exactly once, in
    /// lexicographic (upper, lower) order.
    pub fn cubical_cells(&self, k: usize) -> Vec<Cube> {
        let mut out = Vec::new();
        for q in k..=self.n {
            for upper in &self.simplices[q] {
                let p = q - k;
                for lower in upper.all_faces() {
                    if lower.dim() == p {
                        out.push(Cube {
                            lower,
                            upper: upper.clone(),
                        });
                    }
                }
            }
        }
        out
    }

    /// Graph distance between two simplices: minimum 1-skeleton distance
    /// over pairs of their vertices.
    pub fn simplex_distance(&self, s: &Simplex, t: &Simplex) -> Result<usize, ComplexError> {
        for x in [s, t] {
            if self.index_of(x).is_none() {
                return Err(ComplexError::UnknownSimplex(x.verts().to_vec()));
            }
        }
        let mut dist = vec![usize::MAX; self.points.len()];
        let mut queue = VecDeque::new();
        for &v in s.verts() {
            dist[v] = 0;
            queue.push_back(v);
        }
        let targets: BTreeSet<usize> = t.verts().iter().copied().collect();
        if s.verts().iter().any(|v| targets.contains(v)) {
            return Ok(0);
        }
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    if targets.contains(&w) {
                        return Ok(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        Err(ComplexError::InvalidInput(
            "simplices lie in different graph components".into(),
        ))
    }
}

/// Build and fully validate a primitive triangulation.
pub fn build_complex(
    points: Vec<LatticePoint>,
    maximal_simplices: Vec<Simplex>,
    polytope: LatticePolytope,
) -> Result<PrimitiveComplex, ComplexError> {
    let n = polytope.dim;
    if polytope.facets.len() > 64 {
        return Err(ComplexError::InvalidInput(
            "more than 64 facet inequalities".into(),
        ));
    }
    if points.is_empty() {
        return Err(ComplexError::InvalidInput("no points".into()));
    }
    for p in &points {
        if p.dim() != n {
            return Err(ComplexError::InvalidInput(format!(
                "point {p:?} has wrong dimension"
            )));
        }
    }
    {
        let mut seen = points.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != points.len() {
            return Err(ComplexError::InvalidInput("duplicate points".into()));
        }
    }
    // Maximal simplices: valid indices, full dimension, no duplicates.
    let mut maximal = Vec::new();
    {
        let mut seen = BTreeSet::new();
        for s in maximal_simplices {
            if s.verts().iter().any(|&v| v >= points.len()) {
                return Err(ComplexError::InvalidInput(format!(
                    "simplex {:?} references an unknown point",
                    s.verts()
                )));
            }
            if s.dim() != n {
                return Err(ComplexError::InvalidInput(format!(
                    "simplex {:?} is not {n}-dimensional",
                    s.verts()
                )));
            }
            if !seen.insert(s.clone()) {
                return Err(ComplexError::InvalidInput(format!(
                    "duplicate maximal simplex {:?}",
                    s.verts()
                )));
            }
            maximal.push(s);
        }
    }
    if maximal.is_empty() {
        return Err(ComplexError::InvalidInput("no maximal simplices".into()));
    }
    maximal.sort();
    // Primitivity comes first: it is intrinsic to the simplices.
    for s in &maximal {
        let base = &points[s.verts()[0]];
        let rows: Vec<Vec<i64>> = s.verts()[1..]
            .iter()
            .map(|&v| points[v].sub(base))
            .collect();
        let det = int_determinant(&rows);
        if det.abs() != 1 {
            return Err(ComplexError::NonPrimitiveSimplex(s.verts().to_vec(), det));
        }
    }
    polytope.validate()?;
    for p in &points {
        if !polytope.contains(p) {
            return Err(ComplexError::InvalidInput(format!(
                "point {p:?} lies outside the polytope"
            )));
        }
    }
    // Face lattice.
    let mut face_sets: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); n + 1];
    for s in &maximal {
        for f in s.all_faces() {
            face_sets[f.dim()].insert(f);
        }
    }
    let simplices: Vec<Vec<Simplex>> = face_sets
        .into_iter()
        .map(|set| set.into_iter().collect())
        .collect();
    for v in 0..points.len() {
        if !simplices[0].contains(&Simplex::vertex(v)) {
            return Err(ComplexError::InvalidInput(format!(
                "point {v} is not a vertex of any maximal simplex"
            )));
        }
    }
    let index: Vec<HashMap<Simplex, usize>> = simplices
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .map(|(i, s)| (s.clone(), i))
                .collect()
        })
        .collect();
    // Wall cofaces and the pseudomanifold condition.
    let mut wall_cofaces = vec![Vec::new(); simplices[n - 1].len()];
    for (m, s) in maximal.iter().enumerate() {
        for facet in s.facets() {
            let w = index[n - 1][&facet];
            wall_cofaces[w].push(m);
        }
    }
    for (w, cof) in wall_cofaces.iter().enumerate() {
        if cof.is_empty() || cof.len() > 2 {
            return Err(ComplexError::DanglingFace(format!(
                "(n-1)-simplex {:?} has {} maximal cofaces",
                simplices[n - 1][w].verts(),
                cof.len()
            )));
        }
    }
    // Tight facet masks.
    let point_tight: Vec<u64> = points
        .iter()
        .map(|p| {
            let mut mask = 0u64;
            for (f, facet) in polytope.facets.iter().enumerate() {
                if facet.is_tight(p) {
                    mask |= 1 << f;
                }
            }
            mask
        })
        .collect();
    let tight: Vec<Vec<u64>> = simplices
        .iter()
        .map(|list| {
            list.iter()
                .map(|s| {
                    s.verts()
                        .iter()
                        .fold(u64::MAX, |acc, &v| acc & point_tight[v])
                })
                .collect()
        })
        .collect();
    // Boundary subcomplex: closure of the walls with exactly one coface.
    // Each such wall must lie in a facet of P, otherwise K does not tile P.
    let mut boundary: Vec<Vec<bool>> = simplices.iter().map(|l| vec![false; l.len()]).collect();
    for (w, cof) in wall_cofaces.iter().enumerate() {
        if cof.len() == 1 {
            if tight[n - 1][w] == 0 {
                return Err(ComplexError::VolumeMismatch(format!(
                    "boundary wall {:?} does not lie in a facet of the polytope",
                    simplices[n - 1][w].verts()
                )));
            }
            for f in simplices[n - 1][w].all_faces() {
                boundary[f.dim()][index[f.dim()][&f]] = true;
            }
        }
    }
    // Tiling: the number of primitive maximal simplices must equal the
    // normalized volume of P.
    let volume = polytope.normalized_volume();
    if maximal.len() as i64 != volume {
        return Err(ComplexError::VolumeMismatch(format!(
            "{} maximal simplices, normalized volume {}",
            maximal.len(),
            volume
        )));
    }
    // Enlarged boundaries B₀K ⊆ B₁K and the apex map.
    let vertex_on_boundary: Vec<bool> = (0..points.len())
        .map(|v| boundary[0][index[0][&Simplex::vertex(v)]])
        .collect();
    let mut b0: Vec<Vec<bool>> = simplices.iter().map(|l| vec![false; l.len()]).collect();
    let mut b1: Vec<Vec<bool>> = simplices.iter().map(|l| vec![false; l.len()]).collect();
    let mut apex: Vec<Vec<Option<usize>>> =
        simplices.iter().map(|l| vec![None; l.len()]).collect();
    for (d, list) in simplices.iter().enumerate() {
        for (i, s) in list.iter().enumerate() {
            let all_bd = s.verts().iter().all(|&v| vertex_on_boundary[v]);
            b0[d][i] = all_bd;
            let in_b1 = s.verts().iter().all(|&v| {
                if vertex_on_boundary[v] {
                    return true;
                }
                if s.verts().len() == 1 {
                    // The opposite face of a vertex in itself is empty.
                    return true;
                }
                let opp = s.opposite(v);
                boundary[opp.dim()][index[opp.dim()][&opp]]
            });
            b1[d][i] = in_b1;
            if in_b1 && !all_bd {
                let interior: Vec<usize> = s
                    .verts()
                    .iter()
                    .copied()
                    .filter(|&v| !vertex_on_boundary[v])
                    .collect();
                debug_assert_eq!(interior.len(), 1, "B1\\B0 simplex with several interior vertices");
                apex[d][i] = Some(interior[0]);
            }
        }
    }
    // Vertex-to-maximal incidence and the 1-skeleton.
    let mut vertex_maximal = vec![Vec::new(); points.len()];
    for (m, s) in maximal.iter().enumerate() {
        for &v in s.verts() {
            vertex_maximal[v].push(m);
        }
    }
    let mut adjacency = vec![BTreeSet::new(); points.len()];
    for e in &simplices[1] {
        let (a, b) = (e.verts()[0], e.verts()[1]);
        adjacency[a].insert(b);
        adjacency[b].insert(a);
    }
    let simplices_final = simplices;
    Ok(PrimitiveComplex {
        polytope,
        points,
        n,
        simplices: simplices_final,
        index,
        wall_cofaces,
        boundary,
        b0,
        b1,
        apex,
        vertex_maximal,
        adjacency: adjacency
            .into_iter()
            .map(|set| set.into_iter().collect())
            .collect(),
        tight,
    })
}

#[cfg(test)]
mod tests {
    use super::super::Facet;
    use super::*;
    use crate::lattice::fixtures;

    #[test]
    fn unit_triangle() {
        let k = fixtures::unit_triangle();
        assert_eq!(k.f_vector(), vec![3, 3, 1]);
        // Single-simplex case: ∂K is the closure of the three walls (every
        // simplex of dimension at most one) and B0K = B1K = K.
        for d in 0..=2 {
            for i in 0..k.simplices(d).len() {
                assert_eq!(k.is_boundary((d, i)), d <= 1);
                assert!(k.in_b0((d, i)));
                assert!(k.in_b1((d, i)));
                assert_eq!(k.apex((d, i)), None);
            }
        }
        // Link of the whole triangle is empty.
        let top = k.simplices(2)[0].clone();
        let (_, link) = k.star_link(&top).unwrap();
        assert!(link.is_empty());
    }

    #[test]
    fn fixture_e1() {
        let k = fixtures::e1();
        assert_eq!(k.f_vector(), vec![4, 5, 2]);
        // The unique interior wall is AB = {0, 1} in lexicographic indexing:
        // points sorted lex are A=(0,0), C=(0,1), B=(1,0), D=(1,-1)?
        // Lex order of coords: (0,0) < (0,1) < (1,-1) < (1,0).
        let pts = k.points();
        assert_eq!(pts[0].coords, vec![0, 0]);
        let interior: Vec<_> = k.interior_walls();
        assert_eq!(interior.len(), 1);
        let wall = &k.simplices(1)[interior[0]];
        let coords: Vec<_> = wall.verts().iter().map(|&v| pts[v].coords.clone()).collect();
        assert!(coords.contains(&vec![0, 0]) && coords.contains(&vec![1, 0]));
        // Star and link of AB.
        let (star, link) = k.star_link(wall).unwrap();
        assert_eq!(star.iter().filter(|s| s.dim() == 2).count(), 2);
        let link_coords: Vec<_> = link
            .iter()
            .map(|s| pts[s.verts()[0]].coords.clone())
            .collect();
        assert!(link_coords.contains(&vec![0, 1]) && link_coords.contains(&vec![1, -1]));
        assert_eq!(link.len(), 2);
    }

    #[test]
    fn non_primitive_rejected() {
        let pts = vec![
            LatticePoint::new(vec![0, 0]),
            LatticePoint::new(vec![2, 0]),
            LatticePoint::new(vec![0, 1]),
        ];
        let poly = LatticePolytope::new(
            2,
            pts.clone(),
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
                    normal: vec![-1, -2],
                    offset: -2,
                },
            ],
        );
        let res = build_complex(pts, vec![Simplex::new(vec![0, 1, 2])], poly);
        assert!(matches!(res, Err(ComplexError::NonPrimitiveSimplex(_, 2))));
    }

    #[test]
    fn dangling_face_rejected() {
        // Three triangles sharing the edge AB.
        let pts = vec![
            LatticePoint::new(vec![0, -1]), // E
            LatticePoint::new(vec![0, 0]),  // A
            LatticePoint::new(vec![0, 1]),  // C
            LatticePoint::new(vec![1, -1]), // D
            LatticePoint::new(vec![1, 0]),  // B
        ];
        let poly = LatticePolytope::new(
            2,
            vec![
                LatticePoint::new(vec![0, -1]),
                LatticePoint::new(vec![0, 1]),
                LatticePoint::new(vec![1, -1]),
                LatticePoint::new(vec![1, 0]),
            ],
            vec![
                Facet {
                    normal: vec![1, 0],
                    offset: 0,
                },
                Facet {
                    normal: vec![0, 1],
                    offset: -1,
                },
                Facet {
                    normal: vec![-1, 0],
                    offset: -1,
                },
                Facet {
                    normal: vec![-1, -1],
                    offset: -1,
                },
            ],
        );
        let tris = vec![
            Simplex::new(vec![1, 2, 4]),
            Simplex::new(vec![1, 3, 4]),
            Simplex::new(vec![0, 1, 4]),
        ];
        let res = build_complex(pts, tris, poly);
        assert!(matches!(res, Err(ComplexError::DanglingFace(_))));
    }

    #[test]
    fn missing_simplex_breaks_tiling() {
        // knudsen(2,2) with the middle chamber removed cannot tile P²₂
        // (removing that one orphans no vertex, so the tiling check is the
        // first to fire).
        let full = crate::families::knudsen(2, 2).unwrap();
        let points = full.points().to_vec();
        let corner = |v: usize| {
            let c = &full.point(v).coords;
            c == &vec![0, 0] || c == &vec![2, 0] || c == &vec![0, 2]
        };
        let middle = |s: &Simplex| !s.verts().iter().any(|&v| corner(v));
        let maximal: Vec<Simplex> = full
            .maximal_simplices()
            .iter()
            .filter(|s| !middle(s))
            .cloned()
            .collect();
        assert_eq!(maximal.len(), 3);
        let res = build_complex(points, maximal, full.polytope().clone());
        assert!(matches!(res, Err(ComplexError::VolumeMismatch(_))));
    }

    #[test]
    fn unknown_simplex_errors() {
        let k = fixtures::unit_triangle();
        let missing = Simplex::new(vec![0, 5]);
        assert!(matches!(
            k.star_link(&missing),
            Err(ComplexError::UnknownSimplex(_))
        ));
        assert!(matches!(
            k.simplex_distance(&missing, &Simplex::vertex(0)),
            Err(ComplexError::UnknownSimplex(_))
        ));
    }

    #[test]
    fn cubical_cell_counts() {
        let t1 = fixtures::unit_triangle();
        // Gap-2 pairs in a single triangle: the three (vertex, triangle).
        assert_eq!(t1.cubical_cells(2).len(), 3);
        // Gap 0: one per simplex.
        assert_eq!(
            t1.cubical_cells(0).len(),
            t1.f_vector().iter().sum::<usize>()
        );
        let e1 = fixtures::e1();
        // Independent pair enumeration oracle.
        let oracle = |k: &PrimitiveComplex, gap: usize| -> usize {
            let mut count = 0;
            for q in 0..=k.dim() {
                for s in k.simplices(q) {
                    for f in s.all_faces() {
                        if q - f.dim() == gap {
                            count += 1;
                        }
                    }
                }
            }
            count
        };
        assert_eq!(e1.cubical_cells(1).len(), oracle(&e1, 1));
        assert_eq!(e1.cubical_cells(1).len(), 16);
        assert_eq!(
            e1.cubical_cells(0).len(),
            e1.f_vector().iter().sum::<usize>()
        );
    }

    #[test]
    fn distances() {
        let e1 = fixtures::e1();
        let pts = e1.points();
        let idx = |c: &[i64]| pts.iter().position(|p| p.coords == c).unwrap();
        let c = Simplex::vertex(idx(&[0, 1]));
        let d = Simplex::vertex(idx(&[1, -1]));
        assert_eq!(e1.simplex_distance(&c, &c).unwrap(), 0);
        // C and D are joined through A or B: distance 2.
        assert_eq!(e1.simplex_distance(&c, &d).unwrap(), 2);
        // Simplices sharing a vertex are at distance 0.
        let ab = Simplex::new(vec![idx(&[0, 0]), idx(&[1, 0])]);
        let ac = Simplex::new(vec![idx(&[0, 0]), idx(&[0, 1])]);
        assert_eq!(e1.simplex_distance(&ab, &ac).unwrap(), 0);
    }

    #[test]
    fn boundary_matches_facet_tightness() {
        // Cross-check of the two boundary characterizations: the closure
        // of the single-coface walls against facet containment, for
        // simplices of dimension below n (the top simplices are tight on
        // no facet and interior by the wall reading).
        for k in [
            fixtures::unit_triangle(),
            fixtures::e1(),
            crate::families::knudsen(2, 3).unwrap(),
            crate::families::itenberg_viro(3, 2).unwrap(),
        ] {
            for d in 0..=k.dim() {
                for i in 0..k.simplices(d).len() {
                    if d < k.dim() {
                        assert_eq!(k.is_boundary((d, i)), k.tight_facets_mask((d, i)) != 0);
                    } else {
                        assert!(!k.is_boundary((d, i)));
                    }
                }
            }
        }
    }
}
