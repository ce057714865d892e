//! Small hand-checked complexes used throughout the test suites.

use super::{build_complex, Facet, LatticePoint, LatticePolytope, PrimitiveComplex, Simplex};

/// The unit triangle conv{(0,0),(1,0),(0,1)} as a single maximal simplex.
pub fn unit_triangle() -> PrimitiveComplex {
    let pts = vec![
        LatticePoint::new(vec![0, 0]),
        LatticePoint::new(vec![0, 1]),
        LatticePoint::new(vec![1, 0]),
    ];
    build_complex(
        pts,
        vec![Simplex::new(vec![0, 1, 2])],
        LatticePolytope::standard_simplex(2, 1),
    )
    .expect("unit triangle is valid")
}

/// The two-triangle quadrilateral fixture: points A=(0,0), B=(1,0),
/// C=(0,1), D=(1,−1), triangles ABC and ABD. The only interior wall is AB.
pub fn e1() -> PrimitiveComplex {
    let pts = vec![
        LatticePoint::new(vec![0, 0]),  // A
        LatticePoint::new(vec![0, 1]),  // C
        LatticePoint::new(vec![1, -1]), // D
        LatticePoint::new(vec![1, 0]),  // B
    ];
    let poly = LatticePolytope::new(
        2,
        pts.clone(),
        vec![
            Facet {
                normal: vec![1, 1],
                offset: 0,
            },
            Facet {
                normal: vec![-1, 0],
                offset: -1,
            },
            Facet {
                normal: vec![-1, -1],
                offset: -1,
            },
            Facet {
                normal: vec![1, 0],
                offset: 0,
            },
        ],
    );
    build_complex(
        pts,
        vec![Simplex::new(vec![0, 1, 3]), Simplex::new(vec![0, 2, 3])],
        poly,
    )
    .expect("fixture E1 is valid")
}

/// E1 with D replaced by D' = (0,−1); the wall AB then carries ρ ≡ 0.
/// The hull of {A,B,C,D'} alone is a singular triangle, so the pair of
/// triangles is embedded in the rectangle \[0,1\]×\[−1,1\], which is
/// non-singular; the wall data of AB is unaffected by the two filler
/// triangles.
pub fn e1_variant() -> PrimitiveComplex {
    let pts = vec![
        LatticePoint::new(vec![0, -1]), // D'
        LatticePoint::new(vec![0, 0]),  // A
        LatticePoint::new(vec![0, 1]),  // C
        LatticePoint::new(vec![1, -1]),
        LatticePoint::new(vec![1, 0]), // B
        LatticePoint::new(vec![1, 1]),
    ];
    let poly = LatticePolytope::new(
        2,
        vec![
            LatticePoint::new(vec![0, -1]),
            LatticePoint::new(vec![0, 1]),
            LatticePoint::new(vec![1, -1]),
            LatticePoint::new(vec![1, 1]),
        ],
        vec![
            Facet {
                normal: vec![1, 0],
                offset: 0,
            },
            Facet {
                normal: vec![-1, 0],
                offset: -1,
            },
            Facet {
                normal: vec![0, 1],
                offset: -1,
            },
            Facet {
                normal: vec![0, -1],
                offset: -1,
            },
        ],
    );
    build_complex(
        pts,
        vec![
            Simplex::new(vec![1, 2, 4]), // ABC
            Simplex::new(vec![0, 1, 4]), // ABD'
            Simplex::new(vec![2, 4, 5]),
            Simplex::new(vec![0, 3, 4]),
        ],
        poly,
    )
    .expect("fixture E1 variant is valid")
}
