//! JSON interchange formats: triangulations, sign distributions, and
//! cell-complex dumps.
//!
//! The triangulation format is
//! `{"dim": n, "points": [[ints]], "facets": [{"normal": [ints],
//! "offset": int}], "maximal_simplices": [[point indices]]}` with 0-based
//! indices into `points`.

use crate::calculus::{named_distribution, NamedDistribution, QuadraticCoeffs, SignDistribution};
use crate::lattice::{
    build_complex, ComplexError, Facet, LatticePoint, LatticePolytope, PrimitiveComplex, Simplex,
};
use crate::real::RealComplex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("invalid sign file: {0}")]
    InvalidSign(String),
}

#[derive(Serialize, Deserialize)]
struct TriangulationDoc {
    dim: usize,
    points: Vec<Vec<i64>>,
    facets: Vec<Facet>,
    maximal_simplices: Vec<Vec<usize>>,
}

/// Serialize a complex into the triangulation interchange format.
pub fn triangulation_to_json(k: &PrimitiveComplex) -> String {
    let doc = TriangulationDoc {
        dim: k.dim(),
        points: k.points().iter().map(|p| p.coords.clone()).collect(),
        facets: k.polytope().facets.clone(),
        maximal_simplices: k
            .maximal_simplices()
            .iter()
            .map(|s| s.verts().to_vec())
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

/// Parse and fully validate a triangulation document.
pub fn triangulation_from_json(text: &str) -> Result<PrimitiveComplex, IoError> {
    let doc: TriangulationDoc = serde_json::from_str(text)?;
    let points: Vec<LatticePoint> = doc.points.into_iter().map(LatticePoint::new).collect();
    // Polytope vertices: the points tight on at least dim facets.
    let vertices: Vec<LatticePoint> = points
        .iter()
        .filter(|p| {
            doc.facets.iter().filter(|f| f.is_tight(p)).count() >= doc.dim
        })
        .cloned()
        .collect();
    let polytope = LatticePolytope::new(doc.dim, vertices, doc.facets);
    let mut maximal = Vec::with_capacity(doc.maximal_simplices.len());
    for verts in doc.maximal_simplices {
        let s = Simplex::new(verts.clone());
        // Catch repeated indices before canonicalization hides them.
        if s.verts().len() != verts.len() {
            return Err(IoError::Complex(ComplexError::InvalidInput(format!(
                "simplex {verts:?} has repeated vertices"
            ))));
        }
        maximal.push(s);
    }
    Ok(build_complex(points, maximal, polytope)?)
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SignDoc {
    Values {
        values: Vec<u8>,
    },
    Formula {
        formula: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coeffs: Option<QuadraticCoeffs>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        value: Option<u8>,
    },
}

/// Serialize explicit sign values.
pub fn sign_to_json(eps: &SignDistribution) -> String {
    let doc = SignDoc::Values {
        values: eps.bits().iter().map(|&b| u8::from(b)).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

/// Parse a sign file against a complex: either explicit `values` aligned
/// to point indices or a named `formula`.
pub fn sign_from_json(text: &str, k: &PrimitiveComplex) -> Result<SignDistribution, IoError> {
    let doc: SignDoc = serde_json::from_str(text)?;
    match doc {
        SignDoc::Values { values } => {
            if values.len() != k.points().len() {
                return Err(IoError::InvalidSign(format!(
                    "{} values for {} points",
                    values.len(),
                    k.points().len()
                )));
            }
            if values.iter().any(|&v| v > 1) {
                return Err(IoError::InvalidSign("values must be 0 or 1".into()));
            }
            Ok(SignDistribution::new(
                values.into_iter().map(|v| v == 1).collect(),
            ))
        }
        SignDoc::Formula {
            formula,
            coeffs,
            seed,
            value,
        } => {
            let kind = match formula.as_str() {
                "harnack" => NamedDistribution::Harnack,
                "quadratic" => NamedDistribution::Quadratic(coeffs.ok_or_else(|| {
                    IoError::InvalidSign("quadratic formula requires coeffs".into())
                })?),
                "random" => NamedDistribution::Random(seed.ok_or_else(|| {
                    IoError::InvalidSign("random formula requires a seed".into())
                })?),
                "constant" => NamedDistribution::Constant(value.unwrap_or(0) == 1),
                other => {
                    return Err(IoError::InvalidSign(format!("unknown formula `{other}`")))
                }
            };
            Ok(named_distribution(&kind, k))
        }
    }
}

#[derive(Serialize)]
struct CellDoc {
    dim: usize,
    cube: [Vec<usize>; 2],
    arg: Vec<u8>,
}

#[derive(Serialize)]
struct CellComplexDoc {
    cells: Vec<CellDoc>,
    faces: Vec<[usize; 2]>,
}

/// Dump a real complex for external verification: cells with their cubes
/// and arguments, and the face relation as pairs of global cell indices.
pub fn cells_to_json(x: &RealComplex, k: &PrimitiveComplex) -> String {
    let n = x.ambient;
    let mut cells = Vec::with_capacity(x.cell_count());
    let mut offsets = Vec::with_capacity(x.cells.len());
    let mut acc = 0usize;
    for (d, list) in x.cells.iter().enumerate() {
        offsets.push(acc);
        for c in list {
            cells.push(CellDoc {
                dim: d,
                cube: [
                    k.simplex(c.lower).verts().to_vec(),
                    k.simplex(c.upper).verts().to_vec(),
                ],
                arg: (0..n).map(|i| ((c.arg >> i) & 1) as u8).collect(),
            });
        }
        acc += list.len();
    }
    let mut faces = Vec::new();
    for d in 1..x.cells.len() {
        for (i, fs) in x.faces[d].iter().enumerate() {
            for &f in fs {
                faces.push([offsets[d] + i, offsets[d - 1] + f as usize]);
            }
        }
    }
    serde_json::to_string(&CellComplexDoc { cells, faces }).expect("serializable")
}
