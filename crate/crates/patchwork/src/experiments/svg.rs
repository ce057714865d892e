//! Deterministic SVG rendering of planar patchworks: the four reflected
//! copies of the triangulation with the dual segments of the
//! T-hypersurface drawn on top.
//!
//! All coordinates are scaled by six so every drawn point (vertices, edge
//! midpoints, triangle barycenters) is an integer; rendering the same
//! input twice yields byte-identical output.

use super::ExperimentError;
use crate::calculus::SignDistribution;
use crate::lattice::PrimitiveComplex;
use crate::real::build_tx;
use std::fmt::Write as _;

const SCALE: i64 = 6;

fn reflect(coords: [i64; 2], quadrant: u32) -> [i64; 2] {
    [
        if quadrant & 1 == 1 { -coords[0] } else { coords[0] },
        if quadrant & 2 == 2 { -coords[1] } else { coords[1] },
    ]
}

/// Render the patchwork of a two-dimensional (K, ε) to an SVG string.
pub fn render_svg(
    k: &PrimitiveComplex,
    eps: &SignDistribution,
) -> Result<String, ExperimentError> {
    if k.dim() != 2 {
        return Err(ExperimentError::WrongDimension {
            expected: 2,
            actual: k.dim(),
        });
    }
    let tx = build_tx(k, eps)?;
    // Bounds over all four reflections.
    let mut min = [i64::MAX; 2];
    let mut max = [i64::MIN; 2];
    for p in k.points() {
        for q in 0..4 {
            let r = reflect([p.coords[0] * SCALE, p.coords[1] * SCALE], q);
            for i in 0..2 {
                min[i] = min[i].min(r[i]);
                max[i] = max[i].max(r[i]);
            }
        }
    }
    let margin = SCALE;
    let view = (
        min[0] - margin,
        min[1] - margin,
        (max[0] - min[0]) + 2 * margin,
        (max[1] - min[1]) + 2 * margin,
    );
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        view.0, view.1, view.2, view.3
    )
    .unwrap();
    // Flip the y axis so the first quadrant is drawn upper right.
    writeln!(out, r#"<g transform="scale(1,-1)">"#).unwrap();
    // Background: the triangulation edges in all four quadrants.
    writeln!(
        out,
        r##"<g stroke="#bbbbbb" stroke-width="0.4" fill="none">"##
    )
    .unwrap();
    for (i, e) in k.simplices(1).iter().enumerate() {
        let a = &k.point(e.verts()[0]).coords;
        let b = &k.point(e.verts()[1]).coords;
        for q in 0..4 {
            let pa = reflect([a[0] * SCALE, a[1] * SCALE], q);
            let pb = reflect([b[0] * SCALE, b[1] * SCALE], q);
            writeln!(
                out,
                r#"<path id="k{i}q{q}" d="M {} {} L {} {}"/>"#,
                pa[0], pa[1], pb[0], pb[1]
            )
            .unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    // The hypersurface: one segment per 1-cell, from the midpoint of the
    // lower edge to the barycenter of the upper triangle, reflected into
    // the quadrant of its argument.
    writeln!(
        out,
        r##"<g stroke="#000000" stroke-width="1" fill="none" stroke-linecap="round">"##
    )
    .unwrap();
    for cell in &tx.cells[1] {
        let lower = k.simplex(cell.lower);
        let upper = k.simplex(cell.upper);
        let (a, b) = (
            &k.point(lower.verts()[0]).coords,
            &k.point(lower.verts()[1]).coords,
        );
        let mid = [(a[0] + b[0]) * SCALE / 2, (a[1] + b[1]) * SCALE / 2];
        let mut bary = [0i64; 2];
        for &v in upper.verts() {
            bary[0] += k.point(v).coords[0];
            bary[1] += k.point(v).coords[1];
        }
        let bary = [bary[0] * SCALE / 3, bary[1] * SCALE / 3];
        let pm = reflect(mid, cell.arg);
        let pb = reflect(bary, cell.arg);
        writeln!(
            out,
            r#"<path id="x{}-{}q{}" d="M {} {} L {} {}"/>"#,
            cell.lower.1, cell.upper.1, cell.arg, pm[0], pm[1], pb[0], pb[1]
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
