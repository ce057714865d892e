//! Build the triangulation families and inspect their combinatorics.
//!
//! ```bash
//! cargo run --example families
//! ```

use patchwork::families::{itenberg_viro, knudsen, restrict_to_face, viro_family};

fn main() {
    // Knudsen triangulations: chambers of the interval-sum hyperplane
    // arrangement. A triangulation of Pⁿ_d always has dⁿ maximal simplices.
    for (n, d) in [(2usize, 3i64), (2, 5), (3, 3)] {
        let k = knudsen(n, d).expect("construction is total");
        println!(
            "knudsen({n},{d}): f-vector {:?}, {} interior lattice points",
            k.f_vector(),
            k.polytope().interior_lattice_points().len()
        );
    }

    // The recursive prism-join families.
    let iv = itenberg_viro(3, 4).expect("valid");
    println!(
        "itenberg-viro(3,4): {} tetrahedra, f-vector {:?}",
        iv.maximal_simplices().len(),
        iv.f_vector()
    );
    let v = viro_family(3, 4).expect("valid");
    println!("viro(3,4): {} tetrahedra", v.maximal_simplices().len());

    // Face restrictions: the restriction of IV(3,4) to a coordinate face
    // is IV(2,4) again.
    let face = restrict_to_face(&iv, &[0, 1, 2]).expect("valid face");
    let iv24 = itenberg_viro(2, 4).unwrap();
    println!(
        "restriction of IV(3,4) to {{0,1,2}} equals IV(2,4): {}",
        face.points() == iv24.points() && face.maximal_simplices() == iv24.maximal_simplices()
    );

    // Serialization round trip through the JSON interchange format.
    let json = patchwork::io::triangulation_to_json(&knudsen(2, 2).unwrap());
    let back = patchwork::io::triangulation_from_json(&json).unwrap();
    println!(
        "knudsen(2,2) JSON round trip: {} maximal simplices",
        back.maximal_simplices().len()
    );
}
