//! A walkthrough of the discrete calculus on the two-triangle fixture:
//! dual vectors, the wall jump ρ, derivatives, and twists.
//!
//! ```bash
//! cargo run --example discrete_calculus
//! ```

use patchwork::calculus::{
    first_derivative, second_derivative, twist, Frames, SignDistribution,
};
use patchwork::lattice::{fixtures, Simplex};

fn main() {
    // Points A=(0,0), B=(1,0), C=(0,1), D=(1,-1); triangles ABC and ABD.
    let k = fixtures::e1();
    let frames = Frames::new(&k);
    let at = |c: [i64; 2]| {
        k.points()
            .iter()
            .position(|p| p.coords == c.to_vec())
            .unwrap()
    };
    let (a, b) = (at([0, 0]), at([1, 0]));

    // The dual vectors of each maximal simplex form the mod-2 dual basis
    // of its edge directions.
    for (m, s) in k.maximal_simplices().iter().enumerate() {
        print!("simplex {:?}: dual vectors", s.verts());
        for &v in s.verts() {
            print!(" {v}:{:02b}", frames.dual_vector(&k, m, v).unwrap());
        }
        println!();
    }

    // The interior wall AB: its normal generator and jump bits.
    let wall = frames.wall_of(&k, &Simplex::new(vec![a, b])).unwrap();
    println!(
        "wall AB: normal {:02b}, rho(A) = {}, rho(B) = {}",
        wall.normal,
        u8::from(wall.rho_at(a).unwrap()),
        u8::from(wall.rho_at(b).unwrap())
    );

    // ε = xy mod 2 has second derivative 1 on AB, so it is untwisted in
    // every direction with a jump and twisted along the others.
    let eps = SignDistribution::from_fn(k.points().len(), |v| {
        let c = &k.point(v).coords;
        (c[0] * c[1]).rem_euclid(2) == 1
    });
    for (m, s) in k.maximal_simplices().iter().enumerate() {
        println!(
            "D(xy) on {:?} = {:02b}",
            s.verts(),
            first_derivative(&k, &frames, &eps, m)
        );
    }
    println!(
        "|D²(xy)| on AB = {}",
        u8::from(second_derivative(&eps, wall))
    );
    for v in [a, b] {
        println!(
            "twist along AB towards vertex {v}: {}",
            u8::from(twist(&k, &frames, &eps, &Simplex::new(vec![a, b]), v).unwrap())
        );
    }
}
