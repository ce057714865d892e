//! Property tests of the F₂ linear-algebra kernels.

use patchwork::f2::{line_generator, pluecker, F2Matrix, F2Vector};
use proptest::prelude::*;

fn matrix_strategy(max_dim: usize) -> impl Strategy<Value = F2Matrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r).prop_map(
            move |rows| {
                let rows = rows
                    .into_iter()
                    .map(|bits| F2Vector::from_bits(&bits))
                    .collect();
                F2Matrix::from_rows(rows).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn rank_equals_transpose_rank(m in matrix_strategy(64)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in matrix_strategy(48)) {
        prop_assert_eq!(m.rank() + m.nullspace().len(), m.cols());
        for v in m.nullspace() {
            prop_assert!(m.mul_vector(&v).unwrap().is_zero());
        }
    }

    #[test]
    fn solve_is_correct(m in matrix_strategy(32), seed in any::<u64>()) {
        // Build a guaranteed-solvable rhs from a random x, then check the
        // returned solution and the invariance under nullspace shifts.
        let mut state = seed;
        let x = F2Vector::from_bits(
            &(0..m.cols())
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    (state >> 62) & 1 == 1
                })
                .collect::<Vec<_>>(),
        );
        let b = m.mul_vector(&x).unwrap();
        let (sol, null) = m.solve(&b).unwrap().expect("rhs is in the column space");
        prop_assert_eq!(m.mul_vector(&sol).unwrap(), b.clone());
        for nv in null.iter().take(4) {
            let mut shifted = sol.clone();
            shifted.xor_assign(nv);
            prop_assert_eq!(m.mul_vector(&shifted).unwrap(), b.clone());
        }
    }

    #[test]
    fn pluecker_detects_independence(
        rows in proptest::collection::vec(1u32..(1 << 6), 1..=4)
    ) {
        let ambient = 6;
        let w = pluecker(&rows, ambient);
        let matrix = F2Matrix::from_rows(
            rows.iter()
                .map(|&r| F2Vector::from_bits(&(0..ambient).map(|i| (r >> i) & 1 == 1).collect::<Vec<_>>()))
                .collect(),
        )
        .unwrap();
        let independent = matrix.rank() == rows.len();
        prop_assert_eq!(!w.is_zero(), independent);
        if independent {
            // The iterated-wedge route agrees, and so does the
            // basis-independent generator.
            prop_assert_eq!(w.clone(), line_generator(&rows, ambient).unwrap());
        }
    }
}
