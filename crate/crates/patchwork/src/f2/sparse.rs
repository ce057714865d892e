//! Sparse column reduction over F₂ for boundary matrices of cell complexes.
//!
//! Columns are sorted lists of row indices. Reduction uses the standard
//! pivot-per-column sweep (pivot = largest row index), which stays fast on
//! the sparse boundary operators produced by the real-complex builders.

use std::collections::HashMap;

/// XOR of two sorted index lists.
fn xor_columns(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Rank of a sparse F₂ matrix given by columns.
pub fn sparse_rank(columns: &[Vec<u32>]) -> usize {
    let mut pivot_owner: HashMap<u32, Vec<u32>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut cur = col.clone();
        while let Some(&pivot) = cur.last() {
            match pivot_owner.get(&pivot) {
                Some(owner) => cur = xor_columns(&cur, owner),
                None => break,
            }
        }
        if let Some(&pivot) = cur.last() {
            pivot_owner.insert(pivot, cur);
            rank += 1;
        }
    }
    rank
}

/// Nullspace of a sparse F₂ matrix: each basis vector is returned as the
/// sorted list of column indices whose XOR is zero.
pub fn sparse_nullspace(columns: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut pivot_owner: HashMap<u32, (Vec<u32>, Vec<u32>)> = HashMap::new();
    let mut basis = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut cur = col.clone();
        let mut combo = vec![j as u32];
        while let Some(&pivot) = cur.last() {
            match pivot_owner.get(&pivot) {
                Some((owner, owner_combo)) => {
                    cur = xor_columns(&cur, owner);
                    combo = xor_columns(&combo, owner_combo);
                }
                None => break,
            }
        }
        match cur.last() {
            Some(&pivot) => {
                pivot_owner.insert(pivot, (cur, combo));
            }
            None => basis.push(combo),
        }
    }
    basis
}
