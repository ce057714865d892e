use super::{AlgebraError, F2Vector};

/// A dense matrix over F₂ stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<F2Vector>) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, F2Vector::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(AlgebraError::DimensionMismatch(
                "rows of unequal length".into(),
            ));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &F2Vector {
        &self.data[r]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].iter_ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn mul_vector(&self, v: &F2Vector) -> Result<F2Vector, AlgebraError> {
        if v.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = F2Vector::zeros(self.rows);
        for r in 0..self.rows {
            out.set(r, self.data[r].dot(v));
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F2Vector::is_zero)
    }

    /// Row echelon form; returns the pivot column of each echelon row.
    fn echelonize(rows: &mut [F2Vector]) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        let cols = rows.first().map_or(0, F2Vector::len);
        for c in 0..cols {
            if let Some(p) = (next..rows.len()).find(|&r| rows[r].get(c)) {
                rows.swap(next, p);
                let pivot_row = rows[next].clone();
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != next && row.get(c) {
                        row.xor_assign(&pivot_row);
                    }
                }
                pivots.push(c);
                next += 1;
                if next == rows.len() {
                    break;
                }
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        Self::echelonize(&mut rows).len()
    }

    /// Basis of {x : Mx = 0}, echelonized over the free columns.
    pub fn nullspace(&self) -> Vec<F2Vector> {
        let mut rows = self.data.clone();
        let pivots = Self::echelonize(&mut rows);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = F2Vector::zeros(self.cols);
            v.set(free, true);
            for (r, &pc) in pivots.iter().enumerate() {
                if rows[r].get(free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solve Mx = b. Returns a particular solution together with a basis of
    /// the nullspace, or `None` when b is outside the column space.
    pub fn solve(&self, b: &F2Vector) -> Result<Option<(F2Vector, Vec<F2Vector>)>, AlgebraError> {
        if b.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "matrix has {} rows, rhs has length {}",
                self.rows,
                b.len()
            )));
        }
        // Augment each row with the rhs bit and eliminate.
        let mut rows: Vec<F2Vector> = (0..self.rows)
            .map(|r| {
                let mut row = F2Vector::zeros(self.cols + 1);
                for c in self.data[r].iter_ones() {
                    row.set(c, true);
                }
                row.set(self.cols, b.get(r));
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if let Some(p) = (next..rows.len()).find(|&r| rows[r].get(c)) {
                rows.swap(next, p);
                let pivot_row = rows[next].clone();
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != next && row.get(c) {
                        row.xor_assign(&pivot_row);
                    }
                }
                pivots.push(c);
                next += 1;
                if next == rows.len() {
                    break;
                }
            }
        }
        // Inconsistent iff some zero row has rhs bit 1.
        for row in rows.iter().skip(pivots.len()) {
            if row.get(self.cols) {
                return Ok(None);
            }
        }
        let mut x = F2Vector::zeros(self.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            if rows[r].get(self.cols) {
                x.set(pc, true);
            }
        }
        Ok(Some((x, self.nullspace())))
    }
}

impl std::fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.data[r])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank() {
        let m = F2Matrix::identity(3);
        assert_eq!(m.rank(), 3);
        assert!(m.nullspace().is_empty());
    }

    #[test]
    fn zero_matrix() {
        let m = F2Matrix::zeros(2, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.nullspace().len(), 3);
    }

    #[test]
    fn solve_singular() {
        // M = [[1,1],[1,1]], b = (1,1): solvable, nullity 1.
        let mut m = F2Matrix::zeros(2, 2);
        for r in 0..2 {
            m.set(r, 0, true);
            m.set(r, 1, true);
        }
        let b = F2Vector::from_bits(&[true, true]);
        let (x, null) = m.solve(&b).unwrap().expect("solvable");
        assert_eq!(m.mul_vector(&x).unwrap(), b);
        assert_eq!(null.len(), 1);
        // Exhaustive check over all 4 candidate vectors.
        let solutions: Vec<_> = (0..4u8)
            .map(|k| F2Vector::from_bits(&[k & 1 == 1, k & 2 == 2]))
            .filter(|v| m.mul_vector(v).unwrap() == b)
            .collect();
        assert_eq!(solutions.len(), 2);
        // Inconsistent rhs.
        let bad = F2Vector::from_bits(&[true, false]);
        assert!(m.solve(&bad).unwrap().is_none());
    }
}
