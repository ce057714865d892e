use super::{AlgebraError, Bits, F2Vector, MAX_AMBIENT_DIM};

/// Binomial coefficient table up to the ambient-dimension cap.
fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc as usize
}

/// Colexicographic rank of a sorted k-subset, via the combinatorial number
/// system: rank({c₁<…<c_k}) = Σ C(c_i, i).
fn colex_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binom(c, i + 1))
        .sum()
}

/// Inverse of `colex_rank` for degree-k subsets of {0,…,n−1}.
fn colex_unrank(mut rank: usize, n: usize, k: usize) -> Vec<usize> {
    let mut subset = vec![0; k];
    let mut c = n;
    for i in (1..=k).rev() {
        while binom(c, i) > rank {
            if c == 0 {
                break;
            }
            c -= 1;
        }
        subset[i - 1] = c;
        rank -= binom(c, i);
    }
    subset
}

/// An element of ⋀ᵏ F₂ⁿ with coefficients indexed by the sorted k-subsets
/// of coordinates in colexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WedgeVector {
    ambient: usize,
    degree: usize,
    coeffs: F2Vector,
}

impl WedgeVector {
    pub fn zero(ambient: usize, degree: usize) -> Self {
        assert!(ambient <= MAX_AMBIENT_DIM, "ambient dimension above cap");
        Self {
            ambient,
            degree,
            coeffs: F2Vector::zeros(binom(ambient, degree)),
        }
    }

    /// The scalar 1 in degree 0.
    pub fn one(ambient: usize) -> Self {
        let mut w = Self::zero(ambient, 0);
        w.coeffs.set(0, true);
        w
    }

    /// Degree-1 vector from a coordinate mask.
    pub fn from_mask(ambient: usize, mask: Bits) -> Self {
        let mut w = Self::zero(ambient, 1);
        for i in 0..ambient {
            if (mask >> i) & 1 == 1 {
                w.coeffs.set(i, true);
            }
        }
        w
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn coefficient(&self, subset: &[usize]) -> bool {
        debug_assert_eq!(subset.len(), self.degree);
        self.coeffs.get(colex_rank(subset))
    }

    pub fn set_coefficient(&mut self, subset: &[usize], value: bool) {
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        self.coeffs.set(colex_rank(subset), value);
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.ambient, other.ambient);
        assert_eq!(self.degree, other.degree);
        self.coeffs.xor_assign(&other.coeffs);
    }

    /// Supporting subsets with coefficient 1.
    pub fn support(&self) -> Vec<Vec<usize>> {
        self.coeffs
            .iter_ones()
            .map(|r| colex_unrank(r, self.ambient, self.degree))
            .collect()
    }

    /// Shuffle-expansion product; no signs over F₂.
    pub fn wedge(&self, other: &Self) -> Result<Self, AlgebraError> {
        assert_eq!(self.ambient, other.ambient);
        let degree = self.degree + other.degree;
        if degree > self.ambient {
            return Err(AlgebraError::DegreeOverflow {
                degree,
                ambient: self.ambient,
            });
        }
        let mut out = Self::zero(self.ambient, degree);
        for s in self.support() {
            let s_mask: Bits = s.iter().map(|&i| 1 << i).sum();
            for t in other.support() {
                let t_mask: Bits = t.iter().map(|&i| 1 << i).sum();
                if s_mask & t_mask != 0 {
                    continue;
                }
                let mut union: Vec<usize> = s.iter().chain(t.iter()).copied().collect();
                union.sort_unstable();
                out.coeffs.flip(colex_rank(&union));
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for WedgeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .support()
            .iter()
            .map(|s| {
                let names: Vec<String> = s.iter().map(|i| format!("e{}", i + 1)).collect();
                names.join("^")
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Determinant mod 2 of the k×k minor of `rows` on the columns `subset`.
fn minor_det(rows: &[Bits], subset: &[usize]) -> bool {
    let k = subset.len();
    let mut mini: Vec<Bits> = rows
        .iter()
        .map(|&r| {
            let mut m: Bits = 0;
            for (out_col, &c) in subset.iter().enumerate() {
                if (r >> c) & 1 == 1 {
                    m |= 1 << out_col;
                }
            }
            m
        })
        .collect();
    // Gaussian elimination on k-bit masks.
    let mut rank = 0;
    for c in 0..k {
        if let Some(p) = (rank..k).find(|&r| (mini[r] >> c) & 1 == 1) {
            mini.swap(rank, p);
            for r in 0..k {
                if r != rank && (mini[r] >> c) & 1 == 1 {
                    mini[r] ^= mini[rank];
                }
            }
            rank += 1;
        }
    }
    rank == k
}

/// Plücker coordinates of the row span: coefficient on a k-subset S of
/// columns is the mod-2 determinant of the minor on S.
pub fn pluecker(rows: &[Bits], ambient: usize) -> WedgeVector {
    let k = rows.len();
    let mut out = WedgeVector::zero(ambient, k);
    let mut subset: Vec<usize> = (0..k).collect();
    if k == 0 {
        return WedgeVector::one(ambient);
    }
    if k > ambient {
        return out;
    }
    loop {
        if minor_det(rows, &subset) {
            out.set_coefficient(&subset, true);
        }
        // Next k-subset of {0..ambient-1} in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if subset[i] < ambient - (k - i) {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The canonical generator \[W\] = w₁ ∧ … ∧ w_k of ⋀ᵏW for a subspace W
/// given by an independent basis. Over F₂ the result does not depend on the
/// basis (any change of basis has determinant 1).
pub fn line_generator(basis: &[Bits], ambient: usize) -> Result<WedgeVector, AlgebraError> {
    // Independence check.
    let mut rows: Vec<Bits> = basis.to_vec();
    let mut rank = 0;
    for c in 0..ambient {
        if let Some(p) = (rank..rows.len()).find(|&r| (rows[r] >> c) & 1 == 1) {
            rows.swap(rank, p);
            for r in 0..rows.len() {
                if r != rank && (rows[r] >> c) & 1 == 1 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
    }
    if rank != basis.len() {
        return Err(AlgebraError::DependentBasis);
    }
    let mut acc = WedgeVector::one(ambient);
    for &v in basis {
        acc = acc.wedge(&WedgeVector::from_mask(ambient, v))?;
    }
    Ok(acc)
}
