use std::fmt;

/// A dense bit vector over F₂, packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Single basis vector e_i of the given length.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the scalar product ⟨self, other⟩.
    pub fn dot(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (w, o) in self.words.iter().zip(&other.words) {
            acc ^= w & o;
        }
        acc.count_ones() % 2 == 1
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_xor() {
        let mut v = F2Vector::zeros(70);
        v.set(0, true);
        v.set(69, true);
        assert!(v.get(0) && v.get(69) && !v.get(35));
        let w = F2Vector::unit(70, 69);
        v.xor_assign(&w);
        assert!(v.get(0) && !v.get(69));
        assert_eq!(v.count_ones(), 1);
        assert_eq!(v.first_one(), Some(0));
    }

    #[test]
    fn dot_parity() {
        let a = F2Vector::from_bits(&[true, true, false]);
        let b = F2Vector::from_bits(&[true, true, true]);
        assert!(!a.dot(&b));
        let c = F2Vector::from_bits(&[true, false, true]);
        assert!(a.dot(&c));
    }
}
