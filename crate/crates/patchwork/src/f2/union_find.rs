use super::AlgebraError;

/// Disjoint-set forest with path compression and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            count: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> Result<usize, AlgebraError> {
        if x >= self.parent.len() {
            return Err(AlgebraError::IndexOutOfRange {
                index: x,
                size: self.parent.len(),
            });
        }
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        Ok(root)
    }

    pub fn union(&mut self, a: usize, b: usize) -> Result<bool, AlgebraError> {
        let mut ra = self.find(a)?;
        let mut rb = self.find(b)?;
        if ra == rb {
            return Ok(false);
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.count -= 1;
        Ok(true)
    }

    pub fn same(&mut self, a: usize, b: usize) -> Result<bool, AlgebraError> {
        Ok(self.find(a)? == self.find(b)?)
    }

    /// Number of disjoint sets.
    pub fn count(&self) -> usize {
        self.count
    }
}
