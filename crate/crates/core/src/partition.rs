//! Set partitions of `0..n` and their lattice operations.
//!
//! A [`Partition`] is always canonical: cells are sorted internally and
//! ordered by their smallest member, so two partitions are equal exactly
//! when their assignment arrays are.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    assignment: Vec<usize>,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonical partition with `label[u] == label[v]` iff `u` and `v`
    /// share a cell. Labels may be arbitrary integers.
    pub fn from_labels<L: Eq + std::hash::Hash + Copy>(labels: &[L]) -> Self {
        let mut relabel: HashMap<L, usize> = HashMap::new();
        let mut assignment = Vec::with_capacity(labels.len());
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for (v, l) in labels.iter().enumerate() {
            let next = relabel.len();
            let c = *relabel.entry(*l).or_insert(next);
            if c == cells.len() {
                cells.push(Vec::new());
            }
            cells[c].push(v);
            assignment.push(c);
        }
        Partition { assignment, cells }
    }

    /// Validates and canonicalizes a list of cells over `0..n`.
    pub fn from_cells(n: usize, cells: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (c, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::EmptyCell);
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, n });
                }
                if labels[v] != usize::MAX {
                    return Err(Error::Overlap(v + 1));
                }
                labels[v] = c;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Uncovered(v + 1));
        }
        Ok(Partition::from_labels(&labels))
    }

    /// Every vertex in its own cell.
    pub fn discrete(n: usize) -> Self {
        Partition {
            assignment: (0..n).collect(),
            cells: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// The single-cell partition `{V}`.
    pub fn trivial(n: usize) -> Self {
        Partition {
            assignment: vec![0; n],
            cells: if n == 0 { vec![] } else { vec![(0..n).collect()] },
        }
    }

    /// Size of the ground set.
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &[usize] {
        &self.cells[i]
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.len() == self.len()
    }

    /// True when every cell has exactly `c` elements.
    pub fn is_homogeneous(&self, c: usize) -> bool {
        self.cells.iter().all(|cell| cell.len() == c)
    }

    fn check_ground(&self, other: &Partition) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::GroundSetMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// True iff every cell of `self` lies inside a cell of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> Result<bool> {
        self.check_ground(coarser)?;
        Ok(self
            .cells
            .iter()
            .all(|cell| cell.iter().all(|&v| coarser.cell_of(v) == coarser.cell_of(cell[0]))))
    }

    /// Coarsest partition refined by both: components of the share-a-cell
    /// relation.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        self.check_ground(other)?;
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            for cell in &p.cells {
                for &v in &cell[1..] {
                    uf.union(cell[0], v);
                }
            }
        }
        Ok(uf.into_partition())
    }

    /// Cellwise nonempty intersections.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        self.check_ground(other)?;
        let labels: Vec<(usize, usize)> = self
            .assignment
            .iter()
            .zip(&other.assignment)
            .map(|(&a, &b)| (a, b))
            .collect();
        Ok(Partition::from_labels(&labels))
    }

    /// Image of the partition under `gamma`: cells `γ(V_i)`.
    pub fn apply(&self, gamma: &Permutation) -> Result<Partition> {
        if gamma.len() != self.len() {
            return Err(Error::NotPermutation(self.len()));
        }
        let mut labels = vec![0; self.len()];
        for (v, &c) in self.assignment.iter().enumerate() {
            labels[gamma.apply(v)] = c;
        }
        Ok(Partition::from_labels(&labels))
    }
}

/// Join of a family of partitions over `0..n`. The join of an empty family
/// is the discrete partition.
pub fn join_all<'a>(n: usize, parts: impl IntoIterator<Item = &'a Partition>) -> Result<Partition> {
    let mut uf = UnionFind::new(n);
    for p in parts {
        if p.len() != n {
            return Err(Error::GroundSetMismatch(n, p.len()));
        }
        for cell in p.cells() {
            for &v in &cell[1..] {
                uf.union(cell[0], v);
            }
        }
    }
    Ok(uf.into_partition())
}

/// Disjoint-set forest with path compression and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns false if `a` and `b` were already together.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|v| self.find(v)).collect();
        Partition::from_labels(&labels)
    }
}
