//! Simple undirected graphs.
//!
//! Vertices are `0..n` internally. Everything that faces a user (text
//! formats, error messages, CLI output) is 1-based.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Largest vertex count accepted by constructors and parsers.
pub const MAX_VERTICES: usize = 1 << 16;

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (u + 1, v + 1)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from 0-based edge pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge(n));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w + 1, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u + 1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge(a + 1, b + 1));
            }
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from a symmetric boolean predicate on pairs `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj }
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_fn(n, |_, _| true)
    }

    /// Path 1-2-...-n.
    pub fn path(n: usize) -> Self {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    /// Cycle 1-2-...-n-1, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// Star K_{1,k} with the center as vertex 1.
    pub fn star(leaves: usize) -> Self {
        Graph::from_fn(leaves + 1, |u, _| u == 0)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_regular(&self) -> bool {
        self.adj.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Matrix {
        let n = self.n();
        let mut a = Matrix::zeros(n, n);
        for (u, v) in self.edges() {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        a
    }

    /// True iff every vertex is reachable from the first one. The graph on
    /// zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    /// Places `other` after `self`; returns the union and the id offset
    /// applied to the vertices of `other`.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, usize) {
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + offset).collect::<Vec<_>>()),
        );
        (Graph { adj }, offset)
    }

    /// Subgraph induced by `vertices` (0-based), relabeled in ascending
    /// order of the selected ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::EmptySet);
        }
        let n = self.n();
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad + 1, n });
        }
        Ok(Graph::from_fn(sorted.len(), |i, j| {
            self.has_edge(sorted[i], sorted[j])
        }))
    }

    /// Relabels the graph so that vertex `u` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        Graph { adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).is_connected());
        let (two_k2, _) = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert!(!two_k2.is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn complement_cases() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let c4 = Graph::cycle(4);
        let expected = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        assert_eq!(c4.complement(), expected);
        assert_eq!(c4.complement().complement(), c4);
    }

    #[test]
    fn disjoint_union_cases() {
        let (g, off) = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(off, 2);
        assert_eq!(g, Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());

        let (g, off) = Graph::empty(1).disjoint_union(&Graph::empty(1));
        assert_eq!((g, off), (Graph::empty(2), 1));

        let (g, off) = Graph::path(3).disjoint_union(&Graph::complete(3));
        assert_eq!(off, 3);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn induced_subgraph_cases() {
        let p4 = Graph::path(4);
        assert_eq!(p4.induced_subgraph(&[0, 1]).unwrap(), Graph::complete(2));
        assert_eq!(p4.induced_subgraph(&[0, 2]).unwrap(), Graph::empty(2));
        assert_eq!(
            Graph::complete(4).induced_subgraph(&[0, 1, 2]).unwrap(),
            Graph::complete(3)
        );
        assert_eq!(p4.induced_subgraph(&[]), Err(Error::EmptySet));
        assert_eq!(
            p4.induced_subgraph(&[0, 4]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 4 })
        );
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        );
    }

    #[test]
    fn relabel_preserves_edge_count() {
        let g = Graph::path(4);
        let h = g.relabel(&[3, 2, 1, 0]);
        assert_eq!(h, g);
        let h = g.relabel(&[1, 0, 2, 3]);
        assert!(h.has_edge(1, 0) && h.has_edge(0, 2) && h.has_edge(2, 3));
    }
}
