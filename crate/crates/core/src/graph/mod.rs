//! Simple undirected graphs on `{0, .., n-1}` with bit-row adjacency.

mod graph6;
mod set;

pub use graph6::{parse_graph6, serialize_graph6, MAX_GRAPH6_ORDER};
pub use set::VertexSet;
pub(crate) use set::{and_count, bits, count};

use crate::error::{Error, Result};
use set::{words_for, WORD};
use std::fmt;

/// A simple undirected graph. Row `u` of the adjacency matrix is a bitset of
/// `words` machine words, so neighbourhood intersections are word-parallel.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            let mut row = VertexSet::full(n);
            row.remove(u);
            g.row_mut(u).copy_from_slice(row.words());
        }
        g
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; repeated edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::arg(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Cycle `0-1-..-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// Complete multipartite graph whose parts are consecutive index blocks
    /// of the given sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &s) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, s));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Balanced complete `p`-partite graph with parts of size `s`.
    pub fn complete_balanced_multipartite(p: usize, s: usize) -> Self {
        Graph::complete_multipartite(&vec![s; p])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of machine words per adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `u` as raw words.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, u: usize) -> &mut [u64] {
        &mut self.adj[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(u).to_vec())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        let w = self.words;
        self.adj[u * w + v / WORD] |= 1 << (v % WORD);
        self.adj[v * w + u / WORD] |= 1 << (u % WORD);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge ({u},{v})");
        let w = self.words;
        self.adj[u * w + v / WORD] &= !(1 << (v % WORD));
        self.adj[v * w + u / WORD] &= !(1 << (u % WORD));
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        count(self.row(u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|u| self.degree(u)).min()
    }

    pub fn edge_count(&self) -> usize {
        count(&self.adj) / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.row(u))
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for u in 0..self.n {
            let mut full = VertexSet::full(self.n);
            full.remove(u);
            for (dst, src) in g.row_mut(u).iter_mut().zip(full.words()) {
                *dst = !*dst & src;
            }
        }
        g
    }

    /// Subgraph induced by `s`, relabelled by increasing original index.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        assert_eq!(s.universe(), self.n, "vertex set over a different universe");
        let keep = s.to_vec();
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Vertices adjacent to every member of `s`. Members of `s` are never
    /// included since the graph has no loops.
    pub fn common_neighbors(&self, s: &VertexSet) -> Result<VertexSet> {
        let mut it = s.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::arg("common_neighbors of an empty set"))?;
        let mut acc = self.row(first).to_vec();
        for v in it {
            for (a, b) in acc.iter_mut().zip(self.row(v)) {
                *a &= b;
            }
        }
        Ok(VertexSet::from_words(self.n, acc))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| and_count(self.row(u), s.words()) == 0)
    }

    /// Number of edges between two vertex sets (each edge counted once when
    /// the sets are disjoint).
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|u| and_count(self.row(u), b.words())).sum()
    }

    /// Disjoint union, second graph relabelled after the first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {})", self.n, serialize_graph6(self))
    }
}
