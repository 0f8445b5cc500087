//! Labelled simple graphs on at most 64 vertices.
//!
//! A graph is stored as one adjacency bitset per vertex, so every subset
//! operation (induced subgraphs, neighborhoods, domination checks) is a
//! handful of word operations. The 64-vertex cap keeps a row in one machine
//! word; all the computations in this crate are desk-scale.

mod enumerate;
mod graph6;
mod iso;
mod random;

pub use enumerate::{enumerate_all_graphs, ENUMERATE_MAX_N};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_MAX_N};
pub use iso::{
    automorphism_count, canonical_form, contains_induced, contains_subgraph,
    count_subgraph_copies, CANONICAL_MAX_N,
};
pub(crate) use iso::induced_embedding_exists;
pub use random::random_gnp;

use std::fmt;
use thiserror::Error;

/// Hard cap on the number of vertices: one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} exceeds the {MAX_VERTICES}-vertex cap")]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}: graphs here are simple")]
    LoopEdge { vertex: usize },
    #[error("{operation} supports graphs of order at most {ceiling}, got {n}")]
    OrderCeiling {
        operation: &'static str,
        ceiling: usize,
        n: usize,
    },
    #[error("invalid graph6 data: {0}")]
    InvalidGraph6(String),
    #[error("edge probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(String),
}

/// A set of vertices of a host graph, stored as a bitset over `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn from_vertices(vertices: &[usize]) -> Self {
        let mut bits = 0u64;
        for &v in vertices {
            debug_assert!(v < MAX_VERTICES);
            bits |= 1u64 << v;
        }
        VertexSet(bits)
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with_vertex(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u64;
        for v in iter {
            bits |= 1u64 << v;
        }
        VertexSet(bits)
    }
}

/// Iterator over the set bits of a word, ascending.
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// A labelled simple graph: `adj[v]` holds the neighbor bitset of vertex `v`.
///
/// Invariants: the adjacency is symmetric, irreflexive, and every row has
/// bits only below `n`. The order-0 null graph is a valid value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph { adj: vec![0; n] })
    }

    /// Builds a graph from an explicit edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1u64 << v) != 0
    }

    /// Neighbor bitset of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}` as a bitset.
    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        self.adj[v] | (1u64 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Bitset of all vertices.
    pub fn vertex_mask(&self) -> u64 {
        VertexSet::full(self.n()).bits()
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            let mut higher = self.adj[u] & !(((1u128 << (u + 1)) - 1) as u64);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// The graph induced by `s`, relabelled to `0..|s|` preserving vertex order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if s.bits() & !self.vertex_mask() != 0 {
            let bad = (s.bits() & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n(),
            });
        }
        let members: Vec<usize> = s.iter().collect();
        let mut g = Graph::edgeless(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| !row & mask & !(1u64 << v))
            .collect();
        Graph { adj }
    }

    /// Line graph: one vertex per edge (in lexicographic edge order), adjacent
    /// iff the edges share an endpoint. Fails if the result would exceed the
    /// vertex cap.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        let edges = self.edges();
        let m = edges.len();
        let mut g = Graph::edgeless(m).map_err(|_| GraphError::TooManyVertices { n: m })?;
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut g = Graph::edgeless(self.n()).expect("order unchanged");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertices reachable from `start` inside `mask` (which must contain it).
    pub(crate) fn component_within(&self, mask: u64, start: usize) -> u64 {
        debug_assert!(mask & (1u64 << start) != 0);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v] & mask & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Number of connected components of the subgraph induced by `mask`.
    pub(crate) fn components_within(&self, mask: u64) -> usize {
        let mut rest = mask;
        let mut count = 0;
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            rest &= !self.component_within(rest, start);
            count += 1;
        }
        count
    }

    /// Acyclicity of the subgraph induced by `mask` (edges inside the mask
    /// vs. vertices and components).
    pub(crate) fn is_acyclic_within(&self, mask: u64) -> bool {
        let vertices = mask.count_ones() as usize;
        let edges: usize = BitIter(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2;
        edges + self.components_within(mask) == vertices
    }

    // -- small named graphs, used all over the test suites and the CLI --

    /// Path `P_n` on vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("valid clique")
    }

    /// The claw `K_{1,3}` with center 0.
    pub fn claw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).expect("valid claw")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_exactly_the_given_edges() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(p3.edge_count(), 2);

        let e2 = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(e2.edge_count(), 0);

        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);

        // duplicates collapse
        let dup = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::LoopEdge { vertex: 1 })
        ));
        assert!(matches!(
            Graph::edgeless(65),
            Err(GraphError::TooManyVertices { n: 65 })
        ));
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = Graph::complete(3);
        let k2 = k3.induced(VertexSet::from_vertices(&[0, 1])).unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));

        let p3 = Graph::path(3);
        let ends = p3.induced(VertexSet::from_vertices(&[0, 2])).unwrap();
        assert_eq!((ends.n(), ends.edge_count()), (2, 0));

        let null = p3.induced(VertexSet::EMPTY).unwrap();
        assert_eq!(null.n(), 0);

        assert!(p3.induced(VertexSet::from_vertices(&[0, 5])).is_err());
    }

    #[test]
    fn complement_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.complement().edge_count(), 0);

        let p3 = Graph::path(3);
        let c = p3.complement();
        assert_eq!(c.edges(), vec![(0, 2)]);

        let e2 = Graph::edgeless(2).unwrap();
        assert_eq!(e2.complement().edge_count(), 1);
    }

    #[test]
    fn complement_is_involutive_on_all_small_graphs() {
        for n in 0..=7 {
            for g in enumerate_all_graphs(n).unwrap() {
                assert_eq!(g.complement().complement(), g);
            }
        }
    }

    #[test]
    fn line_graph_examples() {
        // P_3 -> K_2
        let l = Graph::path(3).line_graph().unwrap();
        assert_eq!((l.n(), l.edge_count()), (2, 1));

        // K_3 -> K_3
        let l = Graph::complete(3).line_graph().unwrap();
        assert_eq!((l.n(), l.edge_count()), (3, 3));

        // C_4 -> C_4 up to isomorphism
        let l = Graph::cycle(4).line_graph().unwrap();
        assert_eq!(
            canonical_form(&l).unwrap(),
            canonical_form(&Graph::cycle(4)).unwrap()
        );
    }

    #[test]
    fn component_helpers() {
        let p3 = Graph::path(3);
        assert_eq!(p3.components_within(p3.vertex_mask()), 1);
        assert!(p3.is_acyclic_within(p3.vertex_mask()));
        let c4 = Graph::cycle(4);
        assert!(!c4.is_acyclic_within(c4.vertex_mask()));
        assert_eq!(c4.components_within(0b0101), 2);
    }
}
