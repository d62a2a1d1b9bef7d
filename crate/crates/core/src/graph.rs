//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex carries its open and closed neighbourhoods as [`VertexSet`]
//! words, so domination tests reduce to a handful of OR operations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices { n: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    CycleTooShort { n: usize },
    LeafCountLength { expected: usize, got: usize },
    InvalidLeafCount { vertex: usize, count: u8 },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n } => {
                write!(f, "graph has {n} vertices, the bitmask kernel supports at most {MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph of order {n}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::CycleTooShort { n } => write!(f, "a cycle needs at least 3 vertices, got {n}"),
            GraphError::LeafCountLength { expected, got } => {
                write!(f, "expected {expected} leaf counts (one per base vertex), got {got}")
            }
            GraphError::InvalidLeafCount { vertex, count } => {
                write!(f, "leaf count {count} for base vertex {vertex} must be 1 or 2")
            }
        }
    }
}

/// Named graph families accepted by [`Graph::generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path,
    Cycle,
    Complete,
    /// `K_{1,n-1}` with centre 0.
    Star,
    Empty,
}

/// Immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Builds a graph from open neighbourhoods, validating symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if let Some(w) = (nb - all).first() {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
            if nb.contains(v) {
                return Err(GraphError::SelfLoop { vertex: v });
            }
        }
        let mut sym = adj;
        for v in 0..n {
            for w in sym[v].iter() {
                sym[w].insert(v);
            }
        }
        Ok(Graph::from_adjacency_unchecked(sym))
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Graph {
        let closed = adj.iter().enumerate().map(|(v, &nb)| nb.with(v)).collect();
        Graph { n: adj.len(), adj, closed }
    }

    pub fn generate(kind: GraphKind, n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let edges: Vec<(usize, usize)> = match kind {
            GraphKind::Path => (1..n).map(|v| (v - 1, v)).collect(),
            GraphKind::Cycle => {
                if n < 3 {
                    return Err(GraphError::CycleTooShort { n });
                }
                (0..n).map(|v| (v, (v + 1) % n)).collect()
            }
            GraphKind::Complete => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            GraphKind::Star => (1..n).map(|v| (0, v)).collect(),
            GraphKind::Empty => Vec::new(),
        };
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::generate(GraphKind::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        Graph::generate(GraphKind::Cycle, n)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Graph::generate(GraphKind::Complete, n)
    }

    pub fn star(n: usize) -> Result<Graph, GraphError> {
        Graph::generate(GraphKind::Star, n)
    }

    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::generate(GraphKind::Empty, n)
    }

    /// Places `other` after `self`, shifting its labels by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| VertexSet::from_bits(nb.bits() << shift)),
        );
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Attaches `leaf_counts[v]` (1 or 2) pendant vertices to every vertex `v` of `base`.
    ///
    /// New leaves are numbered after the base vertices, in base-vertex order.
    pub fn star_like_from_base(base: &Graph, leaf_counts: &[u8]) -> Result<Graph, GraphError> {
        if leaf_counts.len() != base.n {
            return Err(GraphError::LeafCountLength {
                expected: base.n,
                got: leaf_counts.len(),
            });
        }
        if let Some((vertex, &count)) = leaf_counts
            .iter()
            .enumerate()
            .find(|(_, &c)| !(1..=2).contains(&c))
        {
            return Err(GraphError::InvalidLeafCount { vertex, count });
        }
        let n = base.n + leaf_counts.iter().map(|&c| c as usize).sum::<usize>();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut edges: Vec<(usize, usize)> = base.edges().collect();
        let mut next = base.n;
        for (v, &c) in leaf_counts.iter().enumerate() {
            for _ in 0..c {
                edges.push((v, next));
                next += 1;
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Relabels vertices so that old vertex `order[i]` becomes vertex `i`.
    ///
    /// `order` must be a permutation of `0..n`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        let mut position = vec![0usize; self.n];
        for (i, &old) in order.iter().enumerate() {
            position[old] = i;
        }
        let adj = order
            .iter()
            .map(|&old| self.adj[old].iter().map(|w| position[w]).collect())
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// Subgraph induced by `keep`, relabelled in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let order: Vec<usize> = keep.iter().collect();
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|w| position[w]).collect())
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.closed[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn closed_adjacency(&self) -> &[VertexSet] {
        &self.closed
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `None` for the order-0 graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|s| s.len()).min()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(|s| s.len()).collect();
        d.sort_unstable();
        d
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].len() == 1).collect()
    }

    /// `N[S]`, the union of closed neighbourhoods of members of `set`.
    #[inline]
    pub fn closed_neighborhood_of_set(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | self.closed[v])
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.closed_neighborhood_of_set(frontier) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    /// True for the order-0 and order-1 graphs.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0) == self.vertices()
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| all - self.closed[v]).collect();
        Graph::from_adjacency_unchecked(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A stem together with its pendant leaves `L(s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stem {
    pub vertex: usize,
    pub leaves: VertexSet,
}

impl Stem {
    /// Number of adjacent leaves.
    pub fn k(&self) -> usize {
        self.leaves.len()
    }

    /// `L[s] = L(s) ∪ {s}`.
    pub fn closed_leaves(&self) -> VertexSet {
        self.leaves.with(self.vertex)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemStructure {
    pub leaves: VertexSet,
    /// Ordered by stem vertex.
    pub stems: Vec<Stem>,
    pub star_like: bool,
    /// A vertex that is neither a leaf nor a 1- or 2-stem, when `star_like` is false.
    pub witness: Option<usize>,
}

impl StemStructure {
    /// Number of stems (ω).
    pub fn omega(&self) -> usize {
        self.stems.len()
    }

    pub fn stem_vertices(&self) -> VertexSet {
        self.stems.iter().map(|s| s.vertex).collect()
    }

    pub fn stem(&self, vertex: usize) -> Option<&Stem> {
        self.stems.iter().find(|s| s.vertex == vertex)
    }
}

impl Graph {
    /// Leaves, stems with their leaf lists, and the star-like verdict.
    ///
    /// Both endpoints of a `K2` component are leaves and 1-stems at once.
    pub fn stem_structure(&self) -> StemStructure {
        let leaves = self.leaves();
        let mut stems = Vec::new();
        let mut witness = None;
        for v in 0..self.n {
            let own = self.adj[v] & leaves;
            if !own.is_empty() {
                stems.push(Stem { vertex: v, leaves: own });
            }
            let ok = leaves.contains(v) || (1..=2).contains(&own.len());
            if !ok && witness.is_none() {
                witness = Some(v);
            }
        }
        StemStructure {
            leaves,
            stems,
            star_like: witness.is_none(),
            witness,
        }
    }

    pub fn is_star_like(&self) -> bool {
        self.stem_structure().star_like
    }
}
