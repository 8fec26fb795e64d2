//! Graph representation: bitset vertex sets, immutable directed graphs with
//! an optional root, and induced subgraphs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Vertex identifier, dense in `0..n` for a graph with `n` vertices.
pub type VertexId = usize;

/// A set of vertex ids backed by a bit vector.
///
/// Iteration is always in ascending id order and two sets are equal exactly
/// when they contain the same ids, regardless of how they were built.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    /// Bit `v % 64` of `words[v / 64]` is set iff `v` is a member.
    /// Trailing all-zero words are trimmed so derived equality is canonical.
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty set.
    pub fn new() -> Self {
        VertexSet { words: Vec::new() }
    }

    /// The set `{v}`.
    pub fn singleton(v: VertexId) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / 64];
        if !n.is_multiple_of(64) {
            words.push((1u64 << (n % 64)) - 1);
        }
        let mut s = VertexSet { words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Inserts `v`; returns `true` if it was not already present.
    pub fn insert(&mut self, v: VertexId) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    /// Removes `v`; returns `true` if it was present.
    pub fn remove(&mut self, v: VertexId) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    pub fn contains(&self, v: VertexId) -> bool {
        let (w, b) = (v / 64, v % 64);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<VertexId> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// `self ∪ other` as a new set.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_in_place(other);
        out
    }

    pub fn union_in_place(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    /// `self ∩ other` as a new set.
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        let mut s = VertexSet { words };
        s.trim();
        s
    }

    /// `self ∖ other` as a new set.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
            .collect();
        let mut s = VertexSet { words };
        s.trim();
        s
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// A set with `v` added (no-op if already present).
    pub fn with(&self, v: VertexId) -> VertexSet {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    /// A set with `v` removed (no-op if absent).
    pub fn without(&self, v: VertexId) -> VertexSet {
        let mut s = self.clone();
        s.remove(v);
        s
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    /// Lexicographic order over the ascending member sequence, so e.g.
    /// `{0,2} < {1} < {1,5}`. Any total order would do for keyed storage;
    /// this one keeps listings readable.
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Errors from graph construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge endpoint or requested root is `>= n`.
    VertexOutOfRange { vertex: VertexId, n: usize },
    /// Edge `(v, v)`; simple graphs only.
    SelfLoop { vertex: VertexId },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex id {vertex} out of range (n = {n})")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop on vertex {vertex}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An immutable directed graph with an optional root vertex.
///
/// Undirected edges are modelled as a pair of opposite directed edges.
/// Duplicate edges collapse. After construction a graph never changes, so
/// it can be shared freely across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    root: Option<VertexId>,
    /// `out_adj[v]` = targets of directed edges leaving `v`.
    out_adj: Vec<VertexSet>,
    /// `und_adj[v]` = vertices adjacent to `v` in either direction.
    und_adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` from directed edges.
    pub fn directed(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut out_adj = vec![VertexSet::new(); n];
        let mut und_adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            out_adj[u].insert(v);
            und_adj[u].insert(v);
            und_adj[v].insert(u);
        }
        Ok(Graph {
            n,
            root: None,
            out_adj,
            und_adj,
        })
    }

    /// Builds a graph where every listed edge is inserted in both
    /// directions.
    pub fn undirected(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut both = Vec::with_capacity(edges.len() * 2);
        for &(u, v) in edges {
            both.push((u, v));
            both.push((v, u));
        }
        Graph::directed(n, &both)
    }

    /// Returns the same graph with `r` as its root.
    pub fn with_root(mut self, r: VertexId) -> Result<Graph, GraphError> {
        if r >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: r,
                n: self.n,
            });
        }
        self.root = Some(r);
        Ok(self)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> Option<VertexId> {
        self.root
    }

    /// Whether the directed edge `u -> v` exists.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.out_adj[u].contains(v)
    }

    /// Whether `u` and `v` are adjacent in either direction.
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.und_adj[u].contains(v)
    }

    /// Targets of directed edges leaving `v`.
    pub fn out_neighbors(&self, v: VertexId) -> &VertexSet {
        &self.out_adj[v]
    }

    /// Vertices adjacent to `v` in either direction.
    pub fn und_neighbors(&self, v: VertexId) -> &VertexSet {
        &self.und_adj[v]
    }

    /// All vertex ids as a set.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// The induced subgraph on all vertices.
    pub fn full(&self) -> InducedSubgraph<'_> {
        InducedSubgraph {
            graph: self,
            verts: self.vertices(),
        }
    }

    /// The induced subgraph on `verts`.
    ///
    /// Panics if `verts` contains an id `>= n`; passing one is a contract
    /// violation, like indexing out of bounds.
    pub fn induced(&self, verts: VertexSet) -> InducedSubgraph<'_> {
        assert!(
            verts.is_subset(&self.vertices()),
            "induced subgraph vertices out of range (n = {})",
            self.n
        );
        InducedSubgraph { graph: self, verts }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(VertexId, VertexId)> = (0..self.n)
            .flat_map(|u| self.out_adj[u].iter().map(move |v| (u, v)))
            .collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("root", &self.root)
            .field("edges", &edges)
            .finish()
    }
}

/// Which adjacency an induced subgraph's outside neighborhood uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborMode {
    /// Vertices adjacent to a member in either direction.
    Undirected,
    /// Vertices reached by an edge leaving a member.
    Directed,
}

/// An induced subgraph: a parent [`Graph`] and the vertex set kept.
///
/// The edge set is exactly the parent edges with both endpoints kept, and
/// the root is the parent's root when kept and absent otherwise; both are
/// derived, never stored.
#[derive(Clone)]
pub struct InducedSubgraph<'g> {
    graph: &'g Graph,
    verts: VertexSet,
}

impl<'g> InducedSubgraph<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.verts
    }

    pub fn into_vertices(self) -> VertexSet {
        self.verts
    }

    /// Number of vertices kept.
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.verts.contains(v)
    }

    /// The derived root: the parent's root if it is among the kept
    /// vertices, absent otherwise.
    pub fn root(&self) -> Option<VertexId> {
        self.graph.root.filter(|&r| self.verts.contains(r))
    }

    /// The subgraph extended with `v`; returns an equal subgraph when `v`
    /// is already a member.
    pub fn extend(&self, v: VertexId) -> InducedSubgraph<'g> {
        assert!(v < self.graph.n, "extend: vertex {v} out of range");
        InducedSubgraph {
            graph: self.graph,
            verts: self.verts.with(v),
        }
    }

    /// The subgraph with `v` dropped.
    pub fn without(&self, v: VertexId) -> InducedSubgraph<'g> {
        InducedSubgraph {
            graph: self.graph,
            verts: self.verts.without(v),
        }
    }

    /// The induced subgraph on the union of both vertex sets. Panics if
    /// the two sides live in different parent graphs.
    pub fn union(&self, other: &InducedSubgraph<'g>) -> InducedSubgraph<'g> {
        assert!(
            core::ptr::eq(self.graph, other.graph),
            "union of induced subgraphs from different parent graphs"
        );
        InducedSubgraph {
            graph: self.graph,
            verts: self.verts.union(&other.verts),
        }
    }

    /// The induced subgraph on `self ∩ keep`.
    pub fn restrict(&self, keep: &VertexSet) -> InducedSubgraph<'g> {
        InducedSubgraph {
            graph: self.graph,
            verts: self.verts.intersection(keep),
        }
    }

    /// Replaces the vertex set, keeping the parent graph.
    pub fn with_vertices(&self, verts: VertexSet) -> InducedSubgraph<'g> {
        self.graph.induced(verts)
    }

    /// Outside neighbors of this subgraph in the parent graph: vertices not
    /// kept that are adjacent (per `mode`) to some kept vertex. Always
    /// disjoint from the subgraph itself.
    pub fn neighbors(&self, mode: NeighborMode) -> VertexSet {
        let mut out = VertexSet::new();
        for v in self.verts.iter() {
            let adj = match mode {
                NeighborMode::Undirected => &self.graph.und_adj[v],
                NeighborMode::Directed => &self.graph.out_adj[v],
            };
            out.union_in_place(adj);
        }
        out.difference(&self.verts)
    }

    /// Undirected neighbors of the single vertex `v` that are members.
    pub fn und_neighbors_within(&self, v: VertexId) -> VertexSet {
        self.graph.und_adj[v].intersection(&self.verts)
    }

    /// Whether the underlying undirected graph is connected. The empty and
    /// one-vertex subgraphs count as connected.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.verts.first() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = VertexSet::singleton(start);
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next.union_in_place(&self.graph.und_adj[v]);
            }
            frontier = next.intersection(&self.verts).difference(&seen);
            seen.union_in_place(&frontier);
        }
        seen == self.verts
    }

    /// Whether the subgraph has a (derived) root from which every kept
    /// vertex is reachable along directed edges inside the subgraph. The
    /// empty subgraph has no root, hence is not rooted.
    pub fn is_rooted(&self) -> bool {
        let Some(r) = self.root() else {
            return false;
        };
        let mut seen = VertexSet::singleton(r);
        let mut frontier = VertexSet::singleton(r);
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next.union_in_place(&self.graph.out_adj[v]);
            }
            frontier = next.intersection(&self.verts).difference(&seen);
            seen.union_in_place(&frontier);
        }
        seen == self.verts
    }
}

impl fmt::Debug for InducedSubgraph<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InducedSubgraph({:?})", self.verts)
    }
}
