//! Concrete properties with specialized restricted solvers where a
//! polynomial construction exists, a name-keyed registry for the CLI, and
//! the benchmark graph families.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, InducedSubgraph, VertexId, VertexSet};
use crate::property::{
    almost_satisfies, deletion_search, is_max_within, Property, PropertyClass, SolutionSet,
};

/// Whether the underlying undirected graph of `h` is 2-colorable.
fn two_colorable(h: &InducedSubgraph<'_>) -> bool {
    let verts = h.vertices();
    let mut colored = VertexSet::new();
    let mut side_a = VertexSet::new();
    for start in verts.iter() {
        if colored.contains(start) {
            continue;
        }
        colored.insert(start);
        side_a.insert(start);
        let mut frontier = VertexSet::singleton(start);
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                for u in h.und_neighbors_within(v).iter() {
                    if colored.contains(u) {
                        if side_a.contains(u) == side_a.contains(v) {
                            return false;
                        }
                    } else {
                        colored.insert(u);
                        if !side_a.contains(v) {
                            side_a.insert(u);
                        }
                        next.insert(u);
                    }
                }
            }
            frontier = next;
        }
    }
    true
}

/// Whether every pair of kept vertices is adjacent in the underlying
/// undirected graph.
fn underlying_complete(h: &InducedSubgraph<'_>) -> bool {
    h.vertices()
        .iter()
        .all(|v| h.und_neighbors_within(v) == h.vertices().without(v))
}

/// Two-candidate restricted solver shared by `clique` and
/// `independent-set`: with witness `w`, the maximal satisfying subgraphs
/// are among `V ∖ {w}` and `{w} ∪ keep(w)`.
fn two_candidate_restricted(
    p: &dyn Property,
    target: &InducedSubgraph<'_>,
    pin: Option<VertexId>,
    keep: impl Fn(VertexId) -> VertexSet,
) -> SolutionSet {
    if p.sat(target) {
        return core::iter::once(target.vertices().clone())
            .filter(|s| pin.is_none_or(|v| s.contains(v)))
            .collect();
    }
    let w = almost_satisfies(p, target).unwrap_or_else(|| {
        panic!(
            "restricted solver: target does not almost satisfy {}",
            p.name()
        )
    });
    let mut out: SolutionSet = [target.vertices().without(w), keep(w).with(w)]
        .into_iter()
        .collect();
    debug_assert!(out.iter().all(|s| p.sat(&target.with_vertices(s.clone()))));
    out.prune_non_maximal();
    match pin {
        Some(v) => out.into_iter().filter(|s| s.contains(v)).collect(),
        None => out,
    }
}

/// All graphs whose underlying undirected graph is complete.
pub struct Clique;

impl Property for Clique {
    fn name(&self) -> &str {
        "clique"
    }

    fn class(&self) -> PropertyClass {
        PropertyClass::Hereditary
    }

    fn sat(&self, h: &InducedSubgraph<'_>) -> bool {
        underlying_complete(h)
    }

    fn specialized_restricted_all(&self, target: &InducedSubgraph<'_>) -> Option<SolutionSet> {
        Some(two_candidate_restricted(self, target, None, |w| {
            target
                .graph()
                .und_neighbors(w)
                .intersection(target.vertices())
        }))
    }

    fn specialized_restricted_with_vertex(
        &self,
        target: &InducedSubgraph<'_>,
        v_r: VertexId,
    ) -> Option<SolutionSet> {
        Some(two_candidate_restricted(self, target, Some(v_r), |w| {
            target
                .graph()
                .und_neighbors(w)
                .intersection(target.vertices())
        }))
    }
}

/// All graphs with no edges.
pub struct IndependentSet;

impl Property for IndependentSet {
    fn name(&self) -> &str {
        "independent-set"
    }

    fn class(&self) -> PropertyClass {
        PropertyClass::Hereditary
    }

    fn sat(&self, h: &InducedSubgraph<'_>) -> bool {
        h.vertices()
            .iter()
            .all(|v| h.und_neighbors_within(v).is_empty())
    }

    fn specialized_restricted_all(&self, target: &InducedSubgraph<'_>) -> Option<SolutionSet> {
        Some(two_candidate_restricted(self, target, None, |w| {
            target
                .vertices()
                .without(w)
                .difference(target.graph().und_neighbors(w))
        }))
    }

    fn specialized_restricted_with_vertex(
        &self,
        target: &InducedSubgraph<'_>,
        v_r: VertexId,
    ) -> Option<SolutionSet> {
        Some(two_candidate_restricted(self, target, Some(v_r), |w| {
            target
                .vertices()
                .without(w)
                .difference(target.graph().und_neighbors(w))
        }))
    }
}

/// All 2-colorable graphs.
///
/// Ships without a specialized restricted solver: the natural "two choices
/// per component" construction misses solutions that mix coloring choices
/// across components reconnected by the witness vertex, so the exact
/// generic fallback is used instead.
pub struct Bipartite;

impl Property for Bipartite {
    fn name(&self) -> &str {
        "bipartite"
    }

    fn class(&self) -> PropertyClass {
        PropertyClass::Hereditary
    }

    fn sat(&self, h: &InducedSubgraph<'_>) -> bool {
        two_colorable(h)
    }
}

/// All nonempty connected 2-colorable graphs.
pub struct ConnectedBipartite;

impl Property for ConnectedBipartite {
    fn name(&self) -> &str {
        "connected-bipartite"
    }

    fn class(&self) -> PropertyClass {
        PropertyClass::ConnectedHereditary
    }

    fn sat(&self, h: &InducedSubgraph<'_>) -> bool {
        !h.is_empty() && h.is_connected() && two_colorable(h)
    }

    /// Exact io-restricted solver exploiting the witness structure.
    ///
    /// With witness `w` (so `target − w` is connected bipartite), the
    /// maximal solutions split into `target − w` itself and the maximal
    /// solutions through `w`; the latter are enumerated by a deletion
    /// search pinned on `{w, v_r}`, which never explores the (handled
    /// analytically) `w`-free part of the subset lattice. The number of
    /// solutions through `w` is not bounded by a constant — odd cycles
    /// already give `n − 1` of them — so no fixed candidate list can be
    /// complete and the search is genuinely enumerative.
    fn specialized_restricted_with_vertex(
        &self,
        target: &InducedSubgraph<'_>,
        v_r: VertexId,
    ) -> Option<SolutionSet> {
        debug_assert!(target.contains(v_r));
        if self.sat(target) {
            return Some(core::iter::once(target.vertices().clone()).collect());
        }
        let w = almost_satisfies(self, target)
            .expect("restricted solver: target does not almost satisfy connected-bipartite");
        let mut out = SolutionSet::new();
        let rest = target.vertices().without(w);
        if rest.contains(v_r) {
            // Maximal: the only strict superset inside the target is the
            // target itself, which does not satisfy.
            out.insert(rest);
        }
        let mut pins = VertexSet::singleton(w);
        pins.insert(v_r);
        for s in deletion_search(self, target, &pins) {
            out.insert(s);
        }
        Some(out)
    }
}

/// All stars: connected graphs with a center vertex incident to every
/// edge. Graphs with at most two vertices qualify whenever connected.
pub struct Star;

impl Star {
    /// Admissible centers of a star subgraph: the unique full-degree
    /// vertex for three or more vertices, every vertex otherwise.
    fn centers(h: &InducedSubgraph<'_>) -> Vec<VertexId> {
        let m = h.len();
        if m <= 2 {
            h.vertices().iter().collect()
        } else {
            h.vertices()
                .iter()
                .filter(|&c| h.und_neighbors_within(c).len() == m - 1)
                .collect()
        }
    }
}

impl Property for Star {
    fn name(&self) -> &str {
        "star"
    }

    fn class(&self) -> PropertyClass {
        PropertyClass::ConnectedHereditary
    }

    fn sat(&self, h: &InducedSubgraph<'_>) -> bool {
        if h.is_empty() {
            return false;
        }
        if !h.is_connected() {
            return false;
        }
        if h.len() <= 2 {
            return true;
        }
        h.vertices().iter().any(|c| {
            h.vertices()
                .iter()
                .all(|x| x == c || h.und_neighbors_within(x) == VertexSet::singleton(c))
        })
    }

    /// Exact io-restricted solver from a constant-size-per-center
    /// candidate list.
    ///
    /// With witness `w` and star `H = target − w` (center `c`, the rest
    /// leaves), every maximal star either avoids `w` (then it is `H`) or
    /// contains `w` and is centered at `w`, at `c`, or at a leaf:
    ///
    /// * center `w`: `{w} ∪ (leaves ∩ N(w))`, or `{w, c}` — absorbed by
    ///   the `c`-centered candidate;
    /// * center `c` (requires `w ~ c`): `{c, w} ∪ (leaves ∖ N(w))`;
    /// * center a leaf `ℓ ∈ N(w)` (requires `w ≁ c`): `{ℓ, c, w}`.
    ///
    /// Each candidate is filtered by satisfaction, containment of `v_r`,
    /// and maximality.
    fn specialized_restricted_with_vertex(
        &self,
        target: &InducedSubgraph<'_>,
        v_r: VertexId,
    ) -> Option<SolutionSet> {
        debug_assert!(target.contains(v_r));
        if self.sat(target) {
            return Some(core::iter::once(target.vertices().clone()).collect());
        }
        let w = almost_satisfies(self, target)
            .expect("restricted solver: target does not almost satisfy star");
        let rest = target.vertices().without(w);
        let h = target.with_vertices(rest.clone());
        let n_w = target
            .graph()
            .und_neighbors(w)
            .intersection(target.vertices());

        let mut cands: Vec<VertexSet> = vec![rest.clone()];
        for c in Star::centers(&h) {
            let leaves = rest.without(c);
            if n_w.contains(c) {
                cands.push(leaves.difference(&n_w).with(c).with(w));
            }
            cands.push(leaves.intersection(&n_w).with(w));
            if !n_w.contains(c) {
                for leaf in leaves.intersection(&n_w).iter() {
                    cands.push([leaf, c, w].into_iter().collect());
                }
            }
        }

        let universe = target.vertices();
        Some(
            cands
                .into_iter()
                .filter(|s| s.contains(v_r))
                .filter(|s| is_max_within(self, &target.with_vertices(s.clone()), universe))
                .collect(),
        )
    }
}

/// All rooted graphs whose underlying undirected graph is complete.
pub struct RootedClique;

impl Property for RootedClique {
    fn name(&self) -> &str {
        "rooted-clique"
    }

    fn class(&self) -> PropertyClass {
        PropertyClass::RootedHereditary
    }

    fn sat(&self, h: &InducedSubgraph<'_>) -> bool {
        h.is_rooted() && underlying_complete(h)
    }

    /// Exact io-restricted solver. Any solution through the witness `w`
    /// is a clique containing `w`, hence lives inside
    /// `Q = {w} ∪ N~(w)`; a deletion search over `Q` pinned on
    /// `{w, root, v_r}` enumerates those, with `target − w` as the only
    /// possible `w`-free solution. Directed reachability from the root
    /// can fail on subsets even when `Q` is underlying-complete, so more
    /// than two maximal solutions through distinct vertex subsets of `Q`
    /// are possible and the search is needed for exactness.
    fn specialized_restricted_with_vertex(
        &self,
        target: &InducedSubgraph<'_>,
        v_r: VertexId,
    ) -> Option<SolutionSet> {
        debug_assert!(target.contains(v_r));
        let Some(root) = target.root() else {
            // No rooted subgraph can exist without the root.
            return Some(SolutionSet::new());
        };
        if self.sat(target) {
            return Some(core::iter::once(target.vertices().clone()).collect());
        }
        let w = almost_satisfies(self, target)
            .expect("restricted solver: target does not almost satisfy rooted-clique");
        let mut out = SolutionSet::new();
        let rest = target.vertices().without(w);
        if rest.contains(v_r) {
            out.insert(rest);
        }
        let q = target
            .graph()
            .und_neighbors(w)
            .intersection(target.vertices())
            .with(w);
        if q.contains(root) && q.contains(v_r) {
            let sub = target.restrict(&q);
            let pins: VertexSet = [w, root, v_r].into_iter().collect();
            for s in deletion_search(self, &sub, &pins) {
                out.insert(s);
            }
        }
        Some(out)
    }
}

static CLIQUE: Clique = Clique;
static INDEPENDENT_SET: IndependentSet = IndependentSet;
static BIPARTITE: Bipartite = Bipartite;
static CONNECTED_BIPARTITE: ConnectedBipartite = ConnectedBipartite;
static STAR: Star = Star;
static ROOTED_CLIQUE: RootedClique = RootedClique;

/// Every property in the catalog.
pub fn all() -> [&'static dyn Property; 6] {
    [
        &CLIQUE,
        &INDEPENDENT_SET,
        &BIPARTITE,
        &CONNECTED_BIPARTITE,
        &STAR,
        &ROOTED_CLIQUE,
    ]
}

/// Looks a property up by its registry name.
pub fn by_name(name: &str) -> Option<&'static dyn Property> {
    all().into_iter().find(|p| p.name() == name)
}

/// Benchmark and regression graph families.
pub mod families {
    use super::*;

    /// A five-vertex graph with exactly three maximal connected-bipartite
    /// subgraphs.
    ///
    /// Vertices: top side `{0, 1}`, bottom side `{2, 3}` forming a complete
    /// bipartite square, plus a hub `4` adjacent to both top vertices and
    /// to bottom vertex `3`. Deleting the hub leaves a connected bipartite
    /// graph; the three maximal solutions are pinned in the tests.
    pub fn g1() -> Graph {
        Graph::undirected(5, &[(0, 2), (1, 2), (0, 3), (1, 3), (4, 0), (4, 1), (4, 3)])
            .expect("static graph")
    }

    /// Hub vertex id of [`g1`].
    pub const G1_HUB: VertexId = 4;

    /// A `2n + 1`-vertex family whose maximal bipartite subgraph count is
    /// exactly `2^n + 1`: a hub `0` adjacent to every other vertex, plus
    /// `n` disjoint pair edges `(2i−1, 2i)`.
    ///
    /// Panics if `n == 0`.
    pub fn g2(n: usize) -> Graph {
        assert!(n >= 1, "g2 family requires n >= 1");
        let mut edges = Vec::with_capacity(3 * n);
        for i in 1..=n {
            let (v, u) = (2 * i - 1, 2 * i);
            edges.push((v, u));
            edges.push((0, v));
            edges.push((0, u));
        }
        Graph::undirected(2 * n + 1, &edges).expect("static graph")
    }

    /// Hub vertex id of [`g2`].
    pub const G2_HUB: VertexId = 0;

    /// `k` disjoint triangles on vertices `3i, 3i+1, 3i+2`; the maximal
    /// independent sets number exactly `3^k`.
    pub fn disjoint_triangles(k: usize) -> Graph {
        let mut edges = Vec::with_capacity(3 * k);
        for i in 0..k {
            let b = 3 * i;
            edges.push((b, b + 1));
            edges.push((b + 1, b + 2));
            edges.push((b, b + 2));
        }
        Graph::undirected(3 * k, &edges).expect("static graph")
    }
}
