//! The pluggable property abstraction: satisfaction predicates grouped into
//! closure classes, maximality and almost-satisfaction tests, and the
//! restricted solvers the enumeration engines are built on.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{InducedSubgraph, NeighborMode, VertexId, VertexSet};

/// Closure class of a graph property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyClass {
    /// Closed under all induced subgraphs.
    Hereditary,
    /// Contains only connected graphs; closed under connected induced
    /// subgraphs.
    ConnectedHereditary,
    /// Contains only rooted graphs; closed under rooted induced subgraphs.
    RootedHereditary,
}

impl PropertyClass {
    /// Which outside neighborhood extensions of a subgraph may come from:
    /// undirected neighbors for connected-hereditary, directed neighbors
    /// for rooted-hereditary. Hereditary properties place no adjacency
    /// constraint on extensions, so there is no associated mode.
    pub fn neighbor_mode(self) -> Option<NeighborMode> {
        match self {
            PropertyClass::Hereditary => None,
            PropertyClass::ConnectedHereditary => Some(NeighborMode::Undirected),
            PropertyClass::RootedHereditary => Some(NeighborMode::Directed),
        }
    }
}

/// A graph property: a named, polynomially decidable set of graphs
/// together with its closure class.
///
/// Class obligations on `sat` (checked empirically by the test suites):
///
/// * the closure law of [`PropertyClass`];
/// * connected-hereditary ⇒ `sat(h)` implies `h.is_connected()`, and
///   `sat` is false on the empty subgraph;
/// * rooted-hereditary ⇒ `sat(h)` implies `h.is_rooted()`;
/// * hereditary ⇒ `sat` is true on the empty subgraph (closure under
///   deleting every vertex).
///
/// The two `specialized_*` hooks let a property ship fast restricted
/// solvers; when absent the engines fall back to [`generic_restricted`].
pub trait Property {
    fn name(&self) -> &str;

    fn class(&self) -> PropertyClass;

    /// Membership test for an induced subgraph.
    fn sat(&self, h: &InducedSubgraph<'_>) -> bool;

    /// Solver for the input-restricted problem: all maximal satisfying
    /// subgraphs of a `target` that almost satisfies the property.
    fn specialized_restricted_all(&self, target: &InducedSubgraph<'_>) -> Option<SolutionSet> {
        let _ = target;
        None
    }

    /// Solver for the io-restricted problem: the maximal satisfying
    /// subgraphs of an almost-satisfying `target` that contain `v_r`.
    fn specialized_restricted_with_vertex(
        &self,
        target: &InducedSubgraph<'_>,
        v_r: VertexId,
    ) -> Option<SolutionSet> {
        let _ = (target, v_r);
        None
    }
}

/// A duplicate-free collection of solution vertex sets.
///
/// Iteration is in the canonical [`VertexSet`] order, so the contents are
/// reproducible no matter the insertion order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SolutionSet {
    sets: BTreeSet<VertexSet>,
}

impl SolutionSet {
    pub fn new() -> Self {
        SolutionSet::default()
    }

    /// Inserts a solution; duplicates are a no-op. Returns `true` when the
    /// set was new.
    pub fn insert(&mut self, s: VertexSet) -> bool {
        self.sets.insert(s)
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.sets.contains(s)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.sets.iter()
    }

    /// Drops every member that is a strict subset of another member,
    /// leaving only the inclusion-maximal sets.
    pub fn prune_non_maximal(&mut self) {
        let all: Vec<VertexSet> = self.sets.iter().cloned().collect();
        self.sets
            .retain(|s| !all.iter().any(|other| s != other && s.is_subset(other)));
    }

    /// Whether some member is a superset of (or equal to) `s`.
    pub fn contains_superset_of(&self, s: &VertexSet) -> bool {
        self.sets.iter().any(|m| s.is_subset(m))
    }
}

impl FromIterator<VertexSet> for SolutionSet {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        SolutionSet {
            sets: iter.into_iter().collect(),
        }
    }
}

impl IntoIterator for SolutionSet {
    type Item = VertexSet;
    type IntoIter = alloc::collections::btree_set::IntoIter<VertexSet>;
    fn into_iter(self) -> Self::IntoIter {
        self.sets.into_iter()
    }
}

impl fmt::Debug for SolutionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.sets.iter()).finish()
    }
}

/// Whether `h` is a maximal satisfying subgraph of its parent graph
/// restricted to `universe`: `sat(h)` holds and no single vertex of
/// `universe ∖ h` can be added without leaving the property.
///
/// For all three closure classes the single-vertex test coincides with
/// true maximality (any strictly larger satisfying subgraph contains a
/// one-vertex extension that still satisfies).
pub fn is_max_within(p: &dyn Property, h: &InducedSubgraph<'_>, universe: &VertexSet) -> bool {
    if !p.sat(h) {
        return false;
    }
    universe
        .difference(h.vertices())
        .iter()
        .all(|v| !p.sat(&h.extend(v)))
}

/// [`is_max_within`] against the whole parent graph.
pub fn is_max(p: &dyn Property, h: &InducedSubgraph<'_>) -> bool {
    is_max_within(p, h, &h.graph().vertices())
}

/// Smallest vertex `v` of `target` such that `target − v` satisfies the
/// property, or `None` when no single deletion lands in the property.
pub fn almost_satisfies(p: &dyn Property, target: &InducedSubgraph<'_>) -> Option<VertexId> {
    target
        .vertices()
        .iter()
        .find(|&v| p.sat(&target.without(v)))
}

/// All maximal satisfying subgraphs of `target`, which must almost satisfy
/// the property. Dispatches to the property's specialized solver when it
/// has one, otherwise to [`generic_restricted`].
pub fn restricted_all(p: &dyn Property, target: &InducedSubgraph<'_>) -> SolutionSet {
    debug_assert!(
        almost_satisfies(p, target).is_some(),
        "restricted_all precondition: {:?} does not almost satisfy {}",
        target,
        p.name()
    );
    p.specialized_restricted_all(target)
        .unwrap_or_else(|| generic_restricted(p, target, None))
}

/// The maximal satisfying subgraphs of `target` that contain `v_r`;
/// `target` must almost satisfy the property and contain `v_r`.
pub fn restricted_with_vertex(
    p: &dyn Property,
    target: &InducedSubgraph<'_>,
    v_r: VertexId,
) -> SolutionSet {
    assert!(
        target.contains(v_r),
        "restricted_with_vertex: vertex {v_r} not in target"
    );
    debug_assert!(
        almost_satisfies(p, target).is_some(),
        "restricted_with_vertex precondition: {:?} does not almost satisfy {}",
        target,
        p.name()
    );
    p.specialized_restricted_with_vertex(target, v_r)
        .unwrap_or_else(|| generic_restricted(p, target, Some(v_r)))
}

/// Fallback restricted solver: complete, duplicate-free enumeration of the
/// maximal satisfying subgraphs of `target` (those containing `pin`, when
/// given), correct for any property and any input.
///
/// Top-down deletion search: start from the whole target; a satisfying set
/// is recorded and not shrunk further, a failing set branches on deleting
/// each single vertex (never `pin`). Visited sets are memoized, and a final
/// inclusion filter keeps only the maximal recorded sets. Exponential in
/// the worst case; correctness over speed.
pub fn generic_restricted(
    p: &dyn Property,
    target: &InducedSubgraph<'_>,
    pin: Option<VertexId>,
) -> SolutionSet {
    deletion_search(
        p,
        target,
        &pin.map(VertexSet::singleton).unwrap_or_default(),
    )
}

/// Deletion search with an arbitrary pinned vertex set; see
/// [`generic_restricted`]. Every recorded solution contains all of `pins`.
pub(crate) fn deletion_search(
    p: &dyn Property,
    target: &InducedSubgraph<'_>,
    pins: &VertexSet,
) -> SolutionSet {
    assert!(
        pins.is_subset(target.vertices()),
        "deletion_search: pinned vertices not in target"
    );
    let mut visited: BTreeSet<VertexSet> = BTreeSet::new();
    let mut found = SolutionSet::new();
    let mut stack: Vec<VertexSet> = alloc::vec![target.vertices().clone()];
    while let Some(verts) = stack.pop() {
        if !visited.insert(verts.clone()) {
            continue;
        }
        let h = target.with_vertices(verts.clone());
        if p.sat(&h) {
            found.insert(verts);
            continue;
        }
        for v in verts.difference(pins).iter() {
            let next = verts.without(v);
            if !visited.contains(&next) {
                stack.push(next);
            }
        }
    }
    found.prune_non_maximal();
    found
}
