//! Exhaustive reference enumerator. Ground truth for every engine and
//! solver: it walks all `2^n` vertex subsets, so it is deliberately naive
//! and capped in size.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{InducedSubgraph, VertexId, VertexSet};
use crate::property::{Property, SolutionSet};

/// Size cap for oracle runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimit {
    pub max_n: usize,
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit { max_n: 20 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize, max_n: usize },
    VertexNotInTarget { vertex: VertexId },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { n, max_n } => {
                write!(f, "oracle refuses graph with {n} vertices (limit {max_n})")
            }
            OracleError::VertexNotInTarget { vertex } => {
                write!(f, "vertex {vertex} is not in the target graph")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// All maximal satisfying subgraphs of `target`, by brute force.
///
/// Enumerates every vertex subset in ascending binary order, keeps the
/// satisfying ones, and filters them down to the sets that are not strict
/// subsets of another kept set. The maximality filter is inclusion-based
/// on purpose, so the oracle stays correct even for property classes whose
/// single-vertex extension lemma a test wants to verify rather than assume.
pub fn brute_force_all(
    p: &dyn Property,
    target: &InducedSubgraph<'_>,
    limit: &OracleLimit,
) -> Result<SolutionSet, OracleError> {
    let members: Vec<VertexId> = target.vertices().iter().collect();
    let m = members.len();
    if m > limit.max_n {
        return Err(OracleError::TooLarge {
            n: m,
            max_n: limit.max_n,
        });
    }

    // Masks index into `members`, so sets live in the parent id space.
    let mut kept_masks: Vec<u64> = Vec::new();
    let mut kept_sets: Vec<VertexSet> = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let verts: VertexSet = members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        if p.sat(&target.with_vertices(verts.clone())) {
            kept_masks.push(mask);
            kept_sets.push(verts);
        }
    }

    let mut out = SolutionSet::new();
    for (i, &mask) in kept_masks.iter().enumerate() {
        let maximal = kept_masks
            .iter()
            .all(|&other| other == mask || mask & !other != 0);
        if maximal {
            out.insert(kept_sets[i].clone());
        }
    }
    Ok(out)
}

/// The members of [`brute_force_all`] that contain `v`.
pub fn brute_force_with_vertex(
    p: &dyn Property,
    target: &InducedSubgraph<'_>,
    v: VertexId,
    limit: &OracleLimit,
) -> Result<SolutionSet, OracleError> {
    if !target.contains(v) {
        return Err(OracleError::VertexNotInTarget { vertex: v });
    }
    let all = brute_force_all(p, target, limit)?;
    Ok(all.into_iter().filter(|s| s.contains(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::Graph;
    use crate::property::is_max;

    fn set(ids: &[VertexId]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn clique_on_triangle() {
        let p = catalog::by_name("clique").unwrap();
        let g = Graph::undirected(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let sols = brute_force_all(p, &g.full(), &OracleLimit::default()).unwrap();
        assert_eq!(sols, [set(&[0, 1, 2])].into_iter().collect());
        let with0 = brute_force_with_vertex(p, &g.full(), 0, &OracleLimit::default()).unwrap();
        assert_eq!(with0, [set(&[0, 1, 2])].into_iter().collect());
    }

    #[test]
    fn size_limit_is_enforced() {
        let p = catalog::by_name("clique").unwrap();
        let g = Graph::directed(6, &[]).unwrap();
        let err = brute_force_all(p, &g.full(), &OracleLimit { max_n: 5 });
        assert_eq!(err, Err(OracleError::TooLarge { n: 6, max_n: 5 }));
    }

    #[test]
    fn outputs_incomparable_and_sat() {
        let p = catalog::by_name("bipartite").unwrap();
        let g = Graph::undirected(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let sols = brute_force_all(p, &g.full(), &OracleLimit::default()).unwrap();
        let v: Vec<&VertexSet> = sols.iter().collect();
        for (i, a) in v.iter().enumerate() {
            assert!(p.sat(&g.induced((*a).clone())));
            for (j, b) in v.iter().enumerate() {
                if i != j {
                    assert!(!a.is_subset(b));
                }
            }
        }
    }

    #[test]
    fn inclusion_filter_agrees_with_extension_test_on_hereditary() {
        let g = Graph::undirected(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        for name in ["clique", "independent-set", "bipartite"] {
            let p = catalog::by_name(name).unwrap();
            let sols = brute_force_all(p, &g.full(), &OracleLimit::default()).unwrap();
            for s in sols.iter() {
                assert!(is_max(p, &g.induced(s.clone())));
            }
        }
    }

    #[test]
    fn with_vertex_respects_universe() {
        let p = catalog::by_name("clique").unwrap();
        let g = Graph::undirected(3, &[(0, 1)]).unwrap();
        let sub = g.induced(set(&[0, 1]));
        assert_eq!(
            brute_force_with_vertex(p, &sub, 2, &OracleLimit::default()),
            Err(OracleError::VertexNotInTarget { vertex: 2 })
        );
    }
}
