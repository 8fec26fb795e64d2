//! Candidate-pool engine for hereditary properties, and its vertex-ordered
//! variant for connected-/rooted-hereditary properties on trees and DAGs.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::property::{
    is_max_within, restricted_all, restricted_with_vertex, Property, PropertyClass, SolutionSet,
};
use crate::stats::{EngineStats, Timer};

/// Precondition violations of the engine entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    /// The property's class is not accepted by this engine.
    ClassMismatch {
        engine: &'static str,
        class: PropertyClass,
    },
    VertexOutOfRange {
        vertex: VertexId,
        n: usize,
    },
    PrefixOutOfRange {
        i: usize,
        n: usize,
    },
    /// The ordered engine requires the underlying undirected graph to be a
    /// tree in the connected-hereditary case.
    NotATree,
    /// The ordered engine requires an acyclic directed graph in the
    /// rooted-hereditary case.
    NotADag,
    /// Rooted runs must start at the graph root.
    VertexNotRoot {
        vertex: VertexId,
    },
    /// The start vertex alone does not satisfy the property.
    SeedNotSatisfied {
        vertex: VertexId,
    },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::ClassMismatch { engine, class } => {
                write!(f, "engine `{engine}` does not accept {class:?} properties")
            }
            EngineError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex id {vertex} out of range (n = {n})")
            }
            EngineError::PrefixOutOfRange { i, n } => {
                write!(f, "prefix length {i} out of range (n = {n})")
            }
            EngineError::NotATree => write!(f, "underlying undirected graph is not a tree"),
            EngineError::NotADag => write!(f, "graph is not acyclic"),
            EngineError::VertexNotRoot { vertex } => {
                write!(f, "vertex {vertex} is not the graph root")
            }
            EngineError::SeedNotSatisfied { vertex } => {
                write!(
                    f,
                    "single-vertex subgraph {{{vertex}}} does not satisfy the property"
                )
            }
        }
    }
}

impl core::error::Error for EngineError {}

/// All maximal satisfying subgraphs of `g` for a hereditary property.
///
/// Grows a pool of candidates one vertex at a time: starting from the pool
/// holding only the empty subgraph, round `i` replaces each pool member
/// `H` by the maximal satisfying subgraphs of `H + v_i`, keeping those
/// maximal against the whole prefix seen so far. After round `i` the pool
/// is exactly the solution set of the prefix graph, so after round `n` it
/// is the answer. The pool is keyed by vertex set, so a candidate reached
/// from two parents is kept once.
pub fn gen_hered(p: &dyn Property, g: &Graph) -> Result<(SolutionSet, EngineStats), EngineError> {
    if p.class() != PropertyClass::Hereditary {
        return Err(EngineError::ClassMismatch {
            engine: "hered",
            class: p.class(),
        });
    }
    let timer = Timer::start();
    let (pool, mut stats) = pool_run(p, g, g.vertex_count());
    let result: SolutionSet = pool.into_iter().collect();
    stats.emissions = result.len() as u64;
    stats.elapsed = timer.elapsed();
    Ok((result, stats))
}

/// The candidate pool after `i` rounds of [`gen_hered`]: the maximal
/// satisfying subgraphs of the prefix graph on vertices `0..i`. With
/// `i = 0` this is the pool holding only the empty subgraph.
pub fn prefix_solutions(p: &dyn Property, g: &Graph, i: usize) -> Result<SolutionSet, EngineError> {
    if p.class() != PropertyClass::Hereditary {
        return Err(EngineError::ClassMismatch {
            engine: "hered",
            class: p.class(),
        });
    }
    if i > g.vertex_count() {
        return Err(EngineError::PrefixOutOfRange {
            i,
            n: g.vertex_count(),
        });
    }
    let (pool, _) = pool_run(p, g, i);
    Ok(pool.into_iter().collect())
}

fn pool_run(p: &dyn Property, g: &Graph, rounds: usize) -> (BTreeSet<VertexSet>, EngineStats) {
    let mut stats = EngineStats::default();
    let mut pool: BTreeSet<VertexSet> = BTreeSet::new();
    pool.insert(VertexSet::new());
    let mut prefix = VertexSet::new();
    for v in 0..rounds {
        prefix.insert(v);
        let snapshot: Vec<VertexSet> = pool.iter().cloned().collect();
        for h in snapshot {
            pool.remove(&h);
            let target = g.induced(h.with(v));
            stats.restricted_calls += 1;
            for cand in restricted_all(p, &target) {
                if is_max_within(p, &g.induced(cand.clone()), &prefix) {
                    pool.insert(cand);
                }
            }
            stats.note_pool_size(pool.len());
        }
        stats.outer_iterations += 1;
    }
    (pool, stats)
}

/// The maximal satisfying subgraphs through `v_r`, for a
/// connected-hereditary property on a tree or a rooted-hereditary property
/// on a DAG (with `v_r` the root).
///
/// Same pool loop as [`gen_hered`] but seeded with `{v_r}`, iterating the
/// vertices in an order that keeps every prefix extendable within the
/// class — breadth-first from `v_r` over the tree, respectively root-first
/// topological — and calling the io-restricted solver so every candidate
/// keeps `v_r`. Runs in time proportional to the output count times a
/// polynomial whenever the solver is polynomial.
pub fn gen_ordered(
    p: &dyn Property,
    g: &Graph,
    v_r: VertexId,
) -> Result<(SolutionSet, EngineStats), EngineError> {
    let n = g.vertex_count();
    if v_r >= n {
        return Err(EngineError::VertexOutOfRange { vertex: v_r, n });
    }
    let order = match p.class() {
        PropertyClass::Hereditary => {
            return Err(EngineError::ClassMismatch {
                engine: "ordered",
                class: p.class(),
            })
        }
        PropertyClass::ConnectedHereditary => {
            if !is_underlying_tree(g) {
                return Err(EngineError::NotATree);
            }
            bfs_order(g, v_r)
        }
        PropertyClass::RootedHereditary => {
            if g.root() != Some(v_r) {
                return Err(EngineError::VertexNotRoot { vertex: v_r });
            }
            root_first_topo_order(g, v_r).ok_or(EngineError::NotADag)?
        }
    };
    if !p.sat(&g.induced(VertexSet::singleton(v_r))) {
        return Err(EngineError::SeedNotSatisfied { vertex: v_r });
    }

    let timer = Timer::start();
    let mut stats = EngineStats::default();
    let mut pool: BTreeSet<VertexSet> = BTreeSet::new();
    pool.insert(VertexSet::singleton(v_r));
    let mut prefix = VertexSet::singleton(v_r);
    debug_assert_eq!(order[0], v_r);
    for &v in &order[1..] {
        prefix.insert(v);
        let snapshot: Vec<VertexSet> = pool.iter().cloned().collect();
        for h in snapshot {
            pool.remove(&h);
            let target = g.induced(h.with(v));
            stats.restricted_calls += 1;
            for cand in restricted_with_vertex(p, &target, v_r) {
                if is_max_within(p, &g.induced(cand.clone()), &prefix) {
                    pool.insert(cand);
                }
            }
            stats.note_pool_size(pool.len());
        }
        stats.outer_iterations += 1;
    }
    let result: SolutionSet = pool.into_iter().collect();
    stats.emissions = result.len() as u64;
    stats.elapsed = timer.elapsed();
    Ok((result, stats))
}

/// Whether the underlying undirected graph is a tree: connected with
/// exactly `n - 1` undirected adjacencies.
fn is_underlying_tree(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    if !g.full().is_connected() {
        return false;
    }
    let degree_sum: usize = (0..n).map(|v| g.und_neighbors(v).len()).sum();
    degree_sum == 2 * (n - 1)
}

/// Breadth-first order from `start` over undirected adjacency, ties by
/// ascending id. On a connected graph this covers every vertex.
fn bfs_order(g: &Graph, start: VertexId) -> Vec<VertexId> {
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut seen = VertexSet::singleton(start);
    let mut frontier = VertexSet::singleton(start);
    order.push(start);
    while !frontier.is_empty() {
        let mut next = VertexSet::new();
        for v in frontier.iter() {
            next.union_in_place(g.und_neighbors(v));
        }
        frontier = next.difference(&seen);
        seen.union_in_place(&frontier);
        order.extend(frontier.iter());
    }
    order
}

/// `root` first, then the remaining vertices in deterministic (smallest
/// available id) topological order; `None` when the directed graph has a
/// cycle. Vertices unreachable from the root keep their topological
/// position; they can never appear in a rooted subgraph, so their place in
/// the order is immaterial.
fn root_first_topo_order(g: &Graph, root: VertexId) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut indegree: Vec<usize> = alloc::vec![0; n];
    for u in 0..n {
        for v in g.out_neighbors(u).iter() {
            indegree[v] += 1;
        }
    }
    let mut ready: BTreeSet<VertexId> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        topo.push(v);
        for u in g.out_neighbors(v).iter() {
            indegree[u] -= 1;
            if indegree[u] == 0 {
                ready.insert(u);
            }
        }
    }
    if topo.len() != n {
        return None; // cycle
    }
    let mut order = Vec::with_capacity(n);
    order.push(root);
    order.extend(topo.into_iter().filter(|&v| v != root));
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, families};
    use crate::oracle::{brute_force_all, OracleLimit};

    fn set(ids: &[VertexId]) -> VertexSet {
        ids.iter().copied().collect()
    }

    fn sols(sets: &[&[VertexId]]) -> SolutionSet {
        sets.iter().map(|s| set(s)).collect()
    }

    #[test]
    fn independent_set_on_path() {
        let p = catalog::by_name("independent-set").unwrap();
        let g = Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        let (got, stats) = gen_hered(p, &g).unwrap();
        assert_eq!(got, sols(&[&[0, 2], &[1]]));
        assert_eq!(stats.emissions, 2);
        assert_eq!(stats.outer_iterations, 3);
    }

    #[test]
    fn clique_on_triangle() {
        let p = catalog::by_name("clique").unwrap();
        let g = Graph::undirected(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let (got, _) = gen_hered(p, &g).unwrap();
        assert_eq!(got, sols(&[&[0, 1, 2]]));
    }

    #[test]
    fn bipartite_on_g2_3() {
        let p = catalog::by_name("bipartite").unwrap();
        let (got, _) = gen_hered(p, &families::g2(3)).unwrap();
        assert_eq!(got.len(), 9);
    }

    #[test]
    fn empty_graph_yields_empty_subgraph() {
        let p = catalog::by_name("clique").unwrap();
        let g = Graph::directed(0, &[]).unwrap();
        let (got, _) = gen_hered(p, &g).unwrap();
        assert_eq!(got, sols(&[&[]]));
    }

    #[test]
    fn class_mismatch_is_rejected() {
        let p = catalog::by_name("connected-bipartite").unwrap();
        let g = Graph::directed(1, &[]).unwrap();
        assert!(matches!(
            gen_hered(p, &g),
            Err(EngineError::ClassMismatch { .. })
        ));
    }

    #[test]
    fn prefix_examples() {
        let p = catalog::by_name("independent-set").unwrap();
        let g = Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(prefix_solutions(p, &g, 0).unwrap(), sols(&[&[]]));
        assert_eq!(prefix_solutions(p, &g, 2).unwrap(), sols(&[&[0], &[1]]));
        assert_eq!(
            prefix_solutions(p, &g, 3).unwrap(),
            gen_hered(p, &g).unwrap().0
        );
        assert!(matches!(
            prefix_solutions(p, &g, 4),
            Err(EngineError::PrefixOutOfRange { .. })
        ));
    }

    #[test]
    fn prefix_law_and_monotonicity_small() {
        let p = catalog::by_name("independent-set").unwrap();
        let g = Graph::undirected(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let mut last = 0;
        for i in 0..=4 {
            let pool = prefix_solutions(p, &g, i).unwrap();
            let prefix: VertexSet = (0..i).collect();
            let want = brute_force_all(p, &g.induced(prefix), &OracleLimit::default()).unwrap();
            assert_eq!(pool, want, "prefix {i}");
            assert!(pool.len() >= last, "pool shrank at {i}");
            last = pool.len();
        }
    }

    #[test]
    fn ordered_on_star_graph() {
        let p = catalog::by_name("connected-bipartite").unwrap();
        let g = Graph::undirected(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (got, _) = gen_ordered(p, &g, 0).unwrap();
        assert_eq!(got, sols(&[&[0, 1, 2, 3]]));
    }

    #[test]
    fn ordered_on_path_center() {
        let p = catalog::by_name("connected-bipartite").unwrap();
        let g = Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        let (got, _) = gen_ordered(p, &g, 1).unwrap();
        assert_eq!(got, sols(&[&[0, 1, 2]]));
    }

    #[test]
    fn ordered_rooted_clique_on_dag() {
        let p = catalog::by_name("rooted-clique").unwrap();
        let g = Graph::directed(3, &[(0, 1), (0, 2)])
            .unwrap()
            .with_root(0)
            .unwrap();
        let (got, _) = gen_ordered(p, &g, 0).unwrap();
        assert_eq!(got, sols(&[&[0, 1], &[0, 2]]));
    }

    #[test]
    fn ordered_preconditions() {
        let cbip = catalog::by_name("connected-bipartite").unwrap();
        let cycle = Graph::undirected(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(gen_ordered(cbip, &cycle, 0), Err(EngineError::NotATree));

        let rc = catalog::by_name("rooted-clique").unwrap();
        let cyc = Graph::directed(2, &[(0, 1), (1, 0)])
            .unwrap()
            .with_root(0)
            .unwrap();
        assert_eq!(gen_ordered(rc, &cyc, 0), Err(EngineError::NotADag));
        let dag = Graph::directed(2, &[(0, 1)]).unwrap().with_root(0).unwrap();
        assert_eq!(
            gen_ordered(rc, &dag, 1),
            Err(EngineError::VertexNotRoot { vertex: 1 })
        );
        assert!(gen_ordered(rc, &dag, 0).is_ok());
    }

    #[test]
    fn bfs_and_topo_orders() {
        let g = Graph::undirected(5, &[(2, 0), (2, 4), (0, 1), (4, 3)]).unwrap();
        assert_eq!(bfs_order(&g, 2), alloc::vec![2, 0, 4, 1, 3]);

        let d = Graph::directed(4, &[(2, 0), (0, 1), (2, 3)]).unwrap();
        let order = root_first_topo_order(&d, 2).unwrap();
        assert_eq!(order[0], 2);
        let pos = |v: VertexId| order.iter().position(|&x| x == v).unwrap();
        assert!(pos(2) < pos(0) && pos(0) < pos(1) && pos(2) < pos(3));
    }
}
