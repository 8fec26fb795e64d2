//! Cross-module invariants checked exhaustively on small graphs and on
//! seeded random digraphs.

mod common;

use maxsub_core::catalog::{self, families};
use maxsub_core::oracle::{brute_force_all, brute_force_with_vertex, OracleLimit};
use maxsub_core::property::{
    almost_satisfies, generic_restricted, is_max, restricted_all, restricted_with_vertex,
};
use maxsub_core::{Graph, VertexSet};

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..(1 << n)).map(move |mask| (0..n).filter(|v| mask & (1 << v) != 0).collect())
}

/// Justification for the single-vertex maximality test: whenever two
/// satisfying subgraphs are strictly nested, the smaller can reach the
/// larger one vertex at a time without leaving the property.
#[test]
fn extension_chain_holds_for_every_class() {
    let graphs: Vec<Graph> = common::exhaustive_undirected_up_to(5)
        .chain(common::random_digraphs(120, 1, 7, 0xC0FFEE))
        .collect();
    for g in &graphs {
        let n = g.vertex_count();
        let sat_sets: Vec<Vec<VertexSet>> = catalog::all()
            .iter()
            .map(|p| {
                subsets(n)
                    .filter(|s| p.sat(&g.induced(s.clone())))
                    .collect()
            })
            .collect();
        for (p, sat) in catalog::all().iter().zip(&sat_sets) {
            for m in sat {
                for h in sat {
                    if h == m || !h.is_subset(m) {
                        continue;
                    }
                    let h_sub = g.induced(h.clone());
                    let extendable = m.difference(h).iter().any(|v| p.sat(&h_sub.extend(v)));
                    assert!(
                        extendable,
                        "{}: {:?} ⊂ {:?} in {:?} has no one-vertex step",
                        p.name(),
                        h,
                        m,
                        g
                    );
                }
            }
        }
    }
}

/// The single-vertex maximality test agrees with membership in the
/// oracle's inclusion-maximal family.
#[test]
fn is_max_agrees_with_oracle_membership() {
    let graphs: Vec<Graph> = common::exhaustive_undirected_up_to(5)
        .chain(common::random_digraphs(120, 1, 7, 0xBEEF))
        .collect();
    let limit = OracleLimit::default();
    for g in &graphs {
        for p in catalog::all() {
            let maximal = brute_force_all(p, &g.full(), &limit).unwrap();
            for s in subsets(g.vertex_count()) {
                let h = g.induced(s.clone());
                assert_eq!(
                    is_max(p, &h),
                    maximal.contains(&s),
                    "{} on {:?}, set {:?}",
                    p.name(),
                    g,
                    s
                );
            }
        }
    }
}

/// Wherever the almost-satisfies precondition holds, the dispatched
/// restricted solvers (specialized or generic) equal the oracle; the
/// generic fallback equals the oracle unconditionally.
#[test]
fn restricted_solvers_equal_oracle() {
    let graphs: Vec<Graph> = common::exhaustive_undirected_up_to(5)
        .chain(common::random_digraphs(500, 1, 9, 0x5EED))
        .collect();
    let limit = OracleLimit::default();
    for g in &graphs {
        let full = g.full();
        for p in catalog::all() {
            let oracle_all = brute_force_all(p, &full, &limit).unwrap();
            assert_eq!(
                generic_restricted(p, &full, None),
                oracle_all,
                "generic all, {} on {:?}",
                p.name(),
                g
            );
            let applicable = almost_satisfies(p, &full).is_some();
            if applicable {
                assert_eq!(
                    restricted_all(p, &full),
                    oracle_all,
                    "restricted_all, {} on {:?}",
                    p.name(),
                    g
                );
            }
            for v in 0..g.vertex_count() {
                let oracle_v = brute_force_with_vertex(p, &full, v, &limit).unwrap();
                assert_eq!(
                    generic_restricted(p, &full, Some(v)),
                    oracle_v,
                    "generic with {v}, {} on {:?}",
                    p.name(),
                    g
                );
                if applicable {
                    assert_eq!(
                        restricted_with_vertex(p, &full, v),
                        oracle_v,
                        "restricted_with_vertex {v}, {} on {:?}",
                        p.name(),
                        g
                    );
                }
            }
        }
    }
}

/// Exhaustive companion of `restricted_solvers_equal_oracle` one size up,
/// for the dispatched solvers only.
#[test]
fn dispatched_solvers_equal_oracle_exhaustive_n6() {
    let limit = OracleLimit::default();
    for g in common::exhaustive_undirected(6) {
        let full = g.full();
        for p in catalog::all() {
            if almost_satisfies(p, &full).is_none() {
                continue;
            }
            let want = brute_force_all(p, &full, &limit).unwrap();
            assert_eq!(restricted_all(p, &full), want, "{} on {:?}", p.name(), g);
            for v in 0..6 {
                let want_v = brute_force_with_vertex(p, &full, v, &limit).unwrap();
                assert_eq!(
                    restricted_with_vertex(p, &full, v),
                    want_v,
                    "{} with {v} on {:?}",
                    p.name(),
                    g
                );
            }
        }
    }
}

/// The generic fallback solver reproduces the known solution counts of the
/// hub-and-pairs family, where they double per pair.
#[test]
fn generic_solver_counts_on_g2() {
    let p = catalog::by_name("bipartite").unwrap();
    for n in 1..=8usize {
        let g = families::g2(n);
        let sols = restricted_all(p, &g.full());
        assert_eq!(sols.len(), (1 << n) + 1, "g2({n})");
    }
}
