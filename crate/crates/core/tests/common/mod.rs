//! Graph generators shared by the integration suites.
#![allow(dead_code)] // each test target compiles its own copy

use maxsub_core::{Graph, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every labeled simple undirected graph on exactly `n` vertices (one per
/// subset of the possible edges), rooted at 0 when nonempty so the rooted
/// properties are exercised too.
pub fn exhaustive_undirected(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<(VertexId, VertexId)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::undirected(n, &edges).unwrap();
        if n > 0 {
            g.with_root(0).unwrap()
        } else {
            g
        }
    })
}

/// Every labeled simple undirected graph on at most `max_n` vertices.
pub fn exhaustive_undirected_up_to(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(exhaustive_undirected)
}

/// `count` seeded random digraphs with `min_n..=max_n` vertices, varying
/// density, and a root most of the time.
pub fn random_digraphs(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let density = rng.gen_range(0.05..0.6);
            let edges: Vec<(VertexId, VertexId)> = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v)
                .filter(|_| rng.gen_bool(density))
                .collect();
            let g = Graph::directed(n, &edges).unwrap();
            if n > 0 && rng.gen_bool(0.75) {
                let r = rng.gen_range(0..n);
                g.with_root(r).unwrap()
            } else {
                g
            }
        })
        .collect()
}

/// Path on `n` vertices with undirected edges.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(VertexId, VertexId)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::undirected(n, &edges).unwrap().with_root(0).unwrap()
}

/// Cycle on `n >= 3` vertices with undirected edges.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(VertexId, VertexId)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::undirected(n, &edges).unwrap().with_root(0).unwrap()
}

/// Star with center 0 and `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    let edges: Vec<(VertexId, VertexId)> = (1..n).map(|i| (0, i)).collect();
    Graph::undirected(n, &edges).unwrap().with_root(0).unwrap()
}
