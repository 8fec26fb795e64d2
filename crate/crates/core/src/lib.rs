//! Enumeration of all maximal induced subgraphs of a graph that satisfy a
//! pluggable graph property.
//!
//! A [`Property`] is a set of graphs given by a
//! polynomial membership predicate together with a closure class: closed
//! under all induced subgraphs (*hereditary*), under connected induced
//! subgraphs (*connected-hereditary*), or under rooted induced subgraphs
//! (*rooted-hereditary*). Given a property and an arbitrary directed graph,
//! the engines in this crate list every inclusion-maximal induced subgraph
//! belonging to the property:
//!
//! * [`hered::gen_hered`] — candidate-pool engine for hereditary
//!   properties, driven by an input-restricted solver;
//! * [`vcs::gen_with_vertex`] — two-stack engine for connected- and
//!   rooted-hereditary properties, listing the maximal subgraphs through a
//!   chosen vertex, driven by an io-restricted solver;
//! * [`hered::gen_ordered`] — vertex-ordered variant for trees (connected
//!   case) and DAGs (rooted case) with per-solution cost linear in the
//!   output count;
//! * [`vcs::enumerate_incremental`] — streaming wrapper that hands each
//!   solution to a sink as soon as it is final, with an optional emission
//!   limit;
//! * [`oracle::brute_force_all`] — exponential reference enumerator used as
//!   ground truth in tests.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only adds wall-clock timing to [`stats::EngineStats`].

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod catalog;
pub mod graph;
pub mod hered;
pub mod oracle;
pub mod property;
pub mod stats;
pub mod vcs;

pub use graph::{Graph, GraphError, InducedSubgraph, NeighborMode, VertexId, VertexSet};
pub use property::{Property, PropertyClass, SolutionSet};
pub use stats::EngineStats;
