//! Shared instance builders for the benchmarks.

use rigidity_core::gen;
use rigidity_core::graph::{Graph, Multigraph};

/// A chain of glued circuits: a mid-size matroid-connected instance.
pub fn chained_circuits(blocks: usize) -> Graph {
    gen::glued_circuit_graph(blocks, 2024)
}

pub fn dense_random(n: usize) -> Graph {
    gen::random_graph(n, 0.5, 7)
}

pub fn packing_instance(n: usize, m: usize) -> Multigraph {
    gen::random_multigraph_spanning(n, m, 11)
}
