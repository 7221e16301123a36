//! Combinatorial rigidity of graphs in the plane, and of body-bar frameworks
//! in every dimension.
//!
//! The library decides generic rigidity, global rigidity, and global
//! linkedness of vertex pairs, and computes the supporting structure: matroid
//! components and bridges of the 2-dimensional rigidity matroid via a
//! (2,3)-sparsity pebble game, 3-block decompositions with virtual-edge
//! bookkeeping, globally linked clusters with a shellable ordering, tree
//! packings and superbricks of multigraphs, and body-bar graphs. An exact
//! rational rank oracle over random integer realizations cross-validates the
//! combinatorial answers, and a reflection construction produces explicit
//! equivalent, non-congruent realizations refuting linkedness across
//! 2-separators.

pub mod blocks;
pub mod bodybar;
pub mod error;
pub mod gen;
pub mod graph;
pub mod linked;
pub mod numeric;
pub mod pebble;

pub use blocks::{shellable_ordering, three_blocks, Block, SeparatorInfo, ThreeBlockTree};
pub use bodybar::{
    body_bar_graph, is_globally_linked_body_bar, is_globally_rigid_body_bar, is_highly_k_tree_connected,
    is_k_tree_connected, is_rigid_body_bar, matroid_union_bridges, matroid_union_packing,
    matroid_union_rank, superbricks, BodyBarGraph, ForestPacking, SuperbrickPartition,
};
pub use error::{Error, Result};
pub use graph::{Graph, Multigraph, VertexPartition};
pub use linked::{
    globally_linked_2d_witness, globally_linked_closure, globally_linked_clusters,
    is_globally_linked_1d, is_globally_linked_2d, is_globally_rigid_2d, is_r2_connected,
    uniquely_localizable, ClusterCover, LinkWitness,
};
pub use numeric::{
    check_equivalent, exact_rank, realize_random, reflection_witness, rigidity_matrix, Coord,
    Framework, RigidityMatrix,
};
pub use pebble::{
    is_r2_independent, is_redundantly_rigid_2d, is_rigid_2d, r2_bridges, r2_components, r2_rank,
    PebbleGame, R2Component, R2Decomposition,
};
