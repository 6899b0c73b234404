//! Constructive double-star decompositions, one submodule per family of
//! hypotheses: regular bipartite graphs, even-regular graphs, and
//! odd-regular graphs via the K2-product constructions.

pub mod bipartite;
pub mod cycle;
pub mod even;
pub mod odd;

pub use bipartite::{
    decompose_bipartite_degree_divisible, decompose_bipartite_divisible,
    decompose_bipartite_two_sizes, decompose_regular_bipartite, split_vertices,
};
pub use cycle::{assign_cycle_pendants, CycleAssignment, DEFAULT_ASSIGN_BUDGET};
pub use even::{decompose_even_divisible, decompose_even_regular};
pub use odd::{
    decompose_odd_common_neighbor, decompose_odd_four_shapes, decompose_odd_one_factorable,
    decompose_odd_triangle_free, decompose_odd_two_matchings,
    decompose_odd_two_matchings_traced, OddPipelineTrace,
};
