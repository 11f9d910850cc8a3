//! Brute-force ground truth: concrete rings, their Cayley graphs, and exact
//! graph invariants computed without any closed form.

mod eigen;
pub mod field;
mod graph;
mod ring;
mod walks;

pub use eigen::{integral_spectrum, integral_spectrum_with};
pub use field::GaloisField;
pub use graph::{
    cayley_graph, complete_graph, cycle_graph, tensor_product, transform, transform_with, Graph,
    Transform,
};
pub use ring::{realize_ring, realize_ring_with, ConcreteRing, LocalRing};
pub use walks::{count_cycles, exact_moment, exact_moments, walk_moments};

/// Size guards for graph construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_ring_order: u64,
    pub max_line_edges: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ring_order: 4096,
            max_line_edges: 200_000,
        }
    }
}
