//! Shared inputs for the criterion benches.

use grundy_core::{generate, Graph, GraphFamily};

/// A seeded k-tree on `n` vertices.
pub fn k_tree(n: usize, k: usize, seed: u64) -> Graph {
    generate(&GraphFamily::KTree { n, k }, seed)
        .expect("valid k-tree parameters")
        .graph
}

/// A seeded G(n, p) graph.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    generate(&GraphFamily::Gnp { n, p }, seed)
        .expect("valid gnp parameters")
        .graph
}
