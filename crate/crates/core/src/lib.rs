//! Chordal graph recognition and Grundy coloring.
//!
//! The crate is organised around a dense, undirected [`Graph`]:
//!
//! * [`graph`]: construction, complement and induced subgraphs, topology
//!   changes, seeded generators and DIMACS `.col` I/O.
//! * [`chordal`]: simplicial vertices, perfect elimination orderings,
//!   chordal and split recognition, maximum cliques of chordal graphs.
//! * [`coloring`]: first-fit coloring, the elimination-order greedy
//!   algorithm, Grundy verification, bound reports and incremental repair.
//! * [`oracle`]: exponential exact computations (Γ, χ, α, induced holes)
//!   used as ground truth on small graphs.
//!
//! Vertex ids are 0-based everywhere in the API. Colors are 1-based.

pub mod chordal;
pub mod coloring;
mod error;
pub mod graph;
pub mod oracle;

pub use chordal::{
    elimination_waves, is_chordal, is_simplicial, is_split, max_clique_chordal,
    perfect_elimination_order, simplicial_vertices, verify_peo, Clique, EliminationOrder,
    NotChordal,
};
pub use coloring::{
    first_fit_color, greedy_grundy_chordal, grundy_bounds, is_grundy_coloring, is_proper,
    recolor_after_change, BoundCheck, BoundsReport, BoundsRequest, Coloring, Direction, Recoloring,
};
pub use error::{Error, Result};
pub use graph::{
    all_labeled_graphs, generate, generate_with, parse_dimacs, write_dimacs, ChangeEffect,
    Generated, Graph, GraphChange, GraphFamily, SplitPartition, Vertex,
};
pub use oracle::OracleLimits;
