//! ⅟r-Ramsey graphs for cyclicity and cliques.
//!
//! A graph is ⅟r-Ramsey for cyclicity when every `(r+1)`-colouring of its
//! edges leaves a cycle that misses some colour. Membership reduces to a
//! density condition on subgraphs, decided here with a pebble game and
//! certified either by a dense subgraph or by a colouring in which every
//! cycle is rainbow-complete.

pub mod chromatic;
pub mod clique;
pub mod cyclicity;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod planarity;
pub mod sparsity;
pub mod surgery;

pub use clique::{
    arrows_clique, exact_number_small, lower_bound_probabilistic, stirling2, upper_bound_closed_form,
    upper_bound_diagonal, upper_bound_recursive,
};
pub use cyclicity::{
    find_minimal_subgraph, has_diamond_minor, is_minimal_cyclicity, is_ramsey_cyclicity, minimal_profile_check,
    verify_colouring, witness_colouring, EdgeColouring,
};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};
pub use sparsity::{forest_decomposition, pebble_sparse};
