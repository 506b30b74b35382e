use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("vertex {0} is not in the graph")]
    MissingVertex(Vertex),

    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),

    #[error("graph is acyclic")]
    Acyclic,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph has {vertices} vertices, above the cap of {cap} (raise it with --cap)")]
    CapExceeded { vertices: usize, cap: usize },

    #[error("search budget of {budget} states exhausted (raise it with --budget)")]
    BudgetExceeded { budget: u64 },

    #[error("graph is 1/{r}-Ramsey for cyclicity; violating subgraph has {} vertices and {} edges", .witness.v(), .witness.e())]
    Member { r: usize, witness: Graph },

    #[error("graph is not 1/{r}-Ramsey for cyclicity")]
    NonMember { r: usize },

    #[error("graph is not minimal 1/{r}-Ramsey for cyclicity")]
    NotMinimal { r: usize },

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("colouring error: {0}")]
    Colouring(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
