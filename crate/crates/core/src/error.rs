use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    Loop(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),
    #[error("size bound exceeded: n = {n}, bound = {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("search budget exhausted: {0}")]
    Budget(String),
    #[error("graph is not long-unichord-free: {0}")]
    NotInClass(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
