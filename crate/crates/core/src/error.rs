use thiserror::Error;

use crate::graph::VertexId;

/// Errors surfaced by the library. The CLI maps every variant to exit code 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexRange { line: usize, vertex: i64, n: usize },

    #[error("line {line}: loops are not allowed in input graphs")]
    LoopInInput { line: usize },

    #[error("vertex {0} does not exist")]
    NoSuchVertex(VertexId),

    #[error("edge {0} does not exist")]
    NoSuchEdge(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph must have at least {required} vertices, found {found}")]
    TooSmall { required: usize, found: usize },

    #[error("instance too large: {n} vertices exceeds the cap of {cap}")]
    Capacity { n: usize, cap: usize },

    #[error("component containing vertex {0} is a cycle of degree-2 vertices and cannot be suppressed")]
    PureCycle(VertexId),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("rule {rule} does not match: {reason}")]
    TemplateMismatch { rule: String, reason: String },

    #[error("rule {rule} is not admissible: {reason}")]
    Inadmissible { rule: String, reason: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("not a spanning forest: {0}")]
    NotSpanning(String),

    #[error("sampling budget exhausted after {attempts} attempts: {detail}")]
    SamplingExhausted { attempts: usize, detail: String },

    #[error("trace error: {0}")]
    Trace(String),
}

pub type Result<T> = std::result::Result<T, Error>;
