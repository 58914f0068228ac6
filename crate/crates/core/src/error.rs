use thiserror::Error;

/// Errors produced by graph construction, model validation and the counting engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),

    #[error("invalid label {label:?}: {reason}")]
    InvalidLabel { label: String, reason: String },

    #[error("graph is not two-layered: vertex {0} has both predecessors and successors")]
    NotTwoLayered(usize),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("vertex {0} has label 0; decision models require positive labels")]
    ZeroLabel(usize),

    #[error("decision vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vertex {0} is not a player")]
    NotAPlayer(usize),

    #[error("enumeration over {size} vertices exceeds the brute-force cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("graph is not strong hierarchical at vertex {vertex}: {reason}")]
    NotHierarchical { vertex: usize, reason: String },

    #[error("not a star influence game: {0}")]
    NotAStar(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
