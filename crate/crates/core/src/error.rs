use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("edge endpoint {0} references an undeclared vertex")]
    DanglingEndpoint(VertexId),
    #[error("root declared on an undirected graph")]
    RootOnUndirected,
    #[error("weights must be present on either all edges or none")]
    MixedWeights,
    #[error("subset enumeration would visit {candidates} sets, above the cap of {cap}; raise the cap to proceed")]
    GuardExceeded { candidates: u128, cap: u128 },
    #[error("matroid has a loop (element {0}); chromatic number undefined")]
    MatroidLoop(usize),
    #[error("ground set of size {0} exceeds the 64-element oracle limit")]
    GroundSetTooLarge(usize),
    #[error("graph must be connected")]
    Disconnected,
    #[error("notion requires {0}")]
    IncompatibleNotion(&'static str),
    #[error("operation requires a weighted graph")]
    Unweighted,
    #[error("operation requires an unweighted graph")]
    Weighted,
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line")]
    Malformed,
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("edge endpoint {0} references an undeclared vertex")]
    DanglingEndpoint(VertexId),
    #[error("root declared on an undirected graph")]
    RootOnUndirected,
}
