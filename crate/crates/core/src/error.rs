use thiserror::Error;

use crate::simplex::{Level, Simplex, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {requested} is out of range for a simplex of dimension {dim}")]
    Dimension { requested: usize, dim: usize },

    #[error("vertex ids are 1-based, got 0")]
    ZeroVertex,

    #[error("vertex {0} appears more than once")]
    RepeatedVertex(VertexId),

    #[error("a simplex needs at least one vertex")]
    EmptySimplex,

    #[error("vertex {vertex} is outside 1..={n}")]
    UnknownVertex { vertex: VertexId, n: usize },

    #[error("filtration value {level} exceeds the range bound {t}")]
    FiltrationOutOfRange { level: Level, t: Level },

    #[error("simplex [{0}] is not in the complex")]
    NotInComplex(Simplex),

    #[error("cannot insert [{simplex}] at level {level}: coface [{coface}] already has level {coface_level}")]
    PreconditionViolated {
        simplex: Simplex,
        level: Level,
        coface: Simplex,
        coface_level: Level,
    },

    #[error("([{sigma}], [{tau}]) is not a free pair")]
    NotAFreePair { sigma: Simplex, tau: Simplex },

    #[error("vertex map is invalid: {0}")]
    InvalidVertexMap(String),

    #[error("filtration is not monotone: [{face}] at level {face_level} lies under [{coface}] at level {coface_level}")]
    Monotonicity {
        face: Simplex,
        face_level: Level,
        coface: Simplex,
        coface_level: Level,
    },

    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(VertexId, VertexId),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("landmark set is empty")]
    EmptyLandmarks,

    #[error("invalid point set: {0}")]
    InvalidPoints(String),

    #[error("invalid relaxation: {0}")]
    InvalidRelaxation(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
