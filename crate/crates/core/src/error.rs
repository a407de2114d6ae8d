use thiserror::Error;

use crate::drawing::ValidationError;
use crate::ids::{EdgeId, FaceId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown face {0}")]
    UnknownFace(FaceId),
    #[error("bad explicit skeleton selection: {0}")]
    BadExplicitSelection(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("not a triangulation")]
    NotTriangulation,
    #[error("drawing is not maximal")]
    NotMaximal,
    #[error("face {0} is not a quadrangle")]
    FaceNotQuad(FaceId),
    #[error("boundary of face {0} is not a simple cycle of true vertices")]
    BoundaryNotSimple(FaceId),
    #[error("diagonal {0}{1} already exists")]
    DiagonalExists(VertexId, VertexId),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
