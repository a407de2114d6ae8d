//! Combinatorial 1-plane drawings.
//!
//! A drawing is kept as its planarization, a rotation system in which every
//! crossing is a degree-4 fake vertex. On top of that the crate derives
//! skeletons and their colored duals, decides maximality and immovability by
//! exhaustive edge-insertion search, computes vertex connectivity, and
//! evaluates the known crossing-number and edge-count bounds exactly.

pub mod analyze;
pub mod drawing;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod ids;
pub mod maximality;
pub mod properties;
pub mod transform;

pub use drawing::{
    plane_from_faces, validate, Edge, FaceKind, FaceSet, Half, OnePlaneGraph, PlanarMap,
    RawDrawing, RawEdge, RawVertex, Remap, Segment, ValidationError, VertexKind, Violation,
};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use ids::{DartId, EdgeId, FaceId, VertexId};
