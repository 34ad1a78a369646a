//! Graphs, plane embeddings given by rotation systems, maximum matchings and
//! vertex connectivity.

pub mod connectivity;
pub mod embedding;
pub mod graph;
pub mod matching;

pub use connectivity::vertex_connectivity;
pub use embedding::{
    faces, is_plane_triangulation, Dart, EmbeddedGraph, EmbeddingError, FaceCycle, Faces,
};
pub use graph::{generators, Graph};
pub use matching::{max_matching, MatchingResult};

/// The square of `g`: `uv` is an edge iff `u` and `v` are at distance 1 or 2.
pub fn square(g: &Graph) -> Graph {
    g.square()
}
