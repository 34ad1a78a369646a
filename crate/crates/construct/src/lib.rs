//! Builds the plane triangulation from the component graph `G_0`:
//!
//! 1. load and validate `G_0` ([`g0`]);
//! 2. replace the hub by `D` ([`d`]) and every other vertex by a triangle;
//! 3. subdivide inter-component edges and hang pendants into S-triangle faces;
//! 4. fill every face ([`steps`]).
//!
//! Every vertex of the result is labelled S, T1, T2, U_TRI or U_D.

pub mod component;
pub mod d;
pub mod error;
pub mod g0;
pub mod labels;
pub mod steps;

pub use component::{census, component_graph, ComponentGraph, FullCensus};
pub use d::build_d;
pub use error::ConstructError;
pub use g0::{load_g0, G0Census, G0};
pub use labels::{
    G0Vertex, LabeledGraph, Registries, Stage, VertexClass, VertexIndex, VertexLabel,
};
pub use steps::{build_full, run, step2, step3, step4, Stages};
