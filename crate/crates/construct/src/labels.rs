//! Vertex classes, construction coordinates and structure registries.

use graphcore::EmbeddedGraph;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A vertex of the component graph: the hub `w`, a cycle vertex `v_i` or a spoke vertex `u_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum G0Vertex {
    Hub,
    V(u32),
    U(u32),
}

impl fmt::Display for G0Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            G0Vertex::Hub => write!(f, "w"),
            G0Vertex::V(i) => write!(f, "v{i}"),
            G0Vertex::U(i) => write!(f, "u{i}"),
        }
    }
}

impl FromStr for G0Vertex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "w" {
            return Ok(G0Vertex::Hub);
        }
        let bad = || format!("bad vertex name {s:?}");
        let (tag, rest) = s.split_at_checked(1).ok_or_else(bad)?;
        let i: u32 = rest.parse().map_err(|_| bad())?;
        if i == 0 || rest.starts_with('0') {
            return Err(bad());
        }
        match tag {
            "v" => Ok(G0Vertex::V(i)),
            "u" => Ok(G0Vertex::U(i)),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for G0Vertex {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<G0Vertex> for String {
    fn from(v: G0Vertex) -> String {
        v.to_string()
    }
}

/// Partition classes of the final graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    S,
    T1,
    T2,
    UTri,
    UD,
}

impl VertexClass {
    pub fn is_t(self) -> bool {
        matches!(self, VertexClass::T1 | VertexClass::T2)
    }

    pub fn is_u(self) -> bool {
        matches!(self, VertexClass::UTri | VertexClass::UD)
    }
}

/// Construction coordinates of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexIndex {
    /// `a_{ring,pos}` of D, both 1-based.
    Ring { ring: u32, pos: u32 },
    /// Vertex `k` (1..=3) of the triangle replacing `host`.
    Tri { host: G0Vertex, k: u32 },
    /// Subdivision vertex of the component-graph edge `a b`.
    Sub { a: G0Vertex, b: G0Vertex },
    /// Pendant attached to the vertex with id `host`.
    Pendant { host: usize },
    /// Centre placed in face `face` of the component graph.
    Face { face: usize },
    /// Vertex `s_k` of the triangle placed in the face of S-group `group`.
    STri { group: usize, k: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabel {
    pub class: VertexClass,
    pub index: VertexIndex,
}

/// `R(v)`: the triangle replacing a non-hub vertex, listed as `[x_1, x_2, x_3]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct C3Triangle {
    pub host: G0Vertex,
    pub vertices: [usize; 3],
}

/// A triangle `s_1 s_2 s_3` with its pendants `x_1 x_2 x_3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct STriangle {
    pub group: usize,
    pub vertices: [usize; 3],
    pub pendants: [usize; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpokeKind {
    Long,
    Short,
}

/// `w t1 u_{i,1} u_{i,2} t2 v_{j,3}` or `w t1 v_{j,3}` with `w` on `A_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spoke {
    pub kind: SpokeKind,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Registries {
    /// `A_1..A_4`, each in index order.
    pub rings: Vec<Vec<usize>>,
    pub c3_triangles: Vec<C3Triangle>,
    pub s_triangles: Vec<STriangle>,
    pub spokes: Vec<Spoke>,
    /// `C_1 = v_{1,1} v_{1,2} v_{2,1} ... v_{86,2}`.
    pub c1: Vec<usize>,
    /// `C_1` with its subdivision vertices.
    pub c: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    D,
    G1,
    G2,
    G,
}

/// An embedded graph whose vertices carry construction labels.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledGraph {
    pub graph: EmbeddedGraph,
    pub labels: Vec<VertexLabel>,
    pub registries: Registries,
    pub stage: Stage,
}

impl LabeledGraph {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn class(&self, v: usize) -> VertexClass {
        self.labels[v].class
    }

    pub fn vertices_of(&self, class: VertexClass) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| self.labels[v].class == class)
            .collect()
    }

    /// The component-graph vertex a U-vertex belongs to.
    pub fn host(&self, v: usize) -> Option<G0Vertex> {
        match self.labels[v].index {
            VertexIndex::Ring { .. } => Some(G0Vertex::Hub),
            VertexIndex::Tri { host, .. } => Some(host),
            _ => None,
        }
    }

    /// Vertex id of `a_{ring,pos}`.
    pub fn ring_vertex(&self, ring: usize, pos: usize) -> usize {
        self.registries.rings[ring - 1][pos - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in ["w", "v1", "v86", "u34"] {
            let v: G0Vertex = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        for s in ["", "x1", "v0", "v01", "u", "vv"] {
            assert!(s.parse::<G0Vertex>().is_err(), "{s}");
        }
    }
}
