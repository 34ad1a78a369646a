//! File formats: the JSON embedding, graph6 and DOT.
//!
//! JSON embedding (`toughtri-embedding/1`):
//!
//! ```text
//! {
//!   "format": "toughtri-embedding/1",
//!   "stage": "d" | "g1" | "g2" | "g",
//!   "vertices": [{"id": 0, "class": "u_d", "index": {"kind": "ring", "ring": 1, "pos": 1}}, ...],
//!   "rotation": {"0": [1, 39, ...], ...},
//!   "registries": {"rings": [...], "c3_triangles": [...], "s_triangles": [...],
//!                  "spokes": [...], "c1": [...], "c": [...]}
//! }
//! ```
//!
//! Ids are dense from 0 and rotations list neighbours clockwise.

use crate::CliError;
use construct::{LabeledGraph, Registries, Stage, VertexClass, VertexIndex, VertexLabel};
use graphcore::{EmbeddedGraph, Graph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

pub const EMBEDDING_FORMAT: &str = "toughtri-embedding/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    pub class: VertexClass,
    pub index: VertexIndex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingFile {
    pub format: String,
    pub stage: Stage,
    pub vertices: Vec<VertexRecord>,
    pub rotation: BTreeMap<usize, Vec<usize>>,
    pub registries: Registries,
}

pub fn to_embedding_file(g: &LabeledGraph) -> EmbeddingFile {
    EmbeddingFile {
        format: EMBEDDING_FORMAT.to_string(),
        stage: g.stage,
        vertices: g
            .labels
            .iter()
            .enumerate()
            .map(|(id, l)| VertexRecord {
                id,
                class: l.class,
                index: l.index,
            })
            .collect(),
        rotation: (0..g.n())
            .map(|v| (v, g.graph.rotation(v).to_vec()))
            .collect(),
        registries: g.registries.clone(),
    }
}

pub fn to_json(g: &LabeledGraph) -> String {
    serde_json::to_string(&to_embedding_file(g)).expect("serializable")
}

pub fn from_embedding_file(file: EmbeddingFile) -> Result<LabeledGraph, CliError> {
    if file.format != EMBEDDING_FORMAT {
        return Err(CliError::Input(format!("unknown format {:?}", file.format)));
    }
    let n = file.vertices.len();
    if file.vertices.iter().enumerate().any(|(i, v)| v.id != i) {
        return Err(CliError::Input("vertex ids must be 0..n in order".into()));
    }
    if file.rotation.len() != n || file.rotation.keys().enumerate().any(|(i, &k)| i != k) {
        return Err(CliError::Input(
            "rotation must list every vertex id once".into(),
        ));
    }
    let graph = EmbeddedGraph::from_rotation(file.rotation.into_values().collect())
        .map_err(|e| CliError::Input(e.to_string()))?;
    let labels = file
        .vertices
        .iter()
        .map(|v| VertexLabel {
            class: v.class,
            index: v.index,
        })
        .collect();
    Ok(LabeledGraph {
        graph,
        labels,
        registries: file.registries,
        stage: file.stage,
    })
}

pub fn from_json(text: &str) -> Result<LabeledGraph, CliError> {
    let file: EmbeddingFile =
        serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
    from_embedding_file(file)
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
}

/// graph6 without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("printable ascii")
}

pub fn from_graph6(text: &str) -> Result<Graph, CliError> {
    let bad = |why: &str| CliError::Input(format!("graph6: {why}"));
    let s = text
        .trim()
        .strip_prefix(">>graph6<<")
        .unwrap_or(text.trim())
        .as_bytes();
    if s.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let digits = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |n, &b| n << 6 | (b - 63) as usize)
    };
    let (n, body) = match s {
        [126, 126, rest @ ..] if rest.len() >= 6 => (digits(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (digits(&rest[..3]), &rest[3..]),
        [b, rest @ ..] if *b != 126 => ((b - 63) as usize, rest),
        _ => return Err(bad("truncated size")),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(bad("wrong body length"));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// An undirected DOT graph coloured by vertex class.
pub fn to_dot(g: &LabeledGraph) -> String {
    let colour = |c: VertexClass| match c {
        VertexClass::S => "red",
        VertexClass::T1 | VertexClass::T2 => "blue",
        VertexClass::UTri => "gray",
        VertexClass::UD => "black",
    };
    let mut out = String::from("graph G {\n  node [shape=point];\n");
    for (v, l) in g.labels.iter().enumerate() {
        writeln!(out, "  {v} [color={}];", colour(l.class)).unwrap();
    }
    for (u, v) in g.graph.to_graph().edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcore::generators::{complete, cycle, path, petersen};

    // Reference strings produced by networkx.
    const PATH_70: &str = "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@???????????G";

    #[test]
    fn graph6_golden() {
        assert_eq!(to_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(to_graph6(&cycle(6)), "EhEG");
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::new(0)), "?");
        assert_eq!(to_graph6(&path(70)), PATH_70);
    }

    #[test]
    fn graph6_decodes() {
        for g in [petersen(), cycle(6), complete(4), path(70), Graph::new(0)] {
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
        assert!(from_graph6("IheA").is_err());
    }
}
