//! The cut `W*` built from a matching of `G_0 - w`.

use crate::cut::Cut;
use crate::ToughnessError;
use construct::{G0Vertex, LabeledGraph, VertexClass, VertexIndex, G0};
use graphcore::MatchingResult;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCut {
    pub cut: Cut,
    /// The `T_2`-vertices on matched edges.
    pub t_star: Vec<usize>,
}

fn key(a: G0Vertex, b: G0Vertex) -> (G0Vertex, G0Vertex) {
    (a.min(b), a.max(b))
}

/// `W* = S ∪ V(A_1) ∪ T* ∪ ⋃ W_R`, where `W_R` takes two vertices of every
/// C3-triangle: for a matched host the two that avoid the `T*` edge, for an
/// unmatched host `x_2, x_3`.
pub fn canonical_cut(
    g: &LabeledGraph,
    g0: &G0,
    m: &MatchingResult,
) -> Result<CanonicalCut, ToughnessError> {
    if g.labels.len() != g.n() {
        return Err(ToughnessError::LabelsMissing(format!(
            "{} labels for {} vertices",
            g.labels.len(),
            g.n()
        )));
    }
    if !m.is_valid_for(&g0.without_hub()) {
        return Err(ToughnessError::MatchingInvalid);
    }
    let missing = |what: String| ToughnessError::LabelsMissing(what);
    let tri: HashMap<G0Vertex, [usize; 3]> = g
        .registries
        .c3_triangles
        .iter()
        .map(|t| (t.host, t.vertices))
        .collect();
    let sub: HashMap<(G0Vertex, G0Vertex), usize> = (0..g.n())
        .filter_map(|v| match g.labels[v].index {
            VertexIndex::Sub { a, b } => Some((key(a, b), v)),
            _ => None,
        })
        .collect();

    let mut w = g.vertices_of(VertexClass::S);
    w.extend(
        g.registries
            .rings
            .first()
            .ok_or_else(|| missing("ring A_1".into()))?,
    );
    let mut t_star = Vec::new();
    let mut done = vec![false; g0.n()];
    for (x, y) in m.pairs() {
        let (nx, ny) = (g0.names[x], g0.names[y]);
        let t = *sub
            .get(&key(nx, ny))
            .ok_or_else(|| missing(format!("subdivision of {nx}{ny}")))?;
        t_star.push(t);
        for (v, name) in [(x, nx), (y, ny)] {
            let r = tri
                .get(&name)
                .ok_or_else(|| missing(format!("triangle of {name}")))?;
            let rep = r
                .iter()
                .position(|&z| g.graph.has_edge(z, t))
                .ok_or_else(|| missing(format!("{name} not on its T* vertex")))?;
            w.extend((0..3).filter(|&i| i != rep).map(|i| r[i]));
            done[v] = true;
        }
    }
    w.extend(&t_star);
    for v in (0..g0.n()).filter(|&v| v != g0.hub && !done[v]) {
        let name = g0.names[v];
        let r = tri
            .get(&name)
            .ok_or_else(|| missing(format!("triangle of {name}")))?;
        w.extend([r[1], r[2]]);
    }
    t_star.sort_unstable();
    let cut = Cut::new(&g.graph.to_graph(), &w)?;
    Ok(CanonicalCut { cut, t_star })
}
