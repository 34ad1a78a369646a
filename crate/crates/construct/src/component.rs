//! The component graph of a labelled construction and the census records.

use crate::error::ConstructError;
use crate::g0::{G0Census, G0};
use crate::labels::{G0Vertex, LabeledGraph, VertexClass};
use graphcore::{EmbeddedGraph, Graph};
use serde::{Deserialize, Serialize};

/// Result of deleting S, smoothing or deleting T, and contracting what is left.
#[derive(Debug, Clone)]
pub struct ComponentGraph {
    pub graph: Graph,
    /// Vertices of each contracted component.
    pub members: Vec<Vec<usize>>,
    /// The component-graph vertex each component carries in its labels, if they agree.
    pub hosts: Vec<Option<G0Vertex>>,
}

pub fn component_graph(g: &LabeledGraph) -> Result<ComponentGraph, ConstructError> {
    if g.labels.len() != g.n() {
        return Err(ConstructError::LabelsMissing);
    }
    let abstract_graph = g.graph.to_graph();
    let n = g.n();
    let is_s = |v: usize| g.labels[v].class == VertexClass::S;
    let is_t = |v: usize| g.labels[v].class.is_t();
    let removed: Vec<bool> = (0..n).map(|v| is_s(v) || is_t(v)).collect();
    let (comp, count) = abstract_graph.components_without(&removed);
    let mut members = vec![Vec::new(); count];
    for v in (0..n).filter(|&v| !removed[v]) {
        members[comp[v]].push(v);
    }
    let mut graph = Graph::new(count);
    for t in (0..n).filter(|&v| is_t(v)) {
        let ends: Vec<usize> = abstract_graph
            .neighbors(t)
            .iter()
            .copied()
            .filter(|&x| !is_s(x))
            .collect();
        match ends[..] {
            [] | [_] => {}
            [a, b] => {
                if removed[a] || removed[b] {
                    return Err(ConstructError::violation(
                        "t_neighbours",
                        "two U-vertices",
                        t,
                    ));
                }
                if comp[a] == comp[b] {
                    return Err(ConstructError::violation(
                        "smoothing",
                        "distinct components",
                        t,
                    ));
                }
                if !graph.add_edge(comp[a], comp[b]) {
                    return Err(ConstructError::violation("smoothing", "simple result", t));
                }
            }
            _ => {
                return Err(ConstructError::violation(
                    "t_degree",
                    "at most 2 outside S",
                    ends.len(),
                ))
            }
        }
    }
    let hosts = members
        .iter()
        .map(|vs| {
            let h = g.host(vs[0])?;
            vs.iter().all(|&v| g.host(v) == Some(h)).then_some(h)
        })
        .collect();
    Ok(ComponentGraph {
        graph,
        members,
        hosts,
    })
}

impl ComponentGraph {
    /// Label-guided isomorphism test: the host map must be a bijection onto
    /// `V(G_0)` carrying edges exactly onto edges.
    pub fn matches(&self, g0: &G0) -> Result<(), String> {
        if self.graph.n() != g0.n() {
            return Err(format!(
                "{} components, expected {}",
                self.graph.n(),
                g0.n()
            ));
        }
        let mut image = vec![usize::MAX; self.graph.n()];
        let mut hit = vec![false; g0.n()];
        for (c, h) in self.hosts.iter().enumerate() {
            let h = h.ok_or_else(|| format!("component {c} has mixed hosts"))?;
            let v = g0.id(h).ok_or_else(|| format!("unknown host {h}"))?;
            if std::mem::replace(&mut hit[v], true) {
                return Err(format!("host {h} used twice"));
            }
            image[c] = v;
        }
        let target = g0.graph.to_graph();
        if self.graph.m() != target.m() {
            return Err(format!("{} edges, expected {}", self.graph.m(), target.m()));
        }
        for (a, b) in self.graph.edges() {
            if !target.has_edge(image[a], image[b]) {
                return Err(format!(
                    "edge {}-{} absent",
                    g0.names[image[a]], g0.names[image[b]]
                ));
            }
        }
        Ok(())
    }
}

/// Sizes of the whole graph and of every vertex class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullCensus {
    pub n: usize,
    pub e: usize,
    pub f: usize,
    pub s: usize,
    pub t1: usize,
    pub t2: usize,
    pub u_tri: usize,
    pub u_d: usize,
}

impl FullCensus {
    pub fn t(&self) -> usize {
        self.t1 + self.t2
    }

    pub fn u(&self) -> usize {
        self.u_tri + self.u_d
    }
}

fn faces_of(g: &EmbeddedGraph) -> usize {
    g.faces().cycles.len()
}

pub fn census(g: &LabeledGraph) -> FullCensus {
    let count = |c: VertexClass| g.labels.iter().filter(|l| l.class == c).count();
    FullCensus {
        n: g.n(),
        e: g.graph.m(),
        f: faces_of(&g.graph),
        s: count(VertexClass::S),
        t1: count(VertexClass::T1),
        t2: count(VertexClass::T2),
        u_tri: count(VertexClass::UTri),
        u_d: count(VertexClass::UD),
    }
}

pub fn g0_census(g0: &G0) -> G0Census {
    g0.census()
}
