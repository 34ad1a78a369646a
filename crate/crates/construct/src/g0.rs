//! The component graph `G_0`: data file, validation and census.
//!
//! File format (`g0-embedding/1`, JSON):
//!
//! ```text
//! {
//!   "format": "g0-embedding/1",
//!   "rotation_order": "clockwise",
//!   "hub": "w",
//!   "cycle": ["v1", ..., "v86"],
//!   "vertices": [{"name": "v1", "colour": "light_gray"}, ...],
//!   "rotation": {"v1": ["v20", "v86", "v2"], ...},
//!   "s_triangle_groups": [{"kind": "hub", "members": ["u1", "v5", "u2"]}, ...]
//! }
//! ```
//!
//! Vertex ids follow the order of `vertices`. Each rotation lists neighbours
//! clockwise. Colours are `white` (the colour class containing the hub),
//! `light_gray` (other filled vertices), `gray` and `black` (filled, degree 2).
//! A group of kind `hub` lies on a face through the hub; a `central` group lies
//! on a face bounded by cycle vertices only.

use crate::error::{expect_eq, ConstructError};
use crate::labels::G0Vertex;
use graphcore::{EmbeddedGraph, FaceCycle, Graph};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

pub const BUNDLED_G0: &str = include_str!("../data/g0.json");
pub const FORMAT: &str = "g0-embedding/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Colour {
    White,
    LightGray,
    Gray,
    Black,
}

impl Colour {
    pub fn is_filled(self) -> bool {
        self != Colour::White
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Hub,
    Central,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub name: G0Vertex,
    pub colour: Colour,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub kind: GroupKind,
    pub members: Vec<G0Vertex>,
}

/// Serialized form of `G_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct G0File {
    pub format: String,
    pub rotation_order: String,
    pub hub: G0Vertex,
    pub cycle: Vec<G0Vertex>,
    pub vertices: Vec<VertexEntry>,
    pub rotation: BTreeMap<G0Vertex, Vec<G0Vertex>>,
    pub s_triangle_groups: Vec<GroupEntry>,
}

/// Three degree-2 vertices sharing an S-triangle face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SGroup {
    pub kind: GroupKind,
    pub members: [usize; 3],
    /// Index into `G0::faces`.
    pub face: usize,
}

/// `(p, q, n, e, f, f_s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct G0Census {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub e: usize,
    pub f: usize,
    pub f_s: usize,
}

/// Expected shape of `G_0`.
pub mod expected {
    pub const N: usize = 121;
    pub const E: usize = 168;
    pub const F: usize = 49;
    pub const HUB_DEGREE: usize = 39;
    pub const DEGREE_2: usize = 63;
    pub const DEGREE_3: usize = 57;
    pub const CYCLE_LEN: usize = 86;
    pub const SPOKE_VERTICES: usize = 34;
    pub const S_FACES: usize = 21;
    pub const MIN_GIRTH: usize = 8;
}

/// A validated component graph.
#[derive(Debug, Clone)]
pub struct G0 {
    pub graph: EmbeddedGraph,
    pub names: Vec<G0Vertex>,
    pub colours: Vec<Colour>,
    pub hub: usize,
    /// `v_1 .. v_86`.
    pub cycle: Vec<usize>,
    /// `u_1 .. u_34`.
    pub spoke_vertices: Vec<usize>,
    pub groups: Vec<SGroup>,
    pub faces: Vec<FaceCycle>,
    index: HashMap<G0Vertex, usize>,
}

/// Parses and validates a `G_0` file.
pub fn load_g0(text: &str) -> Result<G0, ConstructError> {
    let file: G0File =
        serde_json::from_str(text).map_err(|e| ConstructError::Parse(e.to_string()))?;
    G0::from_file(&file)
}

impl G0 {
    /// The data file shipped with the crate.
    pub fn bundled() -> Result<G0, ConstructError> {
        load_g0(BUNDLED_G0)
    }

    pub fn id(&self, v: G0Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// The abstract graph `G_0 - w` on the same vertex ids; the hub is isolated.
    pub fn without_hub(&self) -> Graph {
        let mut g = self.graph.to_graph();
        for u in g.neighbors(self.hub).to_vec() {
            g.remove_edge(self.hub, u);
        }
        g
    }

    pub fn census(&self) -> G0Census {
        let degs: Vec<usize> = (0..self.n())
            .filter(|&v| v != self.hub)
            .map(|v| self.graph.degree(v))
            .collect();
        G0Census {
            p: degs.iter().filter(|&&d| d == 2).count(),
            q: degs.iter().filter(|&&d| d == 3).count(),
            n: self.n(),
            e: self.graph.m(),
            f: self.faces.len(),
            f_s: s_triangle_faces(&self.graph, &self.colours, &self.faces).len(),
        }
    }

    pub fn to_file(&self) -> G0File {
        G0File {
            format: FORMAT.to_string(),
            rotation_order: "clockwise".to_string(),
            hub: self.names[self.hub],
            cycle: self.cycle.iter().map(|&v| self.names[v]).collect(),
            vertices: (0..self.n())
                .map(|v| VertexEntry {
                    name: self.names[v],
                    colour: self.colours[v],
                })
                .collect(),
            rotation: (0..self.n())
                .map(|v| {
                    let r = self
                        .graph
                        .rotation(v)
                        .iter()
                        .map(|&u| self.names[u])
                        .collect();
                    (self.names[v], r)
                })
                .collect(),
            s_triangle_groups: self
                .groups
                .iter()
                .map(|g| GroupEntry {
                    kind: g.kind,
                    members: g.members.iter().map(|&v| self.names[v]).collect(),
                })
                .collect(),
        }
    }

    pub fn from_file(file: &G0File) -> Result<G0, ConstructError> {
        expect_eq("format", FORMAT, file.format.as_str())?;
        expect_eq("rotation_order", "clockwise", file.rotation_order.as_str())?;
        let names: Vec<G0Vertex> = file.vertices.iter().map(|v| v.name).collect();
        let colours: Vec<Colour> = file.vertices.iter().map(|v| v.colour).collect();
        let mut index = HashMap::new();
        for (i, &name) in names.iter().enumerate() {
            if index.insert(name, i).is_some() {
                return Err(ConstructError::Parse(format!("duplicate vertex {name}")));
            }
        }
        let lookup = |v: &G0Vertex| {
            index
                .get(v)
                .copied()
                .ok_or_else(|| ConstructError::Parse(format!("unknown vertex {v}")))
        };
        let mut rot = vec![Vec::new(); names.len()];
        for (name, ns) in &file.rotation {
            rot[lookup(name)?] = ns.iter().map(lookup).collect::<Result<_, _>>()?;
        }
        let graph = EmbeddedGraph::from_rotation(rot)?;
        let hub = lookup(&file.hub)?;
        let cycle = file
            .cycle
            .iter()
            .map(lookup)
            .collect::<Result<Vec<_>, _>>()?;
        let mut spoke_vertices: Vec<(u32, usize)> = names
            .iter()
            .enumerate()
            .filter_map(|(i, v)| match v {
                G0Vertex::U(k) => Some((*k, i)),
                _ => None,
            })
            .collect();
        spoke_vertices.sort_unstable();
        let faces = graph.faces();

        let abstract_graph = graph.to_graph();
        expect_eq("bipartite", true, abstract_graph.is_bipartite())?;
        expect_eq("n", expected::N, graph.n())?;
        expect_eq("e", expected::E, graph.m())?;
        expect_eq("plane", true, graph.is_plane())?;
        expect_eq("f", expected::F, faces.cycles.len())?;
        let bad_colour_edge = abstract_graph
            .edges()
            .into_iter()
            .find(|&(a, b)| colours[a].is_filled() == colours[b].is_filled());
        if let Some((a, b)) = bad_colour_edge {
            return Err(ConstructError::violation(
                "colour_classes",
                "every edge joins a white and a filled vertex",
                format!("{}-{}", names[a], names[b]),
            ));
        }
        expect_eq("hub_degree", expected::HUB_DEGREE, graph.degree(hub))?;
        let degree_count = |d: usize| {
            (0..graph.n())
                .filter(|&v| v != hub && graph.degree(v) == d)
                .count()
        };
        expect_eq("degree_2", expected::DEGREE_2, degree_count(2))?;
        expect_eq("degree_3", expected::DEGREE_3, degree_count(3))?;
        if let Some(v) = (0..graph.n())
            .find(|&v| matches!(colours[v], Colour::Gray | Colour::Black) && graph.degree(v) != 2)
        {
            return Err(ConstructError::violation(
                "gray_black_degree",
                2,
                graph.degree(v),
            ));
        }

        check_cycle(&graph, &names, hub, &cycle)?;
        expect_eq(
            "spoke_vertices",
            expected::SPOKE_VERTICES,
            spoke_vertices.len(),
        )?;
        let spoke_vertices: Vec<usize> = spoke_vertices.into_iter().map(|(_, i)| i).collect();
        for &u in &spoke_vertices {
            let ns = graph.rotation(u);
            let ok = ns.len() == 2
                && ns.contains(&hub)
                && ns.iter().any(|&x| x != hub && colours[x] == Colour::White);
            if !ok {
                return Err(ConstructError::violation(
                    "spoke_vertex",
                    "neighbours w and a white cycle vertex",
                    names[u],
                ));
            }
        }
        expect_eq(
            "cycle_plus_spokes",
            graph.n(),
            cycle.len() + spoke_vertices.len() + 1,
        )?;

        let mut without_hub = abstract_graph.clone();
        for u in abstract_graph.neighbors(hub) {
            without_hub.remove_edge(hub, *u);
        }
        let girth = without_hub.girth().unwrap_or(usize::MAX);
        if girth < expected::MIN_GIRTH {
            return Err(ConstructError::violation("girth", ">= 8", girth));
        }

        let s_faces = s_triangle_faces(&graph, &colours, &faces.cycles);
        expect_eq("f_s", expected::S_FACES, s_faces.len())?;
        let groups = check_groups(file, &graph, &names, &colours, &faces.cycles, &index)?;

        Ok(G0 {
            graph,
            names,
            colours,
            hub,
            cycle,
            spoke_vertices,
            groups,
            faces: faces.cycles,
            index,
        })
    }
}

/// Faces with exactly three degree-2 vertices of one colour on their boundary.
fn s_triangle_faces(g: &EmbeddedGraph, colours: &[Colour], faces: &[FaceCycle]) -> Vec<usize> {
    faces
        .iter()
        .enumerate()
        .filter(|(_, f)| {
            [Colour::Gray, Colour::Black].iter().any(|&c| {
                f.vertices()
                    .filter(|&v| g.degree(v) == 2 && colours[v] == c)
                    .count()
                    == 3
            })
        })
        .map(|(i, _)| i)
        .collect()
}

fn check_cycle(
    g: &EmbeddedGraph,
    names: &[G0Vertex],
    hub: usize,
    cycle: &[usize],
) -> Result<(), ConstructError> {
    expect_eq("cycle_length", expected::CYCLE_LEN, cycle.len())?;
    for (i, &v) in cycle.iter().enumerate() {
        expect_eq("cycle_names", G0Vertex::V(i as u32 + 1), names[v])?;
        let next = cycle[(i + 1) % cycle.len()];
        if !g.has_edge(v, next) {
            return Err(ConstructError::violation(
                "cycle_edge",
                format!("{}-{}", names[v], names[next]),
                "missing",
            ));
        }
    }
    // With the hub and spoke vertices removed, C_0 must bound a face.
    let keep: Vec<usize> = (0..g.n())
        .filter(|&v| v != hub && !matches!(names[v], G0Vertex::U(_)))
        .collect();
    let sub = g.induced(&keep);
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let c: Vec<usize> = cycle.iter().map(|v| pos[v]).collect();
    let bounds_face = sub.faces().cycles.iter().any(|f| {
        f.len() == c.len() && {
            let verts: Vec<usize> = f.vertices().collect();
            let start = verts.iter().position(|&x| x == c[0]).unwrap_or(0);
            let rotated: Vec<usize> = verts[start..]
                .iter()
                .chain(&verts[..start])
                .copied()
                .collect();
            let mut reversed = rotated.clone();
            reversed[1..].reverse();
            rotated == c || reversed == c
        }
    });
    expect_eq("cycle_bounds_face", true, bounds_face)
}

fn check_groups(
    file: &G0File,
    g: &EmbeddedGraph,
    names: &[G0Vertex],
    colours: &[Colour],
    faces: &[FaceCycle],
    index: &HashMap<G0Vertex, usize>,
) -> Result<Vec<SGroup>, ConstructError> {
    expect_eq(
        "s_triangle_groups",
        expected::S_FACES,
        file.s_triangle_groups.len(),
    )?;
    let mut owner = vec![None; g.n()];
    let mut used_faces = vec![false; faces.len()];
    let mut groups = Vec::new();
    for (gi, entry) in file.s_triangle_groups.iter().enumerate() {
        let members: Vec<usize> = entry
            .members
            .iter()
            .map(|v| {
                index
                    .get(v)
                    .copied()
                    .ok_or_else(|| ConstructError::Parse(format!("unknown vertex {v}")))
            })
            .collect::<Result<_, _>>()?;
        let members: [usize; 3] = members
            .try_into()
            .map_err(|_| ConstructError::violation("group_size", 3, entry.members.len()))?;
        let colour = colours[members[0]];
        for &v in &members {
            if g.degree(v) != 2 || colours[v] != colour || owner[v].is_some() {
                return Err(ConstructError::violation(
                    "group_member",
                    "distinct degree-2 vertices of one colour",
                    names[v],
                ));
            }
            owner[v] = Some(gi);
        }
        let on_face: Vec<usize> = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| members.iter().all(|&m| f.vertices().any(|x| x == m)))
            .map(|(i, _)| i)
            .collect();
        let [face] = on_face[..] else {
            return Err(ConstructError::violation("group_face", 1, on_face.len()));
        };
        let same_colour = faces[face]
            .vertices()
            .filter(|&v| g.degree(v) == 2 && colours[v] == colour)
            .count();
        expect_eq("group_face_colour_count", 3, same_colour)?;
        let through_hub = faces[face].vertices().any(|v| names[v] == G0Vertex::Hub);
        expect_eq("group_kind", entry.kind == GroupKind::Hub, through_hub)?;
        if std::mem::replace(&mut used_faces[face], true) {
            return Err(ConstructError::violation(
                "group_face_unique",
                "distinct faces",
                face,
            ));
        }
        groups.push(SGroup {
            kind: entry.kind,
            members,
            face,
        });
    }
    let orphans = (0..g.n())
        .filter(|&v| g.degree(v) == 2 && owner[v].is_none())
        .count();
    expect_eq("ungrouped_degree_2", 0, orphans)?;
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_census() {
        let g0 = G0::bundled().unwrap();
        let c = g0.census();
        assert_eq!((c.p, c.q, c.n, c.e, c.f, c.f_s), (63, 57, 121, 168, 49, 21));
    }

    #[test]
    fn file_round_trip() {
        let g0 = G0::bundled().unwrap();
        let again = G0::from_file(&g0.to_file()).unwrap();
        assert_eq!(again.graph, g0.graph);
        assert_eq!(again.groups, g0.groups);
    }
}
