//! Steps 2 to 4: replace the hub by `D`, blow vertices up into triangles,
//! subdivide and attach pendants, then fill every face.

use crate::d::{build_d, ring_length};
use crate::error::{expect_eq, ConstructError};
use crate::g0::G0;
use crate::labels::{
    C3Triangle, G0Vertex, LabeledGraph, STriangle, Spoke, SpokeKind, Stage, VertexClass,
    VertexIndex, VertexLabel,
};
use graphcore::{is_plane_triangulation, EmbeddedGraph};
use std::collections::HashMap;

/// Extra registry data that later steps need: the `z`-vertices of every
/// S-triangle face, listed per group in member order.
pub type SFaceHosts = Vec<[usize; 3]>;

/// All intermediate graphs of the construction.
#[derive(Debug, Clone)]
pub struct Stages {
    pub g0: G0,
    pub d: LabeledGraph,
    pub g1: LabeledGraph,
    pub g2: LabeledGraph,
    pub g: LabeledGraph,
    pub s_face_hosts: SFaceHosts,
}

/// Runs every step on a validated `G_0`.
pub fn run(g0: G0) -> Result<Stages, ConstructError> {
    let d = build_d(g0.graph.degree(g0.hub))?;
    let (g1, s_face_hosts) = step2(&g0, &d)?;
    let g2 = step3(&g1)?;
    let g = step4(&g2, &s_face_hosts)?;
    Ok(Stages {
        g0,
        d,
        g1,
        g2,
        g,
        s_face_hosts,
    })
}

/// The full construction from the bundled `G_0`.
pub fn build_full() -> Result<LabeledGraph, ConstructError> {
    Ok(run(G0::bundled()?)?.g)
}

/// Label `k` of the triangle vertex of `v` that faces `nbr` (`None` = the
/// vertex placed into the S-triangle face).
fn slot_label(g0: &G0, cycle_pos: &[Option<usize>], v: usize, nbr: Option<usize>) -> u32 {
    let Some(nbr) = nbr else { return 3 };
    if let Some(i) = cycle_pos[v] {
        let len = g0.cycle.len();
        if nbr == g0.cycle[(i + len - 1) % len] {
            1
        } else if nbr == g0.cycle[(i + 1) % len] {
            2
        } else {
            3
        }
    } else if nbr == g0.hub {
        1
    } else {
        2
    }
}

/// Step 2: returns `G_1` and the `z`-vertices of each S-triangle face.
pub fn step2(g0: &G0, d: &LabeledGraph) -> Result<(LabeledGraph, SFaceHosts), ConstructError> {
    let m = ring_length(d);
    let hub = g0.hub;
    expect_eq("ring_length", g0.graph.degree(hub), m)?;
    let n0 = g0.n();
    let mut cycle_pos = vec![None; n0];
    for (i, &v) in g0.cycle.iter().enumerate() {
        cycle_pos[v] = Some(i);
    }

    // Rotation of each vertex with a placeholder for the S-face corner.
    let mut ext: Vec<Vec<Option<usize>>> = (0..n0)
        .map(|v| g0.graph.rotation(v).iter().map(|&u| Some(u)).collect())
        .collect();
    for group in &g0.groups {
        let face = &g0.faces[group.face];
        for &v in &group.members {
            let &(a, _) = face
                .darts
                .iter()
                .find(|dart| dart.1 == v)
                .expect("member on face");
            let i = ext[v].iter().position(|&x| x == Some(a)).unwrap();
            ext[v].insert(i + 1, None);
        }
    }

    let base = d.n();
    let mut tri_base = vec![usize::MAX; n0];
    let mut next = base;
    for v in (0..n0).filter(|&v| v != hub) {
        tri_base[v] = next;
        next += 3;
    }
    let total = next;
    let tri = |v: usize, k: u32| tri_base[v] + k as usize - 1;
    let slot_vertex = |v: usize, s: usize| tri(v, slot_label(g0, &cycle_pos, v, ext[v][s]));
    let hub_rot = g0.graph.rotation(hub);
    // n_k around w is matched with a_{1,j}, both taken clockwise: j = 1, m, m-1, ...
    let ring_partner = |k: usize| d.ring_vertex(1, (m - k) % m + 1);
    let facing = |v: usize, nbr: usize| {
        let s = ext[v].iter().position(|&x| x == Some(nbr)).unwrap();
        slot_vertex(v, s)
    };
    let partner = |v: usize, nbr: usize| -> usize {
        if nbr == hub {
            ring_partner(hub_rot.iter().position(|&x| x == v).unwrap())
        } else {
            facing(nbr, v)
        }
    };

    let mut rot = vec![Vec::new(); total];
    rot[..base].clone_from_slice(d.graph.rotations());
    for (k, &v) in hub_rot.iter().enumerate() {
        let a = ring_partner(k);
        let VertexIndex::Ring { pos, .. } = d.labels[a].index else {
            unreachable!()
        };
        let after = d.ring_vertex(1, pos as usize % m + 1);
        let i = rot[a].iter().position(|&x| x == after).unwrap();
        rot[a].insert(i + 1, facing(v, hub));
    }
    for v in (0..n0).filter(|&v| v != hub) {
        for (s, slot) in ext[v].iter().enumerate() {
            let x = slot_vertex(v, s);
            let mut r = Vec::with_capacity(3);
            if let Some(nbr) = *slot {
                r.push(partner(v, nbr));
            }
            r.push(slot_vertex(v, (s + 1) % 3));
            r.push(slot_vertex(v, (s + 2) % 3));
            rot[x] = r;
        }
    }
    let graph = EmbeddedGraph::from_rotation(rot)?;
    graph.check_plane()?;

    let mut labels = d.labels.clone();
    let mut registries = d.registries.clone();
    for v in (0..n0).filter(|&v| v != hub) {
        let host = g0.names[v];
        for k in 1..=3 {
            labels.push(VertexLabel {
                class: VertexClass::UTri,
                index: VertexIndex::Tri { host, k },
            });
        }
        registries.c3_triangles.push(C3Triangle {
            host,
            vertices: [tri(v, 1), tri(v, 2), tri(v, 3)],
        });
    }
    registries.c1 = g0
        .cycle
        .iter()
        .flat_map(|&v| [tri(v, 1), tri(v, 2)])
        .collect();
    let c1 = &registries.c1;
    for i in 0..c1.len() {
        if !graph.has_edge(c1[i], c1[(i + 1) % c1.len()]) {
            return Err(ConstructError::violation(
                "c1_cycle",
                "closed walk",
                format!("gap at {i}"),
            ));
        }
    }
    let hosts = g0
        .groups
        .iter()
        .map(|g| g.members.map(|v| tri(v, 3)))
        .collect();
    Ok((
        LabeledGraph {
            graph,
            labels,
            registries,
            stage: Stage::G1,
        },
        hosts,
    ))
}

/// Step 3: subdivide inter-component edges (T2) and hang a pendant (T1) from
/// every degree-2 vertex into its S-triangle face.
pub fn step3(g1: &LabeledGraph) -> Result<LabeledGraph, ConstructError> {
    let mut graph = g1.graph.clone();
    let mut labels = g1.labels.clone();
    let host = |v: usize| g1.host(v).ok_or(ConstructError::LabelsMissing);
    let mut cross = Vec::new();
    for x in 0..g1.n() {
        for &y in g1.graph.rotation(x) {
            if x < y && host(x)? != host(y)? {
                cross.push((x, y));
            }
        }
    }
    let mut sub_of = HashMap::new();
    for &(x, y) in &cross {
        let t = graph.subdivide(x, y)?;
        labels.push(VertexLabel {
            class: VertexClass::T2,
            index: VertexIndex::Sub {
                a: host(x)?,
                b: host(y)?,
            },
        });
        sub_of.insert((x, y), t);
        sub_of.insert((y, x), t);
    }
    let low: Vec<usize> = (0..g1.n()).filter(|&z| g1.graph.degree(z) == 2).collect();
    for z in low {
        let r = graph.rotation(z).to_vec();
        let corner = r
            .iter()
            .map(|&p| (p, z))
            .find(|&c| graph.face_of(c).map(|f| f.len() > 3).unwrap_or(false))
            .ok_or_else(|| {
                ConstructError::violation("s_face_corner", "a non-triangular face", z)
            })?;
        graph.add_pendant(corner)?;
        labels.push(VertexLabel {
            class: VertexClass::T1,
            index: VertexIndex::Pendant { host: z },
        });
    }
    graph.check_plane()?;

    let mut registries = g1.registries.clone();
    let c1 = &registries.c1;
    let mut c = Vec::with_capacity(c1.len() * 3 / 2);
    for i in 0..c1.len() {
        let (a, b) = (c1[i], c1[(i + 1) % c1.len()]);
        c.push(a);
        if let Some(&t) = sub_of.get(&(a, b)) {
            c.push(t);
        }
    }
    registries.c = c;

    let g2 = LabeledGraph {
        graph,
        labels,
        registries,
        stage: Stage::G2,
    };
    let spokes = trace_spokes(&g2)?;
    let mut g2 = g2;
    g2.registries.spokes = spokes;
    Ok(g2)
}

fn tri_vertex(g: &LabeledGraph, host: G0Vertex, k: u32) -> Option<usize> {
    g.registries
        .c3_triangles
        .iter()
        .find(|t| t.host == host)
        .map(|t| t.vertices[k as usize - 1])
}

/// Follows every edge leaving `A_1` out to the cycle `C`.
fn trace_spokes(g: &LabeledGraph) -> Result<Vec<Spoke>, ConstructError> {
    let bad = |what: &str| ConstructError::violation("spoke", what, "different structure");
    let is_class = |v: usize, c: VertexClass| g.labels[v].class == c;
    let other = |t: usize, from: usize| -> usize {
        *g.graph.rotation(t).iter().find(|&&x| x != from).unwrap()
    };
    let mut spokes = Vec::new();
    for &a in &g.registries.rings[0] {
        let Some(&t1) = g
            .graph
            .rotation(a)
            .iter()
            .find(|&&x| is_class(x, VertexClass::T2))
        else {
            return Err(bad("a T2 neighbour on A_1"));
        };
        let y = other(t1, a);
        match g.labels[y].index {
            VertexIndex::Tri {
                host: host @ G0Vertex::U(_),
                k: 1,
            } => {
                let u2 = tri_vertex(g, host, 2).ok_or_else(|| bad("u_{i,2}"))?;
                let t2 = *g
                    .graph
                    .rotation(u2)
                    .iter()
                    .find(|&&x| is_class(x, VertexClass::T2))
                    .ok_or_else(|| bad("t2"))?;
                let v3 = other(t2, u2);
                if !matches!(
                    g.labels[v3].index,
                    VertexIndex::Tri {
                        host: G0Vertex::V(_),
                        k: 3
                    }
                ) {
                    return Err(bad("v_{j,3} at the end of a long spoke"));
                }
                spokes.push(Spoke {
                    kind: SpokeKind::Long,
                    path: vec![a, t1, y, u2, t2, v3],
                });
            }
            VertexIndex::Tri {
                host: G0Vertex::V(_),
                k: 3,
            } => {
                spokes.push(Spoke {
                    kind: SpokeKind::Short,
                    path: vec![a, t1, y],
                });
            }
            _ => return Err(bad("u_{i,1} or v_{j,3} after t1")),
        }
    }
    Ok(spokes)
}

/// Step 4: a star in every face that carries no pendant, an S-triangle in every
/// face with three pendants.
pub fn step4(g2: &LabeledGraph, s_face_hosts: &SFaceHosts) -> Result<LabeledGraph, ConstructError> {
    let mut graph = g2.graph.clone();
    let mut labels = g2.labels.clone();
    let mut registries = g2.registries.clone();
    let faces = g2.graph.faces().cycles;
    let mut face_id = 0;
    for face in &faces {
        if !face.vertices().any(|v| labels[v].class.is_t()) {
            continue;
        }
        let mut pendants: Vec<(usize, usize)> = Vec::new();
        for &(z, x) in &face.darts {
            if g2.graph.degree(x) == 1 && !pendants.iter().any(|p| p.1 == x) {
                pendants.push((z, x));
            }
        }
        match pendants.len() {
            0 => {
                graph.star_face(face.darts[0])?;
                labels.push(VertexLabel {
                    class: VertexClass::S,
                    index: VertexIndex::Face { face: face_id },
                });
            }
            3 => {
                let tri = s_triangle(&mut graph, &pendants, s_face_hosts)?;
                for k in 1..=3 {
                    labels.push(VertexLabel {
                        class: VertexClass::S,
                        index: VertexIndex::STri {
                            group: tri.group,
                            k,
                        },
                    });
                }
                registries.s_triangles.push(tri);
            }
            p => return Err(ConstructError::FaceClassification { pendants: p }),
        }
        face_id += 1;
    }
    registries.s_triangles.sort_by_key(|t| t.group);
    if !is_plane_triangulation(&graph) {
        return Err(ConstructError::violation("triangulation", true, false));
    }
    Ok(LabeledGraph {
        graph,
        labels,
        registries,
        stage: Stage::G,
    })
}

/// Places `s_1 s_2 s_3` inside a face whose pendants are given as `(z_i, x_i)`
/// in walk order, wires `x_i s_i`, `x_i s_{i+1}`, then fans `s_i` across the
/// region between `x_{i-1}` and `x_i`.
fn s_triangle(
    g: &mut EmbeddedGraph,
    pendants: &[(usize, usize)],
    s_face_hosts: &SFaceHosts,
) -> Result<STriangle, ConstructError> {
    let hosts: Vec<usize> = pendants.iter().map(|p| p.0).collect();
    let group = s_face_hosts
        .iter()
        .position(|h| h.iter().all(|z| hosts.contains(z)))
        .ok_or_else(|| {
            ConstructError::violation("s_face_group", "a registered group", format!("{hosts:?}"))
        })?;
    let first = pendants
        .iter()
        .position(|p| p.0 == s_face_hosts[group][0])
        .unwrap();
    let p = |i: usize| pendants[(first + i) % 3];
    let (z1, x1) = p(0);
    let (z2, x2) = p(1);
    let (z3, x3) = p(2);
    let s1 = g.add_pendant((z1, x1))?;
    let s2 = g.add_pendant((s1, x1))?;
    g.add_edge_in_face((x1, s2), (z2, x2))?;
    let s3 = g.add_pendant((s2, x2))?;
    g.add_edge_in_face((x2, s3), (z3, x3))?;
    g.add_edge_in_face((x1, s1), (s3, x3))?;
    g.add_edge_in_face((x3, s1), (x1, s2))?;
    g.add_edge_in_face((s1, s2), (x2, s3))?;
    g.add_edge_in_face((s2, s3), (x3, s1))?;
    for (s, prev) in [(s1, x3), (s2, x1), (s3, x2)] {
        g.fan_from(s, prev)?;
    }
    Ok(STriangle {
        group,
        vertices: [s1, s2, s3],
        pendants: [x1, x2, x3],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pipeline_counts() {
        let st = run(G0::bundled().unwrap()).unwrap();
        assert_eq!((st.g1.n(), st.g1.graph.m()), (516, 954));
        assert_eq!(st.g2.n(), 747);
        assert_eq!((st.g.n(), st.g.graph.m()), (838, 2508));
        assert_eq!(st.g1.registries.c1.len(), 172);
    }
}
