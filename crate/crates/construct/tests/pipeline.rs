use construct::labels::{G0Vertex, SpokeKind};
use construct::{
    build_d, census, component_graph, load_g0, run, ConstructError, FullCensus, LabeledGraph,
    Stages, VertexClass, VertexIndex, G0,
};
use graphcore::{is_plane_triangulation, Graph};
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn stages() -> &'static Stages {
    static S: OnceLock<Stages> = OnceLock::new();
    S.get_or_init(|| run(G0::bundled().unwrap()).unwrap())
}

fn is_cycle_on(g: &Graph, vs: &[usize]) -> bool {
    let h = g.induced(vs);
    h.n() == vs.len() && h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
}

#[test]
fn g0_census_matches_counting_block() {
    let c = G0::bundled().unwrap().census();
    assert_eq!((c.p, c.q, c.n, c.e, c.f, c.f_s), (63, 57, 121, 168, 49, 21));
    assert_eq!(c.p + c.q + 1, c.n);
    assert_eq!(c.f + c.n, c.e + 2);
}

#[test]
fn g0_cycles_avoiding_hub_have_length_at_least_8() {
    let g0 = G0::bundled().unwrap();
    let keep: Vec<usize> = (0..g0.n()).filter(|&v| v != g0.hub).collect();
    assert!(g0.graph.to_graph().induced(&keep).girth().unwrap() >= 8);
}

#[test]
fn deleted_edge_is_rejected() {
    let g0 = G0::bundled().unwrap();
    let mut file = g0.to_file();
    let (a, b) = (g0.names[g0.cycle[0]], g0.names[g0.cycle[1]]);
    file.rotation.get_mut(&a).unwrap().retain(|&x| x != b);
    file.rotation.get_mut(&b).unwrap().retain(|&x| x != a);
    let text = serde_json::to_string(&file).unwrap();
    assert_eq!(
        load_g0(&text).unwrap_err(),
        ConstructError::violation("e", 168, 167)
    );
}

#[test]
fn odd_chord_is_rejected() {
    let g0 = G0::bundled().unwrap();
    let face = g0
        .faces
        .iter()
        .find(|f| !f.vertices().any(|v| v == g0.hub))
        .unwrap();
    let (_, a) = face.darts[0];
    let (b, c) = face.darts[2];
    assert!(!g0.graph.has_edge(a, c));
    let mut graph = g0.graph.clone();
    graph.add_edge_in_face(face.darts[0], (b, c)).unwrap();
    let mut file = g0.to_file();
    for v in [a, c] {
        let r = graph.rotation(v).iter().map(|&u| g0.names[u]).collect();
        file.rotation.insert(g0.names[v], r);
    }
    let err = load_g0(&serde_json::to_string(&file).unwrap()).unwrap_err();
    assert!(
        matches!(&err, ConstructError::InvariantViolation { name, .. } if name == "bipartite"),
        "{err}"
    );
}

#[test]
fn garbage_is_a_parse_error() {
    assert!(matches!(load_g0("{"), Err(ConstructError::Parse(_))));
    let mut file = G0::bundled().unwrap().to_file();
    file.cycle.push(G0Vertex::V(999));
    assert!(matches!(
        load_g0(&serde_json::to_string(&file).unwrap()),
        Err(ConstructError::Parse(_))
    ));
}

#[test]
fn d_census() {
    let d = build_d(39).unwrap();
    let faces = d.graph.faces().cycles;
    assert_eq!((d.n(), d.graph.m(), faces.len()), (156, 426, 272));
    assert_eq!(faces.iter().filter(|f| f.len() == 3).count(), 271);
    assert_eq!(faces.iter().map(|f| f.len()).max(), Some(39));
    let d5 = build_d(5).unwrap();
    assert_eq!((d5.n(), d5.graph.m()), (20, 52));
}

#[test]
fn intermediate_counts() {
    let s = stages();
    assert_eq!((s.g1.n(), s.g1.graph.m()), (516, 954));
    assert!(is_cycle_on(&s.g1.graph.to_graph(), &s.g1.registries.c1));
    assert_eq!(s.g1.registries.c1.len(), 172);
    assert_eq!(s.g2.n(), 747);
    let t1 = s.g2.vertices_of(VertexClass::T1);
    let t2 = s.g2.vertices_of(VertexClass::T2);
    assert_eq!((t1.len(), t2.len()), (63, 168));
    assert!(t1.iter().all(|&v| s.g2.graph.degree(v) == 1));
    assert!(t2.iter().all(|&v| s.g2.graph.degree(v) == 2));
    assert!(is_cycle_on(&s.g2.graph.to_graph(), &s.g2.registries.c));
}

#[test]
fn full_census() {
    let g = &stages().g;
    assert!(is_plane_triangulation(&g.graph));
    assert_eq!(
        census(g),
        FullCensus {
            n: 838,
            e: 2508,
            f: 1672,
            s: 91,
            t1: 63,
            t2: 168,
            u_tri: 360,
            u_d: 156
        }
    );
    let d = build_d(39).unwrap();
    let c = census(&d);
    assert_eq!((c.n, c.e, c.f), (156, 426, 272));
}

#[test]
fn t_is_independent() {
    let g = &stages().g;
    let gg = g.graph.to_graph();
    for (a, b) in gg.edges() {
        assert!(!(g.class(a).is_t() && g.class(b).is_t()), "{a}-{b}");
    }
}

fn neighbourhood_is_cycle(g: &Graph, v: usize, len: usize) -> bool {
    g.degree(v) == len && is_cycle_on(g, g.neighbors(v))
}

#[test]
fn t_neighbourhoods() {
    let g = &stages().g;
    let gg = g.graph.to_graph();
    for v in g.vertices_of(VertexClass::T2) {
        assert!(neighbourhood_is_cycle(&gg, v, 4), "T2 vertex {v}");
    }
    for v in g.vertices_of(VertexClass::T1) {
        assert!(neighbourhood_is_cycle(&gg, v, 3), "T1 vertex {v}");
    }
}

#[test]
fn s_vertices() {
    let s = stages();
    let g = &s.g;
    let gg = g.graph.to_graph();
    assert_eq!(g.registries.s_triangles.len(), 21);
    for t in &g.registries.s_triangles {
        let [a, b, c] = t.vertices;
        assert!(gg.has_edge(a, b) && gg.has_edge(b, c) && gg.has_edge(c, a));
        for i in 0..3 {
            let (x, sa, sb) = (t.pendants[i], t.vertices[i], t.vertices[(i + 1) % 3]);
            assert!(gg.has_edge(x, sa) && gg.has_edge(x, sb));
        }
    }
    let g2_faces: BTreeSet<BTreeSet<usize>> =
        s.g2.graph
            .faces()
            .cycles
            .iter()
            .map(|f| f.vertices().collect())
            .collect();
    let mut stars = 0;
    for v in g.vertices_of(VertexClass::S) {
        if let VertexIndex::Face { .. } = g.labels[v].index {
            stars += 1;
            let ns: BTreeSet<usize> = gg.neighbors(v).iter().copied().collect();
            assert!(g2_faces.contains(&ns), "centre {v}");
        }
    }
    assert_eq!(stars, 28);
}

#[test]
fn components_after_removing_s_and_t() {
    let g = &stages().g;
    let gg = g.graph.to_graph();
    let removed: Vec<bool> = (0..g.n()).map(|v| !g.class(v).is_u()).collect();
    let (comp, count) = gg.components_without(&removed);
    assert_eq!(count, 121);
    let mut sizes = vec![Vec::new(); count];
    for v in (0..g.n()).filter(|&v| !removed[v]) {
        sizes[comp[v]].push(v);
    }
    let triangles = sizes
        .iter()
        .filter(|c| c.len() == 3 && is_cycle_on(&gg, c))
        .count();
    assert_eq!(triangles, 120);
    let big = sizes.iter().find(|c| c.len() != 3).unwrap();
    let ud: BTreeSet<usize> = g.vertices_of(VertexClass::UD).into_iter().collect();
    assert_eq!(big.iter().copied().collect::<BTreeSet<_>>(), ud);
}

#[test]
fn spokes() {
    let g = &stages().g;
    let gg = g.graph.to_graph();
    let sp = &g.registries.spokes;
    assert_eq!(sp.len(), 39);
    let long = sp.iter().filter(|s| s.kind == SpokeKind::Long).count();
    assert_eq!((long, sp.len() - long), (34, 5));
    let a1: BTreeSet<usize> = g.registries.rings[0].iter().copied().collect();
    for s in sp {
        assert!(a1.contains(&s.path[0]));
        assert!(s.path.windows(2).all(|w| gg.has_edge(w[0], w[1])));
        let classes: Vec<VertexClass> = s.path.iter().map(|&v| g.class(v)).collect();
        use VertexClass::*;
        let want: &[VertexClass] = match s.kind {
            SpokeKind::Long => &[UD, T2, UTri, UTri, T2, UTri],
            SpokeKind::Short => &[UD, T2, UTri],
        };
        assert_eq!(classes, want);
        let last = *s.path.last().unwrap();
        assert!(matches!(
            g.labels[last].index,
            VertexIndex::Tri {
                host: G0Vertex::V(_),
                k: 3
            }
        ));
    }
}

fn assert_round_trip(g: &LabeledGraph) {
    let g0 = G0::bundled().unwrap();
    let cg = component_graph(g).unwrap();
    cg.matches(&g0).unwrap();
}

#[test]
fn component_graph_round_trip() {
    let s = stages();
    assert_round_trip(&s.g);
    assert_round_trip(&s.g2);
}

#[test]
fn component_graph_needs_labels() {
    let mut g = stages().g.clone();
    g.labels.pop();
    assert!(matches!(
        component_graph(&g),
        Err(ConstructError::LabelsMissing)
    ));
}

#[test]
fn build_is_deterministic() {
    let again = run(G0::bundled().unwrap()).unwrap();
    assert_eq!(again.g, stages().g);
}

#[test]
fn g0_faces_and_matching() {
    let g0 = G0::bundled().unwrap();
    assert_eq!(graphcore::faces(&g0.graph).cycles.len(), 49);
    assert!(!is_plane_triangulation(&g0.graph));
    let keep: Vec<usize> = (0..g0.n()).filter(|&v| v != g0.hub).collect();
    let m = graphcore::max_matching(&g0.graph.to_graph().induced(&keep));
    assert_eq!(m.size, 43);
}
