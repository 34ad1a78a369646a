use construct::{build_full, LabeledGraph, VertexClass};
use factor::{
    delta, has_two_factor, is_barrier, odd_component_census, paper_sets, tutte_gadget,
    verify_paper_barrier, Infeasibility, TwoFactorResult,
};
use std::collections::BTreeMap;
use std::sync::OnceLock;

fn g() -> &'static LabeledGraph {
    static G: OnceLock<LabeledGraph> = OnceLock::new();
    G.get_or_init(|| build_full().unwrap())
}

#[test]
fn paper_barrier_census_and_delta() {
    let g = g();
    let (s, t) = paper_sets(g);
    let graph = g.graph.to_graph();
    let c = odd_component_census(&graph, &s, &t).unwrap();
    assert_eq!(c.counts, BTreeMap::from([(3, 120), (39, 1)]));
    assert_eq!(c.even_components, 0);
    assert_eq!(delta(&graph, &s, &t).unwrap(), -2);
    assert!(is_barrier(&graph, &s, &t).unwrap());
}

#[test]
fn verify_report_passes() {
    let report = verify_paper_barrier(g());
    assert!(
        report.passed(),
        "{:?}",
        report.failures().collect::<Vec<_>>()
    );
    assert_eq!(report.barrier.unwrap().delta, -2);
}

#[test]
fn no_two_factor() {
    let graph = g().graph.to_graph();
    assert_eq!(tutte_gadget(&graph).unwrap().graph.n(), 8356);
    let r = has_two_factor(&graph);
    assert!(
        matches!(r, TwoFactorResult::Infeasible(Infeasibility::Deficiency(d)) if d >= 1),
        "{r:?}"
    );
}

#[test]
fn moving_an_s_vertex_to_t_fails() {
    let mut g = g().clone();
    let v = g.vertices_of(VertexClass::S)[0];
    g.labels[v].class = VertexClass::T1;
    assert!(!verify_paper_barrier(&g).passed());
}

#[test]
fn edge_inside_t_fails_independence() {
    let mut g = g().clone();
    let t2 = g.vertices_of(VertexClass::T2);
    let (a, b) = (t2[0], t2[1]);
    let mut graph = g.graph.to_graph();
    graph.add_edge(a, b);
    let mut rot: Vec<Vec<usize>> = (0..graph.n())
        .map(|v| g.graph.rotation(v).to_vec())
        .collect();
    rot[a].push(b);
    rot[b].push(a);
    g.graph = graphcore::EmbeddedGraph::from_rotation(rot).unwrap();
    let report = verify_paper_barrier(&g);
    let failed: Vec<_> = report.failures().map(|c| c.name).collect();
    assert!(failed.contains(&"t_independent"), "{failed:?}");
}
