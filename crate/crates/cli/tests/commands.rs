use cli::formats::{from_graph6, from_json, to_json};
use construct::{build_full, census, VertexClass, G0};
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn toughtri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toughtri"))
        .args(args)
        .output()
        .unwrap()
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toughtri-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_graph6_has_2508_edges() {
    let o = toughtri(&["build", "--format", "graph6"]);
    assert_eq!(o.status.code(), Some(0));
    let g = from_graph6(&stdout(&o)).unwrap();
    assert_eq!((g.n(), g.m()), (838, 2508));
    assert_eq!(g, build_full().unwrap().graph.to_graph());
}

#[test]
fn json_embedding_round_trip() {
    let path = scratch("g.json");
    let o = toughtri(&[
        "build",
        "--format",
        "json-embedding",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let back = from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let g = build_full().unwrap();
    assert_eq!(census(&back), census(&g));
    assert_eq!(back, g);
    let v: serde_json::Value = serde_json::from_str(&to_json(&g)).unwrap();
    for key in ["spokes", "s_triangles", "c3_triangles", "rings"] {
        assert!(v["registries"][key].is_array(), "{key}");
    }
    assert_eq!(v["vertices"][0]["id"], 0);
}

#[test]
fn dot_output() {
    let o = toughtri(&["export-d", "--m", "5", "--format", "dot"]);
    let text = stdout(&o);
    assert!(text.starts_with("graph G {"));
    assert_eq!(text.matches(" -- ").count(), 52);
}

#[test]
fn tampered_g0_exits_2() {
    let g0 = G0::bundled().unwrap();
    let mut file = g0.to_file();
    let (a, b) = (g0.names[g0.cycle[0]], g0.names[g0.cycle[1]]);
    file.rotation.get_mut(&a).unwrap().retain(|&x| x != b);
    file.rotation.get_mut(&b).unwrap().retain(|&x| x != a);
    let path = scratch("bad_g0.json");
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
    let o = toughtri(&[
        "--g0",
        path.to_str().unwrap(),
        "build",
        "--format",
        "graph6",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invariant e violated"));
}

#[test]
fn verify_fast_passes() {
    let o = toughtri(&["verify", "--level", "fast", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["overall"], "pass");
    let delta = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "barrier.delta")
        .unwrap();
    assert_eq!(delta["actual"], "-2");
}

#[test]
fn verify_full_reports_no_two_factor() {
    let o = toughtri(&["verify", "--level", "full"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass two_factor: infeasible"));
}

#[test]
fn verify_catches_an_edge_inside_t() {
    let mut g = build_full().unwrap();
    let t = g.vertices_of(VertexClass::T2);
    let mut rot: Vec<Vec<usize>> = (0..g.n()).map(|v| g.graph.rotation(v).to_vec()).collect();
    rot[t[0]].push(t[1]);
    rot[t[1]].push(t[0]);
    g.graph = graphcore::EmbeddedGraph::from_rotation(rot).unwrap();
    let path = scratch("t_edge.json");
    std::fs::write(&path, to_json(&g)).unwrap();
    let o = toughtri(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL barrier.t_independent"));
}

#[test]
fn search_petersen_fixture() {
    let p = fixture("petersen.g6");
    let args = [
        "search",
        "--input",
        p.as_str(),
        "--budget",
        "10000",
        "--seed",
        "5",
    ];
    let a = toughtri(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).starts_with("best ratio: 4/3\n"));
    assert_eq!(a.stdout, toughtri(&args).stdout);
}

#[test]
fn search_on_the_construction_stays_at_or_above_three_halves() {
    let o = toughtri(&["search", "--budget", "20000", "--seed", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let (p, q) = v["ratio"].as_str().unwrap().split_once('/').unwrap();
    let (p, q): (i64, i64) = (p.parse().unwrap(), q.parse().unwrap());
    assert!(2 * p >= 3 * q, "{p}/{q}");
}

#[test]
fn two_factor_command() {
    let o = toughtri(&["two-factor"]);
    assert!(stdout(&o).starts_with("two_factor: infeasible"));
    let p = fixture("petersen.g6");
    let o = toughtri(&["two-factor", "--input", &p]);
    assert_eq!(stdout(&o), "two_factor: factor with 10 edges\n");
}

#[test]
fn bad_input_exits_2() {
    let path = scratch("junk.g6");
    std::fs::write(&path, "not graph6 at all\n").unwrap();
    assert_eq!(
        toughtri(&["search", "--input", path.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        toughtri(&["search", "--budget", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn stats_json() {
    let o = toughtri(&["stats", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["g"]["n"], 838);
    assert_eq!(v["g0"]["f_s"], 21);
}
