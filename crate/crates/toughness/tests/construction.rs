use construct::{build_d, run, Stages, G0};
use graphcore::{max_matching, MatchingResult};
use num_rational::Rational64;
use std::sync::OnceLock;
use toughness::claim1::{ring_pair, D5_TOUGHNESS, D6_TOUGHNESS};
use toughness::{
    canonical_cut, construction_space, d_two_tough_evidence, q_cycle, search_cuts_with,
    three_halves, toughness_exact_with, verify_square_relation, Toughness, ToughnessError,
};

fn stages() -> &'static Stages {
    static S: OnceLock<Stages> = OnceLock::new();
    S.get_or_init(|| run(G0::bundled().unwrap()).unwrap())
}

fn max_pairs(g0: &G0) -> Vec<(usize, usize)> {
    let keep: Vec<usize> = (0..g0.n()).filter(|&v| v != g0.hub).collect();
    let m = max_matching(&g0.without_hub().induced(&keep));
    m.pairs()
        .into_iter()
        .map(|(a, b)| (keep[a], keep[b]))
        .collect()
}

#[test]
fn canonical_cut_closed_forms() {
    let s = stages();
    let pairs = max_pairs(&s.g0);
    assert_eq!(pairs.len(), 43);
    for t in 0..=43 {
        let m = MatchingResult::from_pairs(s.g0.n(), &pairs[..t]).unwrap();
        let c = canonical_cut(&s.g, &s.g0, &m).unwrap();
        assert_eq!(c.t_star.len(), t);
        assert_eq!(c.cut.w.len(), 370 + t);
        assert_eq!(c.cut.components, 232 + t);
        let score = c.cut.score().unwrap();
        assert_eq!(score.h, Rational64::new(-44 + t as i64, 2));
    }
    let m = MatchingResult::from_pairs(s.g0.n(), &pairs).unwrap();
    let score = canonical_cut(&s.g, &s.g0, &m).unwrap().cut.score().unwrap();
    assert_eq!(score.ratio, Rational64::new(413, 275));
    assert_eq!(score.h, Rational64::new(-1, 2));
}

#[test]
fn canonical_cut_rejects_bad_matchings() {
    let s = stages();
    let g0 = &s.g0;
    let u = g0.graph.rotation(g0.hub)[0];
    let bad = MatchingResult::from_pairs(g0.n(), &[(g0.hub, u)]).unwrap();
    assert_eq!(
        canonical_cut(&s.g, g0, &bad),
        Err(ToughnessError::MatchingInvalid)
    );
    let mut g = s.g.clone();
    g.labels.pop();
    let empty = MatchingResult::from_pairs(g0.n(), &[]).unwrap();
    assert!(matches!(
        canonical_cut(&g, g0, &empty),
        Err(ToughnessError::LabelsMissing(_))
    ));
}

#[test]
fn d_evidence() {
    let d = build_d(39).unwrap();
    let report = d_two_tough_evidence(&d, false);
    assert!(report.passed(), "{report:?}");
    assert_eq!(q_cycle(&d).len(), 78);
}

#[test]
fn d1_with_a_deleted_edge_is_not_q_squared() {
    let d = build_d(39).unwrap();
    let mut d1 = ring_pair(&d, 1);
    let (u, v) = d1.edges()[0];
    d1.remove_edge(u, v);
    assert_eq!(verify_square_relation(&d1, &q_cycle(&d)), Ok(false));
}

#[test]
fn small_d_regression() {
    for (m, bound, (p, q)) in [(5, 20, D5_TOUGHNESS), (6, 24, D6_TOUGHNESS)] {
        let g = build_d(m).unwrap().graph.to_graph();
        let r = toughness_exact_with(&g, bound).unwrap();
        assert_eq!(r.value, Toughness::Finite(Rational64::new(p, q)), "D({m})");
    }
}

#[test]
fn search_finds_nothing_below_three_halves() {
    let s = stages();
    let space = construction_space(&s.g, &s.g0);
    let g = s.g.graph.to_graph();
    let out = search_cuts_with(&g, &space, 40_000, 3);
    assert!(out.score().unwrap().ratio >= three_halves());
}
