//! Driver behind the `toughtri` binary. Every command writes to a caller
//! supplied sink and returns the process exit code.

pub mod formats;
pub mod report;

use construct::{build_d, census, component_graph, load_g0, run, ConstructError, LabeledGraph, G0};
use factor::{has_two_factor, verify_paper_barrier, Infeasibility, TwoFactorResult};
use graphcore::{is_plane_triangulation, max_matching, Graph, MatchingResult};
use report::{Status, VerificationReport};
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};
use thiserror::Error;
use toughness::{
    canonical_cut, construction_space, d_two_tough_evidence, search_cuts, search_cuts_with,
};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("bad input: {0}")]
    Input(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    JsonEmbedding,
    Graph6,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub json: bool,
    pub g0: Option<PathBuf>,
}

impl Options {
    pub fn g0(&self) -> Result<G0, CliError> {
        match &self.g0 {
            Some(p) => Ok(load_g0(&std::fs::read_to_string(p)?)?),
            None => Ok(G0::bundled()?),
        }
    }
}

/// A graph read with `--input`: a JSON embedding or a graph6 line.
pub enum Input {
    Labeled(LabeledGraph),
    Plain(Graph),
}

impl Input {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)?;
        if text.trim_start().starts_with('{') {
            Ok(Input::Labeled(formats::from_json(&text)?))
        } else {
            Ok(Input::Plain(formats::from_graph6(&text)?))
        }
    }

    pub fn graph(&self) -> Graph {
        match self {
            Input::Labeled(g) => g.graph.to_graph(),
            Input::Plain(g) => g.clone(),
        }
    }
}

fn render(g: &LabeledGraph, format: Format) -> String {
    match format {
        Format::JsonEmbedding => formats::to_json(g),
        Format::Graph6 => formats::to_graph6(&g.graph.to_graph()),
        Format::Dot => formats::to_dot(g),
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n"))?,
        None => writeln!(out, "{text}")?,
    }
    Ok(())
}

pub fn cmd_build(
    opts: &Options,
    format: Format,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let g = run(opts.g0()?)?.g;
    emit(out, path, &render(&g, format))?;
    Ok(EXIT_PASS)
}

pub fn cmd_export_d(
    m: usize,
    format: Format,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    emit(out, path, &render(&build_d(m)?, format))?;
    Ok(EXIT_PASS)
}

fn show<T: std::fmt::Debug>(x: T) -> String {
    format!("{x:?}")
}

fn g0_max_matching(g0: &G0) -> MatchingResult {
    let keep: Vec<usize> = (0..g0.n()).filter(|&v| v != g0.hub).collect();
    let m = max_matching(&g0.without_hub().induced(&keep));
    let pairs: Vec<(usize, usize)> = m
        .pairs()
        .into_iter()
        .map(|(a, b)| (keep[a], keep[b]))
        .collect();
    MatchingResult::from_pairs(g0.n(), &pairs).expect("a matching")
}

/// Runs the verification suite on `g` (the built construction unless given).
pub fn verify(
    opts: &Options,
    level: Level,
    g: Option<LabeledGraph>,
) -> Result<VerificationReport, CliError> {
    let g0 = opts.g0()?;
    let g = match g {
        Some(g) => g,
        None => run(g0.clone())?.g,
    };
    let mut r = VerificationReport::default();
    r.check("counts", || {
        let c = census(&g);
        let want = "n=838 e=2508 s=91 t1=63 t2=168 u=516".to_string();
        (
            want,
            format!(
                "n={} e={} s={} t1={} t2={} u={}",
                c.n,
                c.e,
                c.s,
                c.t1,
                c.t2,
                c.u()
            ),
        )
    });
    r.check("triangulation", || {
        ("true".into(), is_plane_triangulation(&g.graph).to_string())
    });
    r.check("euler", || {
        ("2".into(), g.graph.euler_characteristic().to_string())
    });
    let barrier = verify_paper_barrier(&g);
    for c in &barrier.checks {
        r.check(&format!("barrier.{}", c.name), || {
            (c.expected.clone(), c.found.clone())
        });
    }
    r.check("matching_g0_minus_w", || {
        ("43".into(), g0_max_matching(&g0).size.to_string())
    });
    if level == Level::Full {
        r.check("two_factor", || {
            let outcome = match has_two_factor(&g.graph.to_graph()) {
                TwoFactorResult::Factor(_) => "factor".to_string(),
                TwoFactorResult::Infeasible(_) => "infeasible".to_string(),
            };
            ("infeasible".into(), outcome)
        });
        r.check("canonical_cut", || {
            let want = "|W|=413 c=275 ratio=413/275 h=-1/2".to_string();
            let got = canonical_cut(&g, &g0, &g0_max_matching(&g0))
                .map_err(|e| e.to_string())
                .and_then(|c| {
                    let s = c.cut.score().map_err(|e| e.to_string())?;
                    Ok(format!(
                        "|W|={} c={} ratio={} h={}",
                        c.cut.w.len(),
                        c.cut.components,
                        s.ratio,
                        s.h
                    ))
                });
            (want, got.unwrap_or_else(|e| e))
        });
        let d = build_d(g0.graph.degree(g0.hub))?;
        for c in d_two_tough_evidence(&d, true).checks {
            r.check(&format!("d.{}", c.name), || {
                (
                    "true".into(),
                    if c.passed {
                        "true".into()
                    } else {
                        format!("false: {}", c.detail)
                    },
                )
            });
        }
        r.check("component_graph", || {
            let got = component_graph(&g)
                .map_err(|e| e.to_string())
                .and_then(|cg| cg.matches(&g0));
            ("Ok(())".into(), show(got))
        });
    }
    Ok(r)
}

pub fn cmd_verify(
    opts: &Options,
    level: Level,
    input: Option<&Path>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let g = match input.map(Input::read).transpose()? {
        None => None,
        Some(Input::Labeled(g)) => Some(g),
        Some(Input::Plain(_)) => {
            return Err(CliError::Input("verify needs a JSON embedding".into()))
        }
    };
    let report = verify(opts, level, g)?;
    if opts.json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        write!(out, "{report}")?;
    }
    Ok(if report.overall() == Status::Pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

fn input_or_built(opts: &Options, input: Option<&Path>) -> Result<Input, CliError> {
    match input {
        Some(p) => Input::read(p),
        None => Ok(Input::Labeled(run(opts.g0()?)?.g)),
    }
}

pub fn cmd_two_factor(
    opts: &Options,
    input: Option<&Path>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let g = input_or_built(opts, input)?.graph();
    #[derive(Serialize)]
    struct Out {
        outcome: &'static str,
        edges: Option<Vec<(usize, usize)>>,
        deficiency: Option<usize>,
        low_degree_vertex: Option<usize>,
    }
    let o = match has_two_factor(&g) {
        TwoFactorResult::Factor(e) => Out {
            outcome: "factor",
            edges: Some(e),
            deficiency: None,
            low_degree_vertex: None,
        },
        TwoFactorResult::Infeasible(Infeasibility::Deficiency(d)) => Out {
            outcome: "infeasible",
            edges: None,
            deficiency: Some(d),
            low_degree_vertex: None,
        },
        TwoFactorResult::Infeasible(Infeasibility::DegreeTooSmall { vertex, .. }) => Out {
            outcome: "infeasible",
            edges: None,
            deficiency: None,
            low_degree_vertex: Some(vertex),
        },
    };
    if opts.json {
        writeln!(out, "{}", serde_json::to_string(&o).unwrap())?;
    } else {
        match (&o.edges, o.deficiency, o.low_degree_vertex) {
            (Some(e), _, _) => writeln!(out, "two_factor: factor with {} edges", e.len())?,
            (_, Some(d), _) => writeln!(out, "two_factor: infeasible (gadget deficiency {d})")?,
            (_, _, Some(v)) => writeln!(out, "two_factor: infeasible (vertex {v} has degree < 2)")?,
            _ => unreachable!(),
        }
    }
    Ok(EXIT_PASS)
}

pub fn cmd_search(
    opts: &Options,
    budget: u64,
    seed: u64,
    input: Option<&Path>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    if budget == 0 {
        return Err(CliError::Input("budget must be at least 1".into()));
    }
    let outcome = match input {
        Some(p) => search_cuts(&Input::read(p)?.graph(), budget, seed),
        None => {
            let st = run(opts.g0()?)?;
            let space = construction_space(&st.g, &st.g0);
            search_cuts_with(&st.g.graph.to_graph(), &space, budget, seed)
        }
    };
    #[derive(Serialize)]
    struct Out {
        ratio: Option<String>,
        h: Option<String>,
        components: Option<usize>,
        evaluations: u64,
        w: Option<Vec<usize>>,
    }
    let score = outcome.score();
    let o = Out {
        ratio: score.map(|s| s.ratio.to_string()),
        h: score.map(|s| s.h.to_string()),
        components: outcome.best.as_ref().map(|c| c.components),
        evaluations: outcome.evaluations,
        w: outcome.best.map(|c| c.w),
    };
    if opts.json {
        writeln!(out, "{}", serde_json::to_string(&o).unwrap())?;
    } else {
        let none = || "none".to_string();
        writeln!(out, "best ratio: {}", o.ratio.clone().unwrap_or_else(none))?;
        writeln!(out, "h: {}", o.h.clone().unwrap_or_else(none))?;
        if let (Some(w), Some(c)) = (&o.w, o.components) {
            writeln!(out, "|W|: {}  components: {c}", w.len())?;
            let list: Vec<String> = w.iter().map(usize::to_string).collect();
            writeln!(out, "W: {}", list.join(" "))?;
        }
        writeln!(out, "evaluations: {}", o.evaluations)?;
    }
    Ok(EXIT_PASS)
}

pub fn cmd_stats(opts: &Options, out: &mut dyn Write) -> Result<u8, CliError> {
    let st = run(opts.g0()?)?;
    #[derive(Serialize)]
    struct Size {
        n: usize,
        e: usize,
    }
    #[derive(Serialize)]
    struct Out {
        g0: construct::G0Census,
        d: construct::FullCensus,
        g1: Size,
        g2: Size,
        g: construct::FullCensus,
    }
    let size = |g: &LabeledGraph| Size {
        n: g.n(),
        e: g.graph.m(),
    };
    let o = Out {
        g0: st.g0.census(),
        d: census(&st.d),
        g1: size(&st.g1),
        g2: size(&st.g2),
        g: census(&st.g),
    };
    if opts.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&o).unwrap())?;
    } else {
        let c = o.g0;
        writeln!(
            out,
            "G0: p={} q={} n={} e={} f={} f_s={}",
            c.p, c.q, c.n, c.e, c.f, c.f_s
        )?;
        writeln!(out, "D:  n={} e={} f={}", o.d.n, o.d.e, o.d.f)?;
        writeln!(out, "G1: n={} e={}", o.g1.n, o.g1.e)?;
        writeln!(out, "G2: n={} e={}", o.g2.n, o.g2.e)?;
        let g = o.g;
        writeln!(out, "G:  n={} e={} f={}", g.n, g.e, g.f)?;
        writeln!(
            out,
            "    |S|={} |T1|={} |T2|={} |U_tri|={} |U_D|={}",
            g.s, g.t1, g.t2, g.u_tri, g.u_d
        )?;
    }
    Ok(EXIT_PASS)
}
