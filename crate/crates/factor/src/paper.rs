//! The explicit barrier of the full construction.

use crate::barrier::Barrier;
use crate::FactorError;
use construct::{LabeledGraph, VertexClass};
use std::collections::BTreeMap;

/// `S` and `T = T_1 ∪ T_2` read off the labels.
pub fn paper_sets(g: &LabeledGraph) -> (Vec<usize>, Vec<usize>) {
    let s = g.vertices_of(VertexClass::S);
    let t = (0..g.n()).filter(|&v| g.class(v).is_t()).collect();
    (s, t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub found: String,
}

impl Check {
    fn new(name: &'static str, expected: impl ToString, found: impl ToString) -> Self {
        Check {
            name,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.found
    }
}

#[derive(Debug, Clone)]
pub struct BarrierReport {
    pub barrier: Option<Barrier>,
    pub checks: Vec<Check>,
}

impl BarrierReport {
    pub fn passed(&self) -> bool {
        self.barrier.is_some() && self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Checks every step of the barrier computation on a labelled construction.
pub fn verify_paper_barrier(g: &LabeledGraph) -> BarrierReport {
    let (s, t) = paper_sets(g);
    let graph = g.graph.to_graph();
    let mut checks = Vec::new();
    let barrier = match Barrier::new(&graph, &s, &t) {
        Ok(b) => b,
        Err(FactorError::OverlappingSets(v)) => {
            checks.push(Check::new(
                "disjoint",
                "S ∩ T = ∅",
                format!("shared vertex {v}"),
            ));
            return BarrierReport {
                barrier: None,
                checks,
            };
        }
        Err(e) => {
            checks.push(Check::new("sets", "valid vertex sets", e));
            return BarrierReport {
                barrier: None,
                checks,
            };
        }
    };
    let t_edges = t
        .iter()
        .flat_map(|&y| graph.neighbors(y).iter().map(move |&x| (y, x)))
        .filter(|&(y, x)| y < x && g.class(x).is_t())
        .count();
    checks.push(Check::new("t_independent", 0, t_edges));
    checks.push(Check::new(
        "even_components",
        0,
        barrier.census.even_components,
    ));
    let want: BTreeMap<usize, usize> = BTreeMap::from([(3, 120), (39, 1)]);
    checks.push(Check::new(
        "census",
        format!("{want:?}"),
        format!("{:?}", barrier.census.counts),
    ));
    checks.push(Check::new("delta", -2, barrier.delta));

    let c = |k: usize| barrier.census.counts.get(&k).copied().unwrap_or(0) as i64;
    let terms = [
        2 * s.len() as i64,
        -2 * t.len() as i64,
        2 * c(3),
        38 * c(39),
    ];
    checks.push(Check::new("two_s", 182, terms[0]));
    checks.push(Check::new("minus_two_t", -462, terms[1]));
    checks.push(Check::new("two_c3", 240, terms[2]));
    checks.push(Check::new("thirty_eight_c39", 38, terms[3]));
    checks.push(Check::new(
        "arithmetic",
        barrier.delta,
        terms.iter().sum::<i64>(),
    ));
    BarrierReport {
        barrier: Some(barrier),
        checks,
    }
}
