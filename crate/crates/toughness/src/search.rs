//! Seeded local search for cuts of small ratio.
//!
//! The budget is split into fixed chunks of [`CHUNK`] evaluations; chunk `i`
//! runs on ChaCha stream `i` of the seed, so the outcome does not depend on
//! how many workers share the chunks. Each chunk restarts from a start set
//! with a few random toggles, improves it greedily over the blocks, then
//! anneals with single-vertex and block toggles. The annealing objective is
//! the integer `3c - 2|W|`; a move losing `d` is accepted with probability
//! `T / (T + d)` where `T` falls linearly from [`T0`] to 1 over a restart.

use crate::canonical::canonical_cut;
use crate::cut::{Cut, CutScore};
use crate::workers;
use construct::{LabeledGraph, VertexClass, G0};
use graphcore::{max_matching, Graph, MatchingResult};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

pub const CHUNK: u64 = 20_000;
pub const RESTART: u64 = 4_000;
pub const T0: i64 = 6;
const PERTURB: usize = 6;

/// Start sets and vertex blocks that moves may toggle as a unit.
#[derive(Debug, Clone, Default)]
pub struct SearchSpace {
    pub starts: Vec<Vec<usize>>,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub best: Option<Cut>,
    pub evaluations: u64,
}

impl SearchOutcome {
    pub fn score(&self) -> Option<CutScore> {
        self.best.as_ref().and_then(|c| c.score().ok())
    }
}

pub fn search_cuts(g: &Graph, budget: u64, seed: u64) -> SearchOutcome {
    search_cuts_with(g, &SearchSpace::default(), budget, seed)
}

type ChunkResult = (Option<Cut>, u64);

pub fn search_cuts_with(g: &Graph, space: &SearchSpace, budget: u64, seed: u64) -> SearchOutcome {
    if g.n() < 3 {
        return SearchOutcome {
            best: None,
            evaluations: 0,
        };
    }
    let chunks = budget.div_ceil(CHUNK) as usize;
    let results: Vec<Mutex<Option<ChunkResult>>> = (0..chunks).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let run = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= chunks {
            return;
        }
        let len = CHUNK.min(budget - i as u64 * CHUNK);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let out = Chunk::new(g, space, rng).run(len);
        *results[i].lock().unwrap() = Some(out);
    };
    let k = workers().min(chunks.max(1));
    if k <= 1 {
        run();
    } else {
        std::thread::scope(|s| {
            for _ in 0..k {
                s.spawn(run);
            }
        });
    }
    let mut best: Option<Cut> = None;
    let mut evaluations = 0;
    for r in results {
        let (cut, evals) = r.into_inner().unwrap().expect("every chunk ran");
        evaluations += evals;
        if let Some(c) = cut {
            if best.as_ref().is_none_or(|b| c.better_than(b)) {
                best = Some(c);
            }
        }
    }
    SearchOutcome { best, evaluations }
}

struct Chunk<'a> {
    g: &'a Graph,
    space: &'a SearchSpace,
    rng: ChaCha8Rng,
    in_w: Vec<bool>,
    members: Vec<usize>,
    slot: Vec<usize>,
    evals: u64,
    best: Option<Cut>,
}

impl<'a> Chunk<'a> {
    fn new(g: &'a Graph, space: &'a SearchSpace, rng: ChaCha8Rng) -> Self {
        let n = g.n();
        Chunk {
            g,
            space,
            rng,
            in_w: vec![false; n],
            members: Vec::new(),
            slot: vec![usize::MAX; n],
            evals: 0,
            best: None,
        }
    }

    fn toggle(&mut self, v: usize) {
        if self.in_w[v] {
            let i = self.slot[v];
            let last = *self.members.last().unwrap();
            self.members.swap_remove(i);
            if last != v {
                self.slot[last] = i;
            }
            self.slot[v] = usize::MAX;
        } else {
            self.slot[v] = self.members.len();
            self.members.push(v);
        }
        self.in_w[v] = !self.in_w[v];
    }

    /// Scores the current `W`, records it if it is the best cut so far and
    /// returns `3c - 2|W|`.
    fn evaluate(&mut self) -> i64 {
        self.evals += 1;
        let c = self.g.count_components_without(&self.in_w);
        let k = self.members.len();
        if c >= 2 {
            let better = match &self.best {
                None => true,
                Some(b) => {
                    let (l, r) = (k * b.components, b.w.len() * c);
                    l < r
                        || (l == r && {
                            let mut w = self.members.clone();
                            w.sort_unstable();
                            w < b.w
                        })
                }
            };
            if better {
                let mut w = self.members.clone();
                w.sort_unstable();
                self.best = Some(Cut { w, components: c });
            }
        }
        3 * c as i64 - 2 * k as i64
    }

    fn reset_to(&mut self, set: &[usize]) {
        for v in self.members.clone() {
            self.toggle(v);
        }
        for &v in set {
            if !self.in_w[v] {
                self.toggle(v);
            }
        }
    }

    /// Toggles a block: removes it when fully inside `W`, otherwise adds the rest.
    fn toggle_block(&mut self, b: usize) -> Vec<usize> {
        let block = &self.space.blocks[b];
        let full = block.iter().all(|&v| self.in_w[v]);
        let changed: Vec<usize> = block
            .iter()
            .copied()
            .filter(|&v| self.in_w[v] == full)
            .collect();
        for &v in &changed {
            self.toggle(v);
        }
        changed
    }

    fn random_vertex(&mut self) -> usize {
        if !self.members.is_empty() && self.rng.gen_bool(0.5) {
            let w = self.members[self.rng.gen_range(0..self.members.len())];
            let ns = self.g.neighbors(w);
            if !ns.is_empty() && self.rng.gen_bool(0.5) {
                return ns[self.rng.gen_range(0..ns.len())];
            }
            return w;
        }
        self.rng.gen_range(0..self.g.n())
    }

    fn restart(&mut self) {
        let n = self.g.n();
        if self.space.starts.is_empty() {
            let size = self.rng.gen_range(1..n.max(2));
            let set: Vec<usize> =
                rand::seq::index::sample(&mut self.rng, n, size.min(n)).into_vec();
            self.reset_to(&set);
        } else {
            let i = self.rng.gen_range(0..self.space.starts.len());
            let start = self.space.starts[i].clone();
            self.reset_to(&start);
            for _ in 0..self.rng.gen_range(0..=PERTURB) {
                let v = self.random_vertex();
                self.toggle(v);
            }
        }
    }

    fn greedy_blocks(&mut self, score: &mut i64, left: &mut u64) {
        let mut order: Vec<usize> = (0..self.space.blocks.len()).collect();
        order.shuffle(&mut self.rng);
        for b in order {
            if *left == 0 {
                return;
            }
            let changed = self.toggle_block(b);
            if changed.is_empty() {
                continue;
            }
            *left -= 1;
            let s = self.evaluate();
            if s > *score {
                *score = s;
            } else {
                for v in changed {
                    self.toggle(v);
                }
            }
        }
    }

    fn run(mut self, budget: u64) -> (Option<Cut>, u64) {
        let mut left = budget;
        while left > 0 {
            self.restart();
            left -= 1;
            let mut score = self.evaluate();
            self.greedy_blocks(&mut score, &mut left);
            let steps = RESTART.min(left);
            for step in 0..steps {
                let temp = 1 + (T0 - 1) * (steps - step) as i64 / steps as i64;
                let changed = if !self.space.blocks.is_empty() && self.rng.gen_range(0..5) == 0 {
                    let b = self.rng.gen_range(0..self.space.blocks.len());
                    self.toggle_block(b)
                } else {
                    let v = self.random_vertex();
                    self.toggle(v);
                    vec![v]
                };
                left -= 1;
                if changed.is_empty() {
                    continue;
                }
                let s = self.evaluate();
                let loss = score - s;
                if loss <= 0 || self.rng.gen_range(0..temp + loss) < temp {
                    score = s;
                } else {
                    for v in changed {
                        self.toggle(v);
                    }
                }
            }
        }
        (self.best, self.evals)
    }
}

/// Start sets and blocks taken from the construction: the canonical cuts for
/// a maximum and an empty matching, `S`, `S ∪ T`, `S ∪ V(A_1)`; blocks are the
/// S-triangles with their pendants, spokes, C3-triangles and rings.
pub fn construction_space(g: &LabeledGraph, g0: &G0) -> SearchSpace {
    let mut starts = Vec::new();
    let keep: Vec<usize> = (0..g0.n()).filter(|&v| v != g0.hub).collect();
    let sub = g0.without_hub().induced(&keep);
    let m = max_matching(&sub);
    let pairs: Vec<(usize, usize)> = m
        .pairs()
        .into_iter()
        .map(|(a, b)| (keep[a], keep[b]))
        .collect();
    for p in [&pairs[..], &[]] {
        let matching = MatchingResult::from_pairs(g0.n(), p).expect("disjoint pairs");
        if let Ok(c) = canonical_cut(g, g0, &matching) {
            starts.push(c.cut.w);
        }
    }
    let s = g.vertices_of(VertexClass::S);
    let mut s_t = s.clone();
    s_t.extend((0..g.n()).filter(|&v| g.class(v).is_t()));
    let mut s_a = s.clone();
    s_a.extend(&g.registries.rings[0]);
    starts.extend([s, s_t, s_a]);

    let r = &g.registries;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for t in &r.s_triangles {
        blocks.push(t.vertices.to_vec());
        blocks.push(t.vertices.iter().chain(&t.pendants).copied().collect());
    }
    blocks.extend(r.spokes.iter().map(|s| s.path.clone()));
    blocks.extend(r.c3_triangles.iter().map(|t| t.vertices.to_vec()));
    blocks.extend(r.rings.iter().cloned());
    SearchSpace { starts, blocks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcore::generators::{cycle, petersen};
    use num_rational::Rational64;

    #[test]
    fn finds_known_minima() {
        let p = search_cuts(&petersen(), 10_000, 1);
        assert_eq!(p.score().unwrap().ratio, Rational64::new(4, 3));
        let c = search_cuts(&cycle(6), 5_000, 1);
        assert_eq!(c.score().unwrap().ratio, Rational64::from_integer(1));
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            search_cuts(&petersen(), 30_000, 9),
            search_cuts(&petersen(), 30_000, 9)
        );
    }
}
