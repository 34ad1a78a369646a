//! Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).
//!
//! Each exposed vertex is used once as the root of an alternating BFS tree; odd
//! cycles are contracted by relabelling their base. A root that fails to reach an
//! exposed vertex can never be matched later, so one pass suffices. Work per
//! search is bounded by the size of the tree it explores.

use crate::graph::Graph;
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// A matching given by partner pointers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    pub mate: Vec<Option<usize>>,
    pub size: usize,
}

impl MatchingResult {
    /// Matching on `n` vertices from a list of pairs; `None` if two pairs share a vertex.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Option<Self> {
        let mut mate = vec![None; n];
        for &(u, v) in pairs {
            if u == v || u >= n || v >= n || mate[u].is_some() || mate[v].is_some() {
                return None;
            }
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        Some(MatchingResult {
            mate,
            size: pairs.len(),
        })
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// Checks pairwise disjointness, symmetry and that every pair is an edge of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.mate.len() != g.n() {
            return false;
        }
        let mut count = 0;
        for (u, m) in self.mate.iter().enumerate() {
            if let Some(v) = *m {
                if v >= g.n() || self.mate[v] != Some(u) || !g.has_edge(u, v) {
                    return false;
                }
                count += 1;
            }
        }
        count == 2 * self.size
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.size == self.mate.len()
    }
}

struct Search {
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    stamp: Vec<u32>,
    clock: u32,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
            stamp: vec![0; n],
            clock: 0,
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn touch(&mut self, v: usize) {
        if !self.in_queue[v] && self.parent[v] == NONE {
            self.touched.push(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.parent[v] = NONE;
            self.base[v] = v;
            self.in_queue[v] = false;
            self.in_blossom[v] = false;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn lca(&mut self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        self.clock += 1;
        let c = self.clock;
        loop {
            a = self.base[a];
            self.stamp[a] = c;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if self.stamp[b] == c {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    fn enqueue(&mut self, v: usize) {
        self.touch(v);
        self.in_queue[v] = true;
        self.queue.push_back(v);
    }

    /// Grows an alternating tree from `root`; returns an exposed endpoint if found.
    fn find_path(&mut self, g: &Graph, mate: &[usize], root: usize) -> Option<usize> {
        self.reset();
        self.enqueue(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                let outer = to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE);
                if outer {
                    let b = self.lca(mate, v, to);
                    for &x in &self.touched {
                        self.in_blossom[x] = false;
                    }
                    self.mark_path(mate, v, b, to);
                    self.mark_path(mate, to, b, v);
                    let members: Vec<usize> = self.touched.clone();
                    for x in members {
                        if self.in_blossom[self.base[x]] {
                            self.base[x] = b;
                            if !self.in_queue[x] {
                                self.enqueue(x);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.touch(to);
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    self.enqueue(mate[to]);
                }
            }
        }
        None
    }
}

/// A maximum cardinality matching of `g`.
pub fn max_matching(g: &Graph) -> MatchingResult {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&u) = g.neighbors(v).iter().find(|&&u| mate[u] == NONE) {
                mate[v] = u;
                mate[u] = v;
            }
        }
    }
    let mut search = Search::new(n);
    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = search.find_path(g, &mate, root) {
            while v != NONE {
                let pv = search.parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }
    let size = mate.iter().filter(|&&m| m != NONE).count() / 2;
    MatchingResult {
        mate: mate.into_iter().map(|m| (m != NONE).then_some(m)).collect(),
        size,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn small_cases() {
        assert_eq!(max_matching(&cycle(5)).size, 2);
        assert_eq!(max_matching(&cycle(6)).size, 3);
        assert_eq!(max_matching(&petersen()).size, 5);
        assert_eq!(max_matching(&complete(7)).size, 3);
        assert_eq!(max_matching(&Graph::new(4)).size, 0);
    }

    #[test]
    fn needs_a_blossom() {
        // Triangle 0-1-2 with tails 2-3 and 0-4; greedy matches 0-1 first.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (1, 5)]);
        let m = max_matching(&g);
        assert_eq!(m.size, 3);
        assert!(m.is_valid_for(&g));
    }
}
