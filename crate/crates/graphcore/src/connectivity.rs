//! Vertex connectivity through unit-capacity flows on the split digraph.

use crate::graph::Graph;
use std::collections::VecDeque;

/// Residual network where vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1`.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u8>,
    first: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            first: vec![Vec::new(); 2 * g.n()],
        };
        for v in 0..g.n() {
            net.arc(2 * v, 2 * v + 1);
            for &u in g.neighbors(v) {
                net.arc(2 * v + 1, 2 * u);
            }
        }
        net
    }

    fn arc(&mut self, a: usize, b: usize) {
        self.first[a].push(self.head.len());
        self.head.push(b);
        self.cap.push(1);
        self.first[b].push(self.head.len());
        self.head.push(a);
        self.cap.push(0);
    }

    fn reset(&mut self) {
        for (i, c) in self.cap.iter_mut().enumerate() {
            *c = u8::from(i % 2 == 0);
        }
    }

    /// Number of internally disjoint `s`-`t` paths, stopping once `limit` is reached.
    fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.reset();
        let (src, dst) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut via = vec![usize::MAX; self.first.len()];
        while flow < limit {
            via.iter_mut().for_each(|x| *x = usize::MAX);
            let mut queue = VecDeque::from([src]);
            via[src] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                if x == dst {
                    break;
                }
                for &e in &self.first[x] {
                    let y = self.head[e];
                    if self.cap[e] > 0 && via[y] == usize::MAX {
                        via[y] = e;
                        queue.push_back(y);
                    }
                }
            }
            if via[dst] == usize::MAX {
                break;
            }
            let mut x = dst;
            while x != src {
                let e = via[x];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                x = self.head[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Size of a smallest vertex cut; `n - 1` for complete graphs and 0 for
/// disconnected graphs.
///
/// Uses Even's scheme: some vertex among the first `k + 1` lies outside any
/// minimum cut of size `k`, so only pairs with a small first index are tried.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    let mut net = SplitNetwork::new(g);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(net.disjoint_paths(i, j, best));
            }
        }
        i += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn known_values() {
        assert_eq!(vertex_connectivity(&cycle(6)), 2);
        assert_eq!(vertex_connectivity(&complete(5)), 4);
        assert_eq!(vertex_connectivity(&path(4)), 1);
        assert_eq!(vertex_connectivity(&petersen()), 3);
        assert_eq!(vertex_connectivity(&icosahedron()), 5);
        assert_eq!(vertex_connectivity(&Graph::new(3)), 0);
    }
}
