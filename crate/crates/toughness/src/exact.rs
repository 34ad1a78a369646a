use crate::cut::Cut;
use crate::{workers, ToughnessError};
use graphcore::Graph;
use num_rational::Rational64;
use std::fmt;

pub const DEFAULT_BOUND: usize = 20;
const MAX_BOUND: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Toughness {
    Finite(Rational64),
    Infinite,
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(r) => write!(f, "{r}"),
            Toughness::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughnessReport {
    pub value: Toughness,
    /// The lexicographically smallest minimising `W`.
    pub witness: Option<Cut>,
}

impl ToughnessReport {
    fn infinite() -> Self {
        ToughnessReport {
            value: Toughness::Infinite,
            witness: None,
        }
    }

    fn from_cut(cut: Cut) -> Self {
        let value = Toughness::Finite(Rational64::new(cut.w.len() as i64, cut.components as i64));
        ToughnessReport {
            value,
            witness: Some(cut),
        }
    }
}

/// Exact toughness with the default bound of 20 vertices.
pub fn toughness_exact(g: &Graph) -> Result<ToughnessReport, ToughnessError> {
    toughness_exact_with(g, DEFAULT_BOUND)
}

/// `a < b` for the sorted vertex lists encoded by the masks.
fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    if d == 0 {
        return false;
    }
    let i = d.trailing_zeros();
    let above = |x: u64| i < 63 && x >> (i + 1) != 0;
    if a >> i & 1 == 1 {
        above(b)
    } else {
        !above(a)
    }
}

#[derive(Clone, Copy)]
struct Best {
    k: u64,
    c: u64,
    mask: u64,
}

impl Best {
    fn beats(self, other: Option<Best>) -> bool {
        match other {
            None => true,
            Some(o) => {
                let (l, r) = (self.k * o.c, o.k * self.c);
                l < r || (l == r && lex_less(self.mask, o.mask))
            }
        }
    }
}

fn components(adj: &[u64], mut rest: u64) -> u64 {
    let mut count = 0;
    while rest != 0 {
        count += 1;
        let mut frontier = rest & rest.wrapping_neg();
        rest &= !frontier;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & rest;
            rest &= !frontier;
        }
    }
    count
}

fn scan(adj: &[u64], n: usize, lo: u64, hi: u64) -> Option<Best> {
    let full = (1u64 << n) - 1;
    let n = n as u64;
    let mut best: Option<Best> = None;
    for mask in lo..hi {
        let k = mask.count_ones() as u64;
        if k + 2 > n {
            continue;
        }
        if let Some(b) = best {
            // c <= n - k, so k / (n - k) bounds the ratio from below.
            if k * b.c > b.k * (n - k) {
                continue;
            }
        }
        let c = components(adj, full & !mask);
        if c >= 2 {
            let cand = Best { k, c, mask };
            if cand.beats(best) {
                best = Some(cand);
            }
        }
    }
    best
}

/// Exhaustive enumeration over all subsets for graphs with at most `bound`
/// vertices, sharded across [`workers`] threads.
pub fn toughness_exact_with(g: &Graph, bound: usize) -> Result<ToughnessReport, ToughnessError> {
    let n = g.n();
    if n > bound.min(MAX_BOUND) {
        return Err(ToughnessError::TooLarge {
            n,
            bound: bound.min(MAX_BOUND),
        });
    }
    if g.is_complete() {
        return Ok(ToughnessReport::infinite());
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let total = 1u64 << n;
    let shards = (workers() as u64 * 8).min(total);
    let range = |i: u64| (total * i / shards, total * (i + 1) / shards);
    let results: Vec<Option<Best>> = if shards <= 1 || workers() == 1 {
        vec![scan(&adj, n, 0, total)]
    } else {
        let next = std::sync::atomic::AtomicU64::new(0);
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers())
                .map(|_| {
                    s.spawn(|| {
                        let mut local = None;
                        loop {
                            let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                            if i >= shards {
                                return local;
                            }
                            let (lo, hi) = range(i);
                            if let Some(b) = scan(&adj, n, lo, hi) {
                                if b.beats(local) {
                                    local = Some(b);
                                }
                            }
                        }
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };
    let best = results
        .into_iter()
        .flatten()
        .fold(None, |acc, b| if b.beats(acc) { Some(b) } else { acc });
    let b = best.expect("a non-complete graph has a cutset");
    let w = (0..n).filter(|&v| b.mask >> v & 1 == 1).collect();
    Ok(ToughnessReport::from_cut(Cut {
        w,
        components: b.c as usize,
    }))
}

/// Independent oracle: subsets by increasing size, stopping once
/// `k / (n - k)` exceeds the best ratio found.
pub fn toughness_by_size(g: &Graph) -> ToughnessReport {
    let n = g.n();
    if g.is_complete() {
        return ToughnessReport::infinite();
    }
    let mut best: Option<Cut> = None;
    for k in 0..n.saturating_sub(1) {
        if let Some(b) = &best {
            if (k * b.components) as u64 > (b.w.len() * (n - k)) as u64 {
                break;
            }
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let cut = Cut::new(g, &idx).expect("indices in range");
            if cut.components >= 2 && best.as_ref().is_none_or(|b| cut.better_than(b)) {
                best = Some(cut);
            }
            // Next k-combination in lexicographic order.
            let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    ToughnessReport::from_cut(best.expect("a non-complete graph has a cutset"))
}
