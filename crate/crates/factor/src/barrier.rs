use crate::FactorError;
use graphcore::Graph;
use std::collections::BTreeMap;

/// Odd components of `G - (S ∪ T)` tallied by `e_G(D, T)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OddComponentCensus {
    pub counts: BTreeMap<usize, usize>,
    pub even_components: usize,
}

impl OddComponentCensus {
    /// `c(S, T)`.
    pub fn odd_components(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn total_components(&self) -> usize {
        self.odd_components() + self.even_components
    }
}

/// A pair `(S, T)` together with its deficiency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Barrier {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub delta: i64,
    pub census: OddComponentCensus,
}

impl Barrier {
    pub fn new(g: &Graph, s: &[usize], t: &[usize]) -> Result<Self, FactorError> {
        let sets = Sets::new(g, s, t)?;
        let census = sets.census(g);
        Ok(Barrier {
            s: s.to_vec(),
            t: t.to_vec(),
            delta: sets.delta(g, &census),
            census,
        })
    }

    pub fn is_barrier(&self) -> bool {
        self.delta <= -2
    }
}

struct Sets {
    in_s: Vec<bool>,
    in_t: Vec<bool>,
    s: usize,
    t: Vec<usize>,
}

impl Sets {
    fn new(g: &Graph, s: &[usize], t: &[usize]) -> Result<Self, FactorError> {
        let n = g.n();
        let mut in_s = vec![false; n];
        let mut in_t = vec![false; n];
        for (set, mark) in [(s, &mut in_s), (t, &mut in_t)] {
            for &v in set {
                if v >= n {
                    return Err(FactorError::OutOfRange { vertex: v, n });
                }
                mark[v] = true;
            }
        }
        if let Some(v) = (0..n).find(|&v| in_s[v] && in_t[v]) {
            return Err(FactorError::OverlappingSets(v));
        }
        let s = in_s.iter().filter(|&&b| b).count();
        let t = (0..n).filter(|&v| in_t[v]).collect();
        Ok(Sets { in_s, in_t, s, t })
    }

    fn census(&self, g: &Graph) -> OddComponentCensus {
        let removed: Vec<bool> = (0..g.n()).map(|v| self.in_s[v] || self.in_t[v]).collect();
        let (comp, count) = g.components_without(&removed);
        let mut to_t = vec![0usize; count];
        for &y in &self.t {
            for &x in g.neighbors(y) {
                if !removed[x] {
                    to_t[comp[x]] += 1;
                }
            }
        }
        let mut census = OddComponentCensus::default();
        for e in to_t {
            if e % 2 == 1 {
                *census.counts.entry(e).or_default() += 1;
            } else {
                census.even_components += 1;
            }
        }
        census
    }

    fn delta(&self, g: &Graph, census: &OddComponentCensus) -> i64 {
        let deg_t: usize = self
            .t
            .iter()
            .map(|&y| g.neighbors(y).iter().filter(|&&x| !self.in_s[x]).count())
            .sum();
        2 * self.s as i64 + deg_t as i64 - 2 * self.t.len() as i64 - census.odd_components() as i64
    }
}

pub fn odd_component_census(
    g: &Graph,
    s: &[usize],
    t: &[usize],
) -> Result<OddComponentCensus, FactorError> {
    Ok(Sets::new(g, s, t)?.census(g))
}

/// `δ(S, T) = 2|S| + Σ_{y∈T} d_{G-S}(y) - 2|T| - c(S, T)`.
pub fn delta(g: &Graph, s: &[usize], t: &[usize]) -> Result<i64, FactorError> {
    let sets = Sets::new(g, s, t)?;
    Ok(sets.delta(g, &sets.census(g)))
}

pub fn is_barrier(g: &Graph, s: &[usize], t: &[usize]) -> Result<bool, FactorError> {
    Ok(delta(g, s, t)? <= -2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcore::generators::{complete, cycle, path};

    #[test]
    fn path_with_middle_in_t() {
        let c = odd_component_census(&path(3), &[], &[1]).unwrap();
        assert_eq!(c.counts, BTreeMap::from([(1, 2)]));
        assert_eq!(c.even_components, 0);
    }

    #[test]
    fn empty_pair() {
        let g = cycle(6);
        let c = odd_component_census(&g, &[], &[]).unwrap();
        assert!(c.counts.is_empty());
        assert_eq!(c.even_components, 1);
        assert_eq!(delta(&g, &[], &[]).unwrap(), 0);
        assert!(!is_barrier(&g, &[], &[]).unwrap());
    }

    #[test]
    fn small_deltas() {
        assert_eq!(delta(&complete(3), &[], &[0]).unwrap(), 0);
        assert_eq!(delta(&cycle(4), &[], &[0]).unwrap(), 0);
        assert!(!is_barrier(&cycle(4), &[], &[0]).unwrap());
        // K_{1,3} with T = the leaves.
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(delta(&star, &[], &[1, 2, 3]).unwrap(), -4);
    }

    #[test]
    fn overlap_is_an_error() {
        assert_eq!(
            delta(&cycle(4), &[1], &[1]),
            Err(FactorError::OverlappingSets(1))
        );
        assert!(matches!(
            delta(&cycle(4), &[9], &[]),
            Err(FactorError::OutOfRange { .. })
        ));
    }
}
