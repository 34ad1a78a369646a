use crate::{three_halves, ToughnessError};
use graphcore::Graph;
use num_rational::Rational64;
use std::cmp::Ordering;

/// A vertex set `W` (sorted) with `c(G - W)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    pub w: Vec<usize>,
    pub components: usize,
}

/// `|W| / c(G - W)` and `h(W) = (3/2) c(G - W) - |W|`, both exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutScore {
    pub ratio: Rational64,
    pub h: Rational64,
}

impl Cut {
    /// Builds the cut by traversal; `w` may be unsorted and contain repeats.
    pub fn new(g: &Graph, w: &[usize]) -> Result<Self, ToughnessError> {
        let mut removed = vec![false; g.n()];
        for &v in w {
            *removed.get_mut(v).ok_or(ToughnessError::OutOfRange(v))? = true;
        }
        let w: Vec<usize> = (0..g.n()).filter(|&v| removed[v]).collect();
        Ok(Cut {
            components: g.count_components_without(&removed),
            w,
        })
    }

    pub fn score(&self) -> Result<CutScore, ToughnessError> {
        if self.components < 2 {
            return Err(ToughnessError::NotACutset {
                components: self.components,
            });
        }
        let (w, c) = (self.w.len() as i64, self.components as i64);
        Ok(CutScore {
            ratio: Rational64::new(w, c),
            h: three_halves() * c - w,
        })
    }

    /// Orders by ratio, then lexicographically by `W`.
    pub fn better_than(&self, other: &Cut) -> bool {
        let (a, b) = (self.score().ok(), other.score().ok());
        match (a, b) {
            (Some(a), Some(b)) => match a.ratio.cmp(&b.ratio) {
                Ordering::Equal => self.w < other.w,
                o => o == Ordering::Less,
            },
            (Some(_), None) => true,
            _ => false,
        }
    }
}

pub fn cut_score(g: &Graph, w: &[usize]) -> Result<CutScore, ToughnessError> {
    Cut::new(g, w)?.score()
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcore::generators::cycle;

    #[test]
    fn antipodal_pair_of_c6() {
        let s = cut_score(&cycle(6), &[0, 3]).unwrap();
        assert_eq!(s.ratio, Rational64::from_integer(1));
        assert_eq!(s.h, Rational64::from_integer(1));
    }

    #[test]
    fn trivial_sets_are_not_cutsets() {
        let g = cycle(5);
        assert_eq!(
            cut_score(&g, &[]),
            Err(ToughnessError::NotACutset { components: 1 })
        );
        assert_eq!(
            cut_score(&g, &[0, 1, 2, 3, 4]),
            Err(ToughnessError::NotACutset { components: 0 })
        );
    }
}
