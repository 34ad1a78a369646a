use crate::FactorError;
use graphcore::{max_matching, Graph};

/// Tutte's gadget for `f ≡ 2`.
#[derive(Debug, Clone)]
pub struct TutteGadget {
    pub graph: Graph,
    /// For each gadget node, the original vertex it belongs to and, for an
    /// external node, the neighbour its edge leads to.
    pub owner: Vec<(usize, Option<usize>)>,
}

impl TutteGadget {
    /// Original edge behind a gadget edge between two external nodes.
    pub fn original_edge(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        match (self.owner[a], self.owner[b]) {
            ((u, Some(x)), (v, Some(y))) if x == v && y == u => Some((u.min(v), u.max(v))),
            _ => None,
        }
    }
}

/// `d(v)` external nodes and `d(v) - 2` internal nodes per vertex, internals
/// joined to every external of the same vertex, externals paired along edges.
pub fn tutte_gadget(g: &Graph) -> Result<TutteGadget, FactorError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < 2) {
        return Err(FactorError::DegreeTooSmall {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let mut owner = Vec::new();
    let mut external = Vec::with_capacity(g.n());
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let ext: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&u| {
                owner.push((v, Some(u)));
                owner.len() - 1
            })
            .collect();
        for _ in 2..g.degree(v) {
            owner.push((v, None));
            let i = owner.len() - 1;
            edges.extend(ext.iter().map(|&x| (i, x)));
        }
        external.push(ext);
    }
    for v in 0..g.n() {
        for (k, &u) in g.neighbors(v).iter().enumerate() {
            if v < u {
                let back = g.neighbors(u).binary_search(&v).unwrap();
                edges.push((external[v][k], external[u][back]));
            }
        }
    }
    Ok(TutteGadget {
        graph: Graph::from_edges(owner.len(), edges),
        owner,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasibility {
    /// Gadget nodes left unmatched by a maximum matching.
    Deficiency(usize),
    DegreeTooSmall {
        vertex: usize,
        degree: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoFactorResult {
    /// Edges `(u, v)` with `u < v`, sorted.
    Factor(Vec<(usize, usize)>),
    Infeasible(Infeasibility),
}

impl TwoFactorResult {
    pub fn is_factor(&self) -> bool {
        matches!(self, TwoFactorResult::Factor(_))
    }
}

/// Checks that `edges` is a spanning 2-regular subgraph of `g`.
pub fn is_two_factor(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut deg = vec![0usize; g.n()];
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return false;
        }
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == edges.len() && deg.iter().all(|&d| d == 2)
}

pub fn has_two_factor(g: &Graph) -> TwoFactorResult {
    let gadget = match tutte_gadget(g) {
        Ok(x) => x,
        Err(FactorError::DegreeTooSmall { vertex, degree }) => {
            return TwoFactorResult::Infeasible(Infeasibility::DegreeTooSmall { vertex, degree })
        }
        Err(e) => unreachable!("{e}"),
    };
    let m = max_matching(&gadget.graph);
    let deficiency = gadget.graph.n() - 2 * m.size;
    if deficiency > 0 {
        return TwoFactorResult::Infeasible(Infeasibility::Deficiency(deficiency));
    }
    let mut factor: Vec<(usize, usize)> = m
        .pairs()
        .into_iter()
        .filter_map(|(a, b)| gadget.original_edge(a, b))
        .collect();
    factor.sort_unstable();
    assert!(
        is_two_factor(g, &factor),
        "gadget back-map produced a non-factor"
    );
    TwoFactorResult::Factor(factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcore::generators::{complete, cycle, path, petersen};

    #[test]
    fn triangle_gadget() {
        let gd = tutte_gadget(&complete(3)).unwrap();
        assert_eq!(gd.graph.n(), 6);
        assert_eq!(
            has_two_factor(&complete(3)),
            TwoFactorResult::Factor(vec![(0, 1), (0, 2), (1, 2)])
        );
    }

    #[test]
    fn k4_gadget() {
        let gd = tutte_gadget(&complete(4)).unwrap();
        assert_eq!(gd.owner.iter().filter(|o| o.1.is_some()).count(), 12);
        assert_eq!(gd.owner.iter().filter(|o| o.1.is_none()).count(), 4);
        assert!(has_two_factor(&complete(4)).is_factor());
    }

    #[test]
    fn cycle_is_its_own_factor() {
        let g = cycle(7);
        assert_eq!(has_two_factor(&g), TwoFactorResult::Factor(g.edges()));
    }

    #[test]
    fn low_degree() {
        assert_eq!(
            tutte_gadget(&path(3)).unwrap_err(),
            FactorError::DegreeTooSmall {
                vertex: 0,
                degree: 1
            }
        );
        assert!(matches!(
            has_two_factor(&path(3)),
            TwoFactorResult::Infeasible(Infeasibility::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn petersen_has_a_factor() {
        // Two disjoint pentagons.
        assert!(has_two_factor(&petersen()).is_factor());
    }

    #[test]
    fn k23_has_no_factor() {
        let g = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(matches!(
            has_two_factor(&g),
            TwoFactorResult::Infeasible(Infeasibility::Deficiency(_))
        ));
    }
}
