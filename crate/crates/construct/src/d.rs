//! The graph `D`: four concentric `m`-cycles joined by rungs and diagonals, with
//! a fan inside the innermost cycle.

use crate::error::ConstructError;
use crate::labels::{LabeledGraph, Registries, Stage, VertexClass, VertexIndex, VertexLabel};
use graphcore::EmbeddedGraph;

pub const RINGS: usize = 4;

/// Builds `D(m)` with `A_1` bounding the unique non-triangular face.
///
/// Vertex `a_{i,j}` gets id `(i-1)m + (j-1)`. The drawing behind the rotations
/// puts `A_1` outermost with `j` increasing counter-clockwise.
pub fn build_d(m: usize) -> Result<LabeledGraph, ConstructError> {
    if m < 5 {
        return Err(ConstructError::ParameterOutOfRange {
            name: "m",
            value: m,
            allowed: ">= 5",
        });
    }
    let a = |i: usize, j: isize| (i - 1) * m + (j - 1).rem_euclid(m as isize) as usize;
    let mut rot = vec![Vec::new(); RINGS * m];
    for i in 1..=RINGS {
        for jj in 1..=m {
            let j = jj as isize;
            let r = &mut rot[a(i, j)];
            r.push(a(i, j + 1));
            if i > 1 {
                r.push(a(i - 1, j));
                r.push(a(i - 1, j - 1));
            }
            r.push(a(i, j - 1));
            if i < RINGS {
                r.push(a(i + 1, j));
                r.push(a(i + 1, j + 1));
            } else if jj == 1 {
                r.extend((3..m as isize).rev().map(|k| a(RINGS, k)));
            } else if (3..m).contains(&jj) {
                r.push(a(RINGS, 1));
            }
        }
    }
    let graph = EmbeddedGraph::from_rotation(rot)?;
    graph.check_plane()?;
    let labels = (0..RINGS * m)
        .map(|v| VertexLabel {
            class: VertexClass::UD,
            index: VertexIndex::Ring {
                ring: (v / m + 1) as u32,
                pos: (v % m + 1) as u32,
            },
        })
        .collect();
    let rings = (0..RINGS).map(|i| (i * m..(i + 1) * m).collect()).collect();
    Ok(LabeledGraph {
        graph,
        labels,
        registries: Registries {
            rings,
            ..Registries::default()
        },
        stage: Stage::D,
    })
}

/// Ring length of a graph produced by [`build_d`].
pub fn ring_length(d: &LabeledGraph) -> usize {
    d.registries.rings.first().map_or(0, Vec::len)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for m in [5, 6, 39] {
            let d = build_d(m).unwrap();
            assert_eq!(d.n(), 4 * m);
            assert_eq!(d.graph.m(), 4 * m + 3 * m + 3 * m + (m - 3));
            let faces = d.graph.faces().cycles;
            assert_eq!(faces.len(), d.graph.m() + 2 - d.n());
            let big: Vec<_> = faces.iter().filter(|f| f.len() != 3).collect();
            assert_eq!(big.len(), 1);
            let mut outer: Vec<usize> = big[0].vertices().collect();
            outer.sort_unstable();
            assert_eq!(outer, d.registries.rings[0]);
        }
    }

    #[test]
    fn rejects_short_rings() {
        assert!(build_d(4).is_err());
    }
}
