//! Rotation systems and face tracing.
//!
//! Every vertex stores its neighbours in clockwise order. The face to the left of
//! the dart `u -> v` continues with `v -> succ_v(u)`, where `succ_v(u)` is the
//! neighbour following `u` clockwise around `v`. With this rule bounded faces are
//! traced counter-clockwise.

use crate::graph::Graph;
use thiserror::Error;

/// A directed edge `(tail, head)`.
pub type Dart = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation is not symmetric: {0} lists {1} but not conversely")]
    Asymmetric(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} lists neighbour {1} twice")]
    Parallel(usize, usize),
    #[error("vertex {0} lists out-of-range neighbour {1}")]
    OutOfRange(usize, usize),
    #[error("dart {0:?} is not in the graph")]
    MissingDart(Dart),
    #[error("corners {0:?} and {1:?} do not lie on a common face")]
    NotOnFace(Dart, Dart),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("face left of {0:?} is not bounded by a simple cycle")]
    NotSimpleFace(Dart),
    #[error("Euler check failed: n - e + f = {0}")]
    Euler(i64),
}

/// A simple graph together with a clockwise rotation at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EmbeddedGraph {
    rot: Vec<Vec<usize>>,
    m: usize,
}

/// Boundary walk of one face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCycle {
    pub darts: Vec<Dart>,
}

impl FaceCycle {
    /// Number of darts on the boundary walk.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertices in walk order (a vertex repeats if the walk revisits it).
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|d| d.0)
    }
}

/// Result of tracing all faces.
#[derive(Debug, Clone)]
pub struct Faces {
    pub cycles: Vec<FaceCycle>,
    /// Set when the graph is disconnected (isolated vertices included); the
    /// traces are then per component and Euler's formula does not apply directly.
    pub disconnected: bool,
}

impl EmbeddedGraph {
    /// Validates a rotation system: symmetric, loop-free, no repeated neighbours.
    pub fn from_rotation(rot: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let n = rot.len();
        let mut darts = 0usize;
        for (v, ns) in rot.iter().enumerate() {
            let mut seen = ns.clone();
            seen.sort_unstable();
            for w in seen.windows(2) {
                if w[0] == w[1] {
                    return Err(EmbeddingError::Parallel(v, w[0]));
                }
            }
            for &u in ns {
                if u >= n {
                    return Err(EmbeddingError::OutOfRange(v, u));
                }
                if u == v {
                    return Err(EmbeddingError::SelfLoop(v));
                }
                if !rot[u].contains(&v) {
                    return Err(EmbeddingError::Asymmetric(v, u));
                }
            }
            darts += ns.len();
        }
        Ok(EmbeddedGraph { rot, m: darts / 2 })
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rot[u].contains(&v)
    }

    fn pos(&self, v: usize, u: usize) -> Option<usize> {
        self.rot[v].iter().position(|&x| x == u)
    }

    /// Neighbour following `u` clockwise around `v`.
    ///
    /// # Panics
    /// Panics if `u` is not a neighbour of `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        let i = self.pos(v, u).expect("succ: not a neighbour");
        r[(i + 1) % r.len()]
    }

    /// Neighbour preceding `u` clockwise around `v`.
    pub fn pred(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        let i = self.pos(v, u).expect("pred: not a neighbour");
        r[(i + r.len() - 1) % r.len()]
    }

    /// The dart after `d` on the face to its left.
    pub fn next_dart(&self, d: Dart) -> Dart {
        (d.1, self.succ(d.1, d.0))
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for (v, ns) in self.rot.iter().enumerate() {
            for &u in ns {
                if u > v {
                    g.add_edge(v, u);
                }
            }
        }
        g
    }

    /// Boundary walk of the face to the left of `d`.
    pub fn face_of(&self, d: Dart) -> Result<FaceCycle, EmbeddingError> {
        if d.0 >= self.n() || !self.has_edge(d.0, d.1) {
            return Err(EmbeddingError::MissingDart(d));
        }
        let mut darts = vec![d];
        let mut cur = self.next_dart(d);
        while cur != d {
            darts.push(cur);
            cur = self.next_dart(cur);
        }
        Ok(FaceCycle { darts })
    }

    /// Traces every face. Each dart lies on exactly one returned cycle.
    pub fn faces(&self) -> Faces {
        let n = self.n();
        let mut offset = Vec::with_capacity(n + 1);
        let mut total = 0;
        for ns in &self.rot {
            offset.push(total);
            total += ns.len();
        }
        offset.push(total);
        let mut used = vec![false; total];
        let mut cycles = Vec::new();
        for v in 0..n {
            for i in 0..self.rot[v].len() {
                if used[offset[v] + i] {
                    continue;
                }
                let start = (v, self.rot[v][i]);
                let mut darts = Vec::new();
                let mut cur = start;
                loop {
                    let j = self.pos(cur.0, cur.1).unwrap();
                    used[offset[cur.0] + j] = true;
                    darts.push(cur);
                    cur = self.next_dart(cur);
                    if cur == start {
                        break;
                    }
                }
                cycles.push(FaceCycle { darts });
            }
        }
        let disconnected = n > 0 && !self.to_graph().is_connected();
        Faces {
            cycles,
            disconnected,
        }
    }

    /// `n - e + f`; equals 2 exactly for a connected plane embedding.
    pub fn euler_characteristic(&self) -> i64 {
        self.n() as i64 - self.m() as i64 + self.faces().cycles.len() as i64
    }

    /// Connected and of genus zero.
    pub fn is_plane(&self) -> bool {
        let faces = self.faces();
        !faces.disconnected && self.n() as i64 - self.m() as i64 + faces.cycles.len() as i64 == 2
    }

    /// Errors unless the embedding is connected and spherical.
    pub fn check_plane(&self) -> Result<(), EmbeddingError> {
        if self.is_plane() {
            Ok(())
        } else {
            Err(EmbeddingError::Euler(self.euler_characteristic()))
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    fn insert_after(&mut self, v: usize, after: usize, new: usize) {
        let i = self
            .pos(v, after)
            .expect("insert_after: anchor not a neighbour");
        self.rot[v].insert(i + 1, new);
    }

    /// Adds a degree-one vertex inside the corner entered by dart `(a, p)`,
    /// i.e. right after `a` in the rotation at `p`.
    pub fn add_pendant(&mut self, corner: Dart) -> Result<usize, EmbeddingError> {
        let (a, p) = corner;
        if p >= self.n() || !self.has_edge(p, a) {
            return Err(EmbeddingError::MissingDart(corner));
        }
        let s = self.add_vertex();
        self.insert_after(p, a, s);
        self.rot[s].push(p);
        self.m += 1;
        Ok(s)
    }

    /// Joins the heads of two corners lying on a common face, splitting it.
    /// The corner `(a, u)` sits after `a` at `u`, likewise `(b, v)`.
    pub fn add_edge_in_face(&mut self, c1: Dart, c2: Dart) -> Result<(), EmbeddingError> {
        let (a, u) = c1;
        let (b, v) = c2;
        if u == v {
            return Err(EmbeddingError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(EmbeddingError::EdgeExists(u, v));
        }
        let face = self.face_of(c1)?;
        if !face.darts.contains(&c2) {
            return Err(EmbeddingError::NotOnFace(c1, c2));
        }
        self.insert_after(u, a, v);
        self.insert_after(v, b, u);
        self.m += 1;
        Ok(())
    }

    /// Replaces the edge `uv` by a path `u x v` and returns `x`.
    pub fn subdivide(&mut self, u: usize, v: usize) -> Result<usize, EmbeddingError> {
        let (Some(i), Some(j)) = (self.pos(u, v), self.pos(v, u)) else {
            return Err(EmbeddingError::MissingDart((u, v)));
        };
        let x = self.add_vertex();
        self.rot[u][i] = x;
        self.rot[v][j] = x;
        self.rot[x] = vec![u, v];
        self.m += 1;
        Ok(x)
    }

    /// Places a new vertex inside the face left of `d` and joins it to every
    /// corner of that face. The face must be bounded by a simple cycle.
    pub fn star_face(&mut self, d: Dart) -> Result<usize, EmbeddingError> {
        let face = self.face_of(d)?;
        let mut seen: Vec<usize> = face.vertices().collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(EmbeddingError::NotSimpleFace(d));
        }
        let s = self.add_vertex();
        let k = face.darts.len();
        for &(a, b) in &face.darts {
            self.insert_after(b, a, s);
        }
        self.rot[s] = face.darts.iter().rev().map(|d| d.0).collect();
        self.m += k;
        Ok(s)
    }

    /// Fans the vertex `s` across the face left of `(s, first)` until that face
    /// becomes a triangle, joining `s` to the face's corners in walk order.
    /// Returns the vertices that received a new edge.
    pub fn fan_from(&mut self, s: usize, first: usize) -> Result<Vec<usize>, EmbeddingError> {
        let mut joined = Vec::new();
        let mut start = (s, first);
        loop {
            let face = self.face_of(start)?;
            if face.len() <= 3 {
                return Ok(joined);
            }
            // face: s -> y1 -> y2 -> ... ; cut off the triangle s y1 y2.
            let (s_in, _) = face.darts[face.len() - 1];
            let (y1, y2) = face.darts[1];
            self.add_edge_in_face((s_in, s), (y1, y2))?;
            joined.push(y2);
            start = (s, y2);
        }
    }

    /// Restriction of the rotation system to `keep`; vertex `keep[i]` becomes `i`.
    pub fn induced(&self, keep: &[usize]) -> EmbeddedGraph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let rot: Vec<Vec<usize>> = keep
            .iter()
            .map(|&v| {
                self.rot[v]
                    .iter()
                    .filter(|&&u| pos[u] != usize::MAX)
                    .map(|&u| pos[u])
                    .collect()
            })
            .collect();
        let m = rot.iter().map(Vec::len).sum::<usize>() / 2;
        EmbeddedGraph { rot, m }
    }
}

/// All faces of `g`.
pub fn faces(g: &EmbeddedGraph) -> Faces {
    g.faces()
}

/// True iff `g` is connected, has at least three vertices, is embedded in the
/// sphere and every face is bounded by exactly three darts.
pub fn is_plane_triangulation(g: &EmbeddedGraph) -> bool {
    if g.n() < 3 {
        return false;
    }
    let faces = g.faces();
    !faces.disconnected
        && g.n() as i64 - g.m() as i64 + faces.cycles.len() as i64 == 2
        && faces.cycles.iter().all(|f| f.len() == 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4() -> EmbeddedGraph {
        // 3 at the centre, 0 top, 1 bottom right, 2 bottom left.
        EmbeddedGraph::from_rotation(vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 1, 2],
        ])
        .unwrap()
    }

    #[test]
    fn k4_is_a_triangulation() {
        let g = k4();
        assert_eq!(g.faces().cycles.len(), 4);
        assert!(is_plane_triangulation(&g));
    }

    #[test]
    fn twisted_k4_has_higher_genus() {
        let g = EmbeddedGraph::from_rotation(vec![
            vec![1, 2, 3],
            vec![0, 2, 3],
            vec![0, 1, 3],
            vec![0, 1, 2],
        ])
        .unwrap();
        assert_ne!(g.euler_characteristic(), 2);
        assert!(!is_plane_triangulation(&g));
    }

    #[test]
    fn rejects_bad_rotations() {
        assert_eq!(
            EmbeddedGraph::from_rotation(vec![vec![1], vec![]]),
            Err(EmbeddingError::Asymmetric(0, 1))
        );
        assert_eq!(
            EmbeddedGraph::from_rotation(vec![vec![0]]),
            Err(EmbeddingError::SelfLoop(0))
        );
        assert_eq!(
            EmbeddedGraph::from_rotation(vec![vec![1, 1], vec![0]]),
            Err(EmbeddingError::Parallel(0, 1))
        );
    }

    #[test]
    fn square_with_star_is_a_wheel() {
        let mut c4 =
            EmbeddedGraph::from_rotation(vec![vec![3, 1], vec![0, 2], vec![1, 3], vec![2, 0]])
                .unwrap();
        assert_eq!(c4.faces().cycles.len(), 2);
        let inner = c4
            .faces()
            .cycles
            .into_iter()
            .find(|f| f.darts[0] == (0, 1))
            .unwrap();
        let s = c4.star_face(inner.darts[0]).unwrap();
        assert_eq!(c4.degree(s), 4);
        assert!(c4.is_plane());
        assert_eq!(c4.faces().cycles.iter().filter(|f| f.len() == 3).count(), 4);
    }

    #[test]
    fn pendant_then_fan_triangulates_a_hexagon_side() {
        let rot = (0..6).map(|i| vec![(i + 5) % 6, (i + 1) % 6]).collect();
        let mut c6 = EmbeddedGraph::from_rotation(rot).unwrap();
        let s = c6.add_pendant((5, 0)).unwrap();
        let joined = c6.fan_from(s, 0).unwrap();
        assert_eq!(joined.len(), 5);
        assert_eq!(c6.degree(s), 6);
        assert!(c6.is_plane());
        let tri = c6.faces().cycles.iter().filter(|f| f.len() == 3).count();
        assert_eq!(tri, 6);
    }

    #[test]
    fn disconnected_faces_are_flagged() {
        let g = EmbeddedGraph::from_rotation(vec![vec![1], vec![0], vec![]]).unwrap();
        let f = g.faces();
        assert!(f.disconnected);
        assert_eq!(f.cycles.len(), 1);
        assert!(!is_plane_triangulation(&g));
    }
}
