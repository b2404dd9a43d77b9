//! Signed plane graphs, Kirchhoff matrices and Tait graphs.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::diagram::{medial_diagram, CheckerboardColoring, DiagramError, FaceSet, LinkDiagram};
use crate::goeritz::eta_of;
use crate::matrix::IntMatrix;

/// A signed edge `(u, v, sign)`.
pub type SignedEdge = (usize, usize, i8);

/// Graph with signed edges, loops and multi-edges allowed, plus an
/// optional rotation system listing the edges at each vertex
/// counterclockwise (a loop appears twice, its first occurrence being
/// the `u` end).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPlanarGraph {
    pub vertex_count: usize,
    pub edges: Vec<SignedEdge>,
    pub rotation: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    EndpointOutOfRange { edge: usize },
    BadRotation { vertex: usize },
    MissingRotation,
    Disconnected,
    Diagram(DiagramError),
}

impl core::fmt::Display for GraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GraphError::EndpointOutOfRange { edge } => write!(f, "edge {} has an endpoint out of range", edge),
            GraphError::BadRotation { vertex } => {
                write!(f, "rotation at vertex {} must list each incident edge end exactly once", vertex)
            }
            GraphError::MissingRotation => f.write_str("a rotation system is required"),
            GraphError::Disconnected => f.write_str("graph is disconnected"),
            GraphError::Diagram(e) => write!(f, "{}", e),
        }
    }
}

/// Adjacency, degree, Laplacian and Kirchhoff (reduced Laplacian)
/// matrices; loops are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirchhoffData {
    pub adjacency: IntMatrix,
    pub degree: IntMatrix,
    pub laplacian: IntMatrix,
    pub kirchhoff: IntMatrix,
}

impl SignedPlanarGraph {
    pub fn new(vertex_count: usize, edges: Vec<SignedEdge>) -> Result<Self, GraphError> {
        let g = SignedPlanarGraph { vertex_count, edges, rotation: None };
        g.check_endpoints()?;
        Ok(g)
    }

    pub fn with_rotation(vertex_count: usize, edges: Vec<SignedEdge>, rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let g = SignedPlanarGraph { vertex_count, edges, rotation: Some(rotation) };
        g.check_endpoints()?;
        g.check_rotation()?;
        Ok(g)
    }

    fn check_endpoints(&self) -> Result<(), GraphError> {
        for (i, &(u, v, _)) in self.edges.iter().enumerate() {
            if u >= self.vertex_count || v >= self.vertex_count {
                return Err(GraphError::EndpointOutOfRange { edge: i });
            }
        }
        Ok(())
    }

    fn check_rotation(&self) -> Result<(), GraphError> {
        let rot = self.rotation.as_ref().ok_or(GraphError::MissingRotation)?;
        if rot.len() != self.vertex_count {
            return Err(GraphError::BadRotation { vertex: rot.len().min(self.vertex_count) });
        }
        for (x, r) in rot.iter().enumerate() {
            let mut want: Vec<usize> = Vec::new();
            for (i, &(u, v, _)) in self.edges.iter().enumerate() {
                if u == x {
                    want.push(i);
                }
                if v == x {
                    want.push(i);
                }
            }
            let mut got = r.clone();
            got.sort_unstable();
            if got != want {
                return Err(GraphError::BadRotation { vertex: x });
            }
        }
        Ok(())
    }

    /// Whether all vertices lie in one component.
    pub fn is_connected(&self) -> bool {
        let mut uf = crate::util::UnionFind::new(self.vertex_count);
        let mut parts = self.vertex_count;
        for &(u, v, _) in &self.edges {
            if uf.union(u, v) {
                parts -= 1;
            }
        }
        parts <= 1
    }

    /// Whether every edge has the same sign.
    pub fn is_uniformly_signed(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].2 == w[1].2)
    }
}

/// Kirchhoff data, deleting row and column `0`.
pub fn kirchhoff(g: &SignedPlanarGraph) -> KirchhoffData {
    kirchhoff_deleting(g, 0)
}

/// Kirchhoff data, deleting row and column `k` for the reduced matrix.
pub fn kirchhoff_deleting(g: &SignedPlanarGraph, k: usize) -> KirchhoffData {
    let n = g.vertex_count;
    let mut a = vec![vec![0i64; n]; n];
    for &(u, v, _) in &g.edges {
        if u != v {
            a[u][v] += 1;
            a[v][u] += 1;
        }
    }
    let deg: Vec<i64> = a.iter().map(|r| r.iter().sum()).collect();
    let adjacency = IntMatrix::from_fn(n, |i, j| BigInt::from(a[i][j]));
    let degree = IntMatrix::from_fn(n, |i, j| BigInt::from(if i == j { deg[i] } else { 0 }));
    let laplacian = IntMatrix::from_fn(n, |i, j| BigInt::from(if i == j { deg[i] } else { 0 } - a[i][j]));
    let kirchhoff = if n == 0 { laplacian.clone() } else { laplacian.minor(k) };
    KirchhoffData { adjacency, degree, laplacian, kirchhoff }
}

/// Number of spanning trees, by the matrix-tree theorem.
pub fn spanning_tree_count(g: &SignedPlanarGraph) -> BigInt {
    if g.vertex_count == 0 {
        return BigInt::from(0);
    }
    kirchhoff(g).kirchhoff.det_bareiss()
}

/// Tait graph of the black faces: one vertex per black face (in face
/// order), one edge per crossing signed by its checkerboard sign, and the
/// rotation read around each black face.
pub fn tait_graph(d: &LinkDiagram, fs: &FaceSet, col: &CheckerboardColoring) -> SignedPlanarGraph {
    let black = col.black_faces();
    let mut index = vec![usize::MAX; fs.len()];
    for (i, &f) in black.iter().enumerate() {
        index[f] = i;
    }
    let n = d.crossing_count();
    let mut edges = Vec::with_capacity(n);
    for p in 0..n {
        let e = eta_of(fs, col, p);
        let (q1, q2) = if e > 0 { (1, 3) } else { (0, 2) };
        edges.push((index[fs.quadrant_face(p, q1)], index[fs.quadrant_face(p, q2)], e));
    }
    // The walk around a face lists its corners; corner at slot s is
    // quadrant s of crossing s / 4. A loop edge meets its face twice;
    // the corner at quadrant q1 is the `u` end.
    let mut rotation = vec![Vec::new(); black.len()];
    for (i, &f) in black.iter().enumerate() {
        let mut corners = fs.face_corners(f);
        // start the cyclic list at a `u` end so loops read u-end first
        if let Some(k) = corners.iter().position(|&s| {
            let p = s / 4;
            let q1 = if edges[p].2 > 0 { 1 } else { 0 };
            s % 4 == q1
        }) {
            corners.rotate_left(k);
        }
        rotation[i] = corners.into_iter().map(|s| s / 4).collect();
    }
    if d.crossing_count() == 0 {
        return SignedPlanarGraph { vertex_count: black.len(), edges, rotation: Some(vec![Vec::new(); black.len()]) };
    }
    SignedPlanarGraph { vertex_count: black.len(), edges, rotation: Some(rotation) }
}

/// Medial diagram of a connected signed plane graph.
pub fn diagram_from_graph(g: &SignedPlanarGraph) -> Result<LinkDiagram, GraphError> {
    let rot = g.rotation.as_ref().ok_or(GraphError::MissingRotation)?;
    g.check_rotation()?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    medial_diagram(g.vertex_count, &g.edges, rot).map_err(GraphError::Diagram)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_graph() -> SignedPlanarGraph {
        SignedPlanarGraph::new(3, vec![(0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 2, 1)]).unwrap()
    }

    #[test]
    fn kirchhoff_example() {
        let k = kirchhoff(&example_graph());
        assert_eq!(k.kirchhoff, IntMatrix::from_i64(&[&[3, -2], &[-2, 3]]));
        assert_eq!(spanning_tree_count(&example_graph()), BigInt::from(5));
        let e = SignedPlanarGraph::new(2, vec![(0, 1, 1)]).unwrap();
        assert_eq!(kirchhoff(&e).kirchhoff, IntMatrix::from_i64(&[&[1]]));
        let l = SignedPlanarGraph::new(1, vec![(0, 0, 1)]).unwrap();
        assert_eq!(kirchhoff(&l).kirchhoff.dim(), 0);
        assert_eq!(spanning_tree_count(&l), BigInt::from(1));
        let two = SignedPlanarGraph::new(2, vec![]).unwrap();
        assert_eq!(spanning_tree_count(&two), BigInt::from(0));
    }

    #[test]
    fn trefoil_from_three_parallel_edges() {
        let g = SignedPlanarGraph::with_rotation(2, vec![(0, 1, 1); 3], vec![vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
        let d = diagram_from_graph(&g).unwrap();
        assert_eq!((d.crossing_count(), d.component_count()), (3, 1));
        assert!(d.is_alternating());
        assert_eq!(d.writhe().abs(), 3);
        let single = SignedPlanarGraph::with_rotation(1, vec![], vec![vec![]]).unwrap();
        assert_eq!(diagram_from_graph(&single).unwrap(), LinkDiagram::unknot());
    }
}
