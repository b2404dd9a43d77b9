//! Goeritz matrices, signature and nullity, and the link determinant.
//!
//! Conventions, for a crossing with tuple `(a, b, c, d)` and quadrant `k`
//! lying counterclockwise between slots `k` and `k + 1`:
//!
//! | quantity | rule |
//! |---|---|
//! | `eta = +1` | quadrant 1 (between `b` and `c`) is black |
//! | type II | the quadrant between the two incoming strands is black: quadrant 3 at a positive crossing, quadrant 0 at a negative one |
//! | `g_ij`, `i != j` | `-sum eta` over crossings touching white faces `i` and `j` |
//!
//! These reproduce the two-strand torus link matrices `[[k,-k],[-k,k]]`
//! with every crossing of type II when the two large regions are white.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::diagram::{CheckerboardColoring, Color, DiagramError, FaceSet, LinkDiagram};
use crate::gauss::GaussInt;
use crate::matrix::{symmetric_inertia, IntMatrix};
use crate::util::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingType {
    I,
    II,
}

/// Goeritz data of a connected diagram for one checkerboard coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzData {
    /// Indexed by white faces, the unbounded face first.
    pub g_unreduced: IntMatrix,
    /// `g_unreduced` without its first row and column.
    pub g: IntMatrix,
    pub eta: Vec<i8>,
    pub ctype: Vec<CrossingType>,
    /// Sum of `eta` over type II crossings.
    pub mu: i64,
    /// Number of components of the black Tait graph.
    pub beta: usize,
    /// Face ids of the white faces in matrix order.
    pub white_faces: Vec<usize>,
}

/// `G ⊕ diag(-eta over type II) ⊕ 0_(beta-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedGoeritz {
    pub h: IntMatrix,
}

/// Signature and nullity of a link.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignatureNullity {
    pub sigma: i64,
    pub nullity: usize,
}

/// Checkerboard sign of crossing `p`.
pub(crate) fn eta_of(fs: &FaceSet, col: &CheckerboardColoring, p: usize) -> i8 {
    if col.color[fs.quadrant_face(p, 1)] == Color::Black {
        1
    } else {
        -1
    }
}

/// Goeritz data of a connected diagram.
pub fn goeritz_data(d: &LinkDiagram, fs: &FaceSet, col: &CheckerboardColoring) -> Result<GoeritzData, DiagramError> {
    if !d.is_connected_projection() {
        return Err(DiagramError::Disconnected);
    }
    let u = col.unbounded_face;
    let mut white: Vec<usize> = vec![u];
    white.extend(col.white_faces().into_iter().filter(|&f| f != u));
    let mut index = vec![usize::MAX; fs.len()];
    for (i, &f) in white.iter().enumerate() {
        index[f] = i;
    }
    let w = white.len();
    let mut g = vec![vec![0i64; w]; w];
    let n = d.crossing_count();
    let mut eta = Vec::with_capacity(n);
    let mut ctype = Vec::with_capacity(n);
    let mut mu = 0i64;
    let black: Vec<usize> = col.black_faces();
    let mut bindex = vec![usize::MAX; fs.len()];
    for (i, &f) in black.iter().enumerate() {
        bindex[f] = i;
    }
    let mut tait = UnionFind::new(black.len());
    for p in 0..n {
        let e = eta_of(fs, col, p);
        eta.push(e);
        let (w1, w2, b1, b2) = if e > 0 { (0, 2, 1, 3) } else { (1, 3, 0, 2) };
        let (i, j) = (index[fs.quadrant_face(p, w1)], index[fs.quadrant_face(p, w2)]);
        if i != j {
            g[i][j] -= e as i64;
            g[j][i] -= e as i64;
        }
        tait.union(bindex[fs.quadrant_face(p, b1)], bindex[fs.quadrant_face(p, b2)]);
        let in_in = if d.sign(p) > 0 { 3 } else { 0 };
        let t = if col.color[fs.quadrant_face(p, in_in)] == Color::Black { CrossingType::II } else { CrossingType::I };
        if t == CrossingType::II {
            mu += e as i64;
        }
        ctype.push(t);
    }
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -row.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x).sum::<i64>();
    }
    let rows: Vec<&[i64]> = g.iter().map(|r| r.as_slice()).collect();
    let g_unreduced = IntMatrix::from_i64(&rows);
    let g = g_unreduced.minor(0);
    let beta = tait.groups().len();
    Ok(GoeritzData { g_unreduced, g, eta, ctype, mu, beta, white_faces: white })
}

/// Goeritz data for the default coloring (face 0 unbounded).
pub fn default_goeritz(d: &LinkDiagram) -> Result<GoeritzData, DiagramError> {
    let (fs, col) = d.faces_and_coloring(None)?;
    goeritz_data(d, &fs, &col)
}

fn connected_signature(gd: &GoeritzData) -> SignatureNullity {
    let inr = symmetric_inertia(&gd.g).expect("Goeritz matrices are symmetric");
    SignatureNullity { sigma: inr.signature() - gd.mu, nullity: inr.nullity() + gd.beta - 1 }
}

/// Signature and nullity. Split diagrams are handled piece by piece:
/// signatures add and each extra piece adds one to the nullity.
pub fn signature_and_nullity(d: &LinkDiagram) -> SignatureNullity {
    let pieces = d.split_pieces();
    let mut sigma = 0;
    let mut nullity = pieces.len().saturating_sub(1);
    for piece in &pieces {
        let gd = default_goeritz(piece).expect("pieces are connected");
        let s = connected_signature(&gd);
        sigma += s.sigma;
        nullity += s.nullity;
    }
    SignatureNullity { sigma, nullity }
}

/// Signature and nullity of a connected diagram for a chosen coloring.
pub fn signature_with_coloring(d: &LinkDiagram, unbounded: usize) -> Result<SignatureNullity, DiagramError> {
    let (fs, col) = d.faces_and_coloring(Some(unbounded))?;
    Ok(connected_signature(&goeritz_data(d, &fs, &col)?))
}

/// Generalized Goeritz matrix of a connected diagram.
pub fn generalized_goeritz(gd: &GoeritzData) -> GeneralizedGoeritz {
    let type2: Vec<i64> =
        gd.eta.iter().zip(&gd.ctype).filter(|(_, t)| **t == CrossingType::II).map(|(e, _)| -(*e as i64)).collect();
    let k = gd.g.dim() + type2.len() + gd.beta - 1;
    let gdim = gd.g.dim();
    let h = IntMatrix::from_fn(k, |i, j| {
        if i < gdim && j < gdim {
            gd.g.get(i, j).clone()
        } else if i == j && i < gdim + type2.len() {
            BigInt::from(type2[i - gdim])
        } else {
            BigInt::zero()
        }
    });
    GeneralizedGoeritz { h }
}

/// `det(i H)` for a connected diagram.
fn connected_determinant(gd: &GoeritzData) -> GaussInt {
    let h = generalized_goeritz(gd).h;
    let det = h.det_bareiss();
    GaussInt::i_pow(h.dim() as i64).mul_int(&det)
}

/// The link determinant `det(i H)`, zero for split diagrams.
pub fn link_determinant(d: &LinkDiagram) -> GaussInt {
    let mut pieces = d.split_pieces();
    match pieces.len() {
        0 => GaussInt::new(1, 0),
        1 => connected_determinant(&default_goeritz(&pieces.remove(0)).expect("connected")),
        _ => GaussInt::new(0, 0),
    }
}

/// Determinant for a chosen coloring of a connected diagram.
pub fn determinant_with_coloring(d: &LinkDiagram, unbounded: usize) -> Result<GaussInt, DiagramError> {
    let (fs, col) = d.faces_and_coloring(Some(unbounded))?;
    Ok(connected_determinant(&goeritz_data(d, &fs, &col)?))
}
