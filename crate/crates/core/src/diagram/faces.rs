//! Faces of the projection and checkerboard colorings.
//!
//! Quadrant `k` of a crossing lies counterclockwise between slots `k` and
//! `k + 1`. Walking along the edge that leaves slot `s` keeps quadrant `s`
//! on the left, and the next edge of that face leaves the slot clockwise
//! of where the walk arrives. Faces are therefore the orbits of
//! `s -> cw(partner(s))`, and slot `s` names the face of quadrant `s`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{DiagramError, LinkDiagram};

fn cw(s: usize) -> usize {
    s - s % 4 + (s % 4 + 3) % 4
}

/// Which side of an oriented edge a face lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// Faces of a connected projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    /// Boundary of each face as `(edge, side)` incidences in walking order.
    pub faces: Vec<Vec<(u32, Side)>>,
    /// Faces sharing an edge with each face, ascending, without repeats.
    pub adjacency: Vec<Vec<usize>>,
    /// Face of each quadrant `4p + k`.
    quadrant: Vec<usize>,
    /// Corners (quadrant slots) of each face in walking order.
    corners: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Face containing quadrant `k` of crossing `p`.
    pub fn quadrant_face(&self, p: usize, k: usize) -> usize {
        self.quadrant[4 * p + k]
    }

    /// Corners of face `f` counterclockwise around it, as quadrant slots
    /// `4p + k`.
    pub fn face_corners(&self, f: usize) -> Vec<usize> {
        self.corners[f].clone()
    }
}

/// Two-coloring of the faces with a designated white unbounded face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckerboardColoring {
    pub color: Vec<Color>,
    pub unbounded_face: usize,
}

impl CheckerboardColoring {
    pub fn white_faces(&self) -> Vec<usize> {
        self.faces_of(Color::White)
    }

    pub fn black_faces(&self) -> Vec<usize> {
        self.faces_of(Color::Black)
    }

    fn faces_of(&self, c: Color) -> Vec<usize> {
        (0..self.color.len()).filter(|&f| self.color[f] == c).collect()
    }
}

/// Face id of every slot's quadrant, numbering faces by smallest slot.
pub(crate) fn quadrant_faces(d: &LinkDiagram) -> (Vec<usize>, usize) {
    let m = 4 * d.crossing_count();
    let mut face = vec![usize::MAX; m];
    let mut count = 0;
    for s0 in 0..m {
        if face[s0] != usize::MAX {
            continue;
        }
        let mut s = s0;
        while face[s] == usize::MAX {
            face[s] = count;
            s = cw(d.partner(s));
        }
        count += 1;
    }
    (face, count)
}

pub(crate) fn orbit_count(d: &LinkDiagram) -> usize {
    quadrant_faces(d).1
}

impl LinkDiagram {
    /// Faces of a connected projection. A crossingless circle has an
    /// inside and an outside face with empty boundaries.
    pub fn faces(&self) -> Result<FaceSet, DiagramError> {
        if !self.is_connected_projection() {
            return Err(DiagramError::Disconnected);
        }
        if self.crossing_count() == 0 {
            return Ok(FaceSet { faces: vec![vec![], vec![]], adjacency: vec![vec![1], vec![0]], quadrant: vec![], corners: vec![vec![], vec![]] });
        }
        let (quadrant, count) = quadrant_faces(self);
        let mut faces = vec![Vec::new(); count];
        let mut adjacency = vec![Vec::new(); count];
        let mut corners = vec![Vec::new(); count];
        for f in 0..count {
            let s0 = quadrant.iter().position(|&x| x == f).unwrap();
            let mut s = s0;
            loop {
                let side = if self.is_head(s) { Side::Right } else { Side::Left };
                faces[f].push((self.label(s), side));
                corners[f].push(s);
                adjacency[f].push(quadrant[self.partner(s)]);
                s = cw(self.partner(s));
                if s == s0 {
                    break;
                }
            }
            adjacency[f].sort_unstable();
            adjacency[f].dedup();
        }
        Ok(FaceSet { faces, adjacency, quadrant, corners })
    }

    /// Faces plus the checkerboard coloring in which `unbounded` (default
    /// face 0) is white.
    pub fn faces_and_coloring(&self, unbounded: Option<usize>) -> Result<(FaceSet, CheckerboardColoring), DiagramError> {
        let fs = self.faces()?;
        let u = unbounded.unwrap_or(0);
        if u >= fs.len() {
            return Err(DiagramError::UnknownFace(u));
        }
        let mut color: Vec<Option<Color>> = vec![None; fs.len()];
        color[u] = Some(Color::White);
        let mut queue = VecDeque::from([u]);
        while let Some(f) = queue.pop_front() {
            let c = color[f].unwrap().other();
            for &g in &fs.adjacency[f] {
                match color[g] {
                    None => {
                        color[g] = Some(c);
                        queue.push_back(g);
                    }
                    Some(x) => debug_assert_eq!(x, c, "projection faces must be two-colorable"),
                }
            }
        }
        let color = color.into_iter().map(|c| c.expect("connected face graph")).collect();
        Ok((fs, CheckerboardColoring { color, unbounded_face: u }))
    }
}
