//! Oriented link diagrams encoded as planar-diagram (PD) codes.
//!
//! A crossing is a tuple `(a, b, c, d)` of edge labels read
//! counterclockwise, starting at the incoming under-edge; the under strand
//! runs `a -> c`. Edges are numbered consecutively along each component,
//! which fixes the orientation, and the last edge of a component is
//! followed by its first. A crossing is positive iff the over strand runs
//! `d -> b`.
//!
//! Internally a crossing owns four *slots* `4p + k`, `k = 0..3` in tuple
//! order; slot `k` is where the edge `tuple[k]` meets the crossing. Slots
//! 0 and 2 are under, slots 1 and 3 over.

mod construct;
mod faces;
mod parse;
mod skel;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use construct::{braid_closure, construct, medial_diagram, pretzel, torus2, turks_head, FamilySpec};
pub use faces::{CheckerboardColoring, Color, FaceSet, Side};
pub use parse::parse_pd;
pub(crate) use skel::Skel;

use crate::util::UnionFind;

/// Errors raised while building, validating or editing a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    Syntax { pos: usize, msg: &'static str },
    EdgeCount { edge: u32, count: usize },
    MissingEdge { edge: u32 },
    DegenerateCrossing { crossing: usize },
    Orientation { crossing: usize },
    NonConsecutive { edge: u32 },
    ComponentCount { declared: usize, needed: usize },
    NonPlanar { faces: usize, expected: usize },
    Disconnected,
    UnknownCrossing(usize),
    UnknownComponent(usize),
    UnknownEdge(u32),
    UnknownFace(usize),
    InvalidFamily(&'static str),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DiagramError::*;
        match self {
            Syntax { pos, msg } => write!(f, "syntax error at byte {}: {}", pos, msg),
            EdgeCount { edge, count } => write!(f, "edge {} appears {} times (expected 2)", edge, count),
            MissingEdge { edge } => write!(f, "edge {} never appears (labels must be 1..2c)", edge),
            DegenerateCrossing { crossing } => {
                write!(f, "crossing {} joins an edge to itself straight through", crossing)
            }
            Orientation { crossing } => {
                write!(f, "crossing {} is inconsistent with consecutive edge numbering", crossing)
            }
            NonConsecutive { edge } => {
                write!(f, "component containing edge {} is not numbered consecutively", edge)
            }
            ComponentCount { declared, needed } => {
                write!(f, "declared {} components but the crossings already use {}", declared, needed)
            }
            NonPlanar { faces, expected } => {
                write!(f, "rotation system has {} faces, a planar diagram needs {}", faces, expected)
            }
            Disconnected => f.write_str("projection is disconnected; split it first"),
            UnknownCrossing(p) => write!(f, "no crossing {}", p),
            UnknownComponent(j) => write!(f, "no component {}", j),
            UnknownEdge(e) => write!(f, "no edge {}", e),
            UnknownFace(x) => write!(f, "no face {}", x),
            InvalidFamily(m) => write!(f, "invalid family parameters: {}", m),
        }
    }
}

/// Validated oriented link diagram.
///
/// Values produced by this crate are always in canonical numbering:
/// components are numbered in order of their smallest original label and
/// each starts at that label, so equal diagrams compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    /// Inclusive label ranges of components that meet crossings.
    ranges: Vec<(u32, u32)>,
    /// Crossingless components.
    free_loops: usize,
    signs: Vec<i8>,
    /// Slot at the other end of each slot's edge.
    partner: Vec<usize>,
}

/// One crossing of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub id: usize,
    pub tuple: [u32; 4],
    pub sign: i8,
}

/// Summary statistics of an oriented diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramStats {
    pub writhe: i64,
    pub crossing_signs: Vec<i8>,
    pub components: usize,
    pub linking_matrix: Vec<Vec<i64>>,
    pub is_alternating: bool,
}

/// How to resolve a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    /// Joins `a-b` and `c-d` (the A-smoothing).
    Zero,
    /// Joins `a-d` and `b-c` (the B-smoothing).
    Infinity,
    /// Respects the orientation: `Zero` at positive, `Infinity` at
    /// negative crossings.
    Oriented,
}

impl LinkDiagram {
    /// Crossingless diagram of `n` disjoint circles.
    pub fn unlink(n: usize) -> Self {
        LinkDiagram { crossings: vec![], ranges: vec![], free_loops: n, signs: vec![], partner: vec![] }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// Assembles a diagram from validated tuples, ranges and signs.
    pub(crate) fn from_parts(crossings: Vec<[u32; 4]>, ranges: Vec<(u32, u32)>, free_loops: usize, signs: Vec<i8>) -> Self {
        let n = crossings.len();
        let mut first = vec![usize::MAX; 2 * n + 1];
        let mut partner = vec![0; 4 * n];
        for (p, t) in crossings.iter().enumerate() {
            for (k, &e) in t.iter().enumerate() {
                let s = 4 * p + k;
                let f = &mut first[e as usize];
                if *f == usize::MAX {
                    *f = s;
                } else {
                    partner[*f] = s;
                    partner[s] = *f;
                }
            }
        }
        LinkDiagram { crossings, ranges, free_loops, signs, partner }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.ranges.len() + self.free_loops
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn tuples(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing(&self, p: usize) -> Option<Crossing> {
        self.crossings.get(p).map(|t| Crossing { id: p, tuple: *t, sign: self.signs[p] })
    }

    pub fn crossings(&self) -> impl Iterator<Item = Crossing> + '_ {
        (0..self.crossings.len()).map(move |p| Crossing { id: p, tuple: self.crossings[p], sign: self.signs[p] })
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, p: usize) -> i8 {
        self.signs[p]
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Edge sequences of the components; crossingless ones are empty.
    pub fn component_edges(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self.ranges.iter().map(|&(lo, hi)| (lo..=hi).collect()).collect();
        v.extend((0..self.free_loops).map(|_| Vec::new()));
        v
    }

    /// Component index of an edge label.
    pub fn component_of(&self, e: u32) -> Option<usize> {
        self.ranges.iter().position(|&(lo, hi)| lo <= e && e <= hi)
    }

    /// Successor of an edge along the orientation.
    pub fn next_edge(&self, e: u32) -> Option<u32> {
        let (lo, hi) = self.ranges[self.component_of(e)?];
        Some(if e == hi { lo } else { e + 1 })
    }

    pub(crate) fn partner(&self, s: usize) -> usize {
        self.partner[s]
    }

    pub(crate) fn label(&self, s: usize) -> u32 {
        self.crossings[s / 4][s % 4]
    }

    /// Whether the edge at slot `s` enters its crossing there.
    pub(crate) fn is_head(&self, s: usize) -> bool {
        match s % 4 {
            0 => true,
            2 => false,
            1 => self.signs[s / 4] < 0,
            _ => self.signs[s / 4] > 0,
        }
    }

    /// `(tail, head)` slots of edge `e`.
    pub(crate) fn edge_slots(&self, e: u32) -> Option<(usize, usize)> {
        let s = self.crossings.iter().flatten().position(|&x| x == e)?;
        let o = self.partner[s];
        Some(if self.is_head(s) { (o, s) } else { (s, o) })
    }

    pub fn stats(&self) -> DiagramStats {
        DiagramStats {
            writhe: self.writhe(),
            crossing_signs: self.signs.clone(),
            components: self.component_count(),
            linking_matrix: self.linking_matrix(),
            is_alternating: self.is_alternating(),
        }
    }

    /// Pairwise linking numbers: half the signed count of mixed crossings.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.component_count();
        let mut lk = vec![vec![0i64; m]; m];
        for (p, t) in self.crossings.iter().enumerate() {
            let i = self.component_of(t[0]).unwrap();
            let j = self.component_of(t[1]).unwrap();
            if i != j {
                lk[i][j] += self.signs[p] as i64;
                lk[j][i] += self.signs[p] as i64;
            }
        }
        for x in lk.iter_mut().flatten() {
            *x /= 2;
        }
        lk
    }

    /// Over and under passages alternate along every component.
    pub fn is_alternating(&self) -> bool {
        (0..self.partner.len()).all(|s| s % 2 != self.partner[s] % 2)
    }

    /// Crossing sets of the connected pieces of the projection.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut uf = UnionFind::new(n);
        for s in 0..4 * n {
            uf.union(s / 4, self.partner[s] / 4);
        }
        uf.groups()
    }

    /// Whether the projection is connected. A crossingless diagram is
    /// connected when it is a single circle.
    pub fn is_connected_projection(&self) -> bool {
        if self.crossings.is_empty() {
            return self.free_loops <= 1;
        }
        self.free_loops == 0 && self.pieces().len() == 1
    }

    /// Splits into connected projections; each crossingless circle becomes
    /// its own unknot.
    pub fn split_pieces(&self) -> Vec<LinkDiagram> {
        let mut out = Vec::new();
        if !self.crossings.is_empty() {
            let groups = self.pieces();
            if groups.len() == 1 {
                out.push(LinkDiagram { free_loops: 0, ..self.clone() });
            } else {
                let sk = Skel::from_diagram(self);
                for g in groups {
                    out.push(sk.restrict(&g).canonical());
                }
            }
        }
        out.extend((0..self.free_loops).map(|_| LinkDiagram::unknot()));
        out
    }

    /// Resolves crossing `p`; the result is reoriented where the
    /// smoothing disagrees with the orientation.
    pub fn smooth(&self, p: usize, mode: Smoothing) -> Result<LinkDiagram, DiagramError> {
        if p >= self.crossings.len() {
            return Err(DiagramError::UnknownCrossing(p));
        }
        let zero = match mode {
            Smoothing::Zero => true,
            Smoothing::Infinity => false,
            Smoothing::Oriented => self.signs[p] > 0,
        };
        let pairs = if zero { [[0, 1], [2, 3]] } else { [[0, 3], [1, 2]] };
        let mut sk = Skel::from_diagram(self);
        sk.remove_crossing(p, pairs);
        Ok(sk.canonical())
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> LinkDiagram {
        let mut sk = Skel::from_diagram(self);
        for p in 0..self.crossings.len() {
            sk.flip(p);
        }
        sk.canonical()
    }

    pub fn crossing_change(&self, p: usize) -> Result<LinkDiagram, DiagramError> {
        if p >= self.crossings.len() {
            return Err(DiagramError::UnknownCrossing(p));
        }
        let mut sk = Skel::from_diagram(self);
        sk.flip(p);
        Ok(sk.canonical())
    }

    /// Reverses the orientation of component `j`.
    pub fn reverse_component(&self, j: usize) -> Result<LinkDiagram, DiagramError> {
        if j >= self.component_count() {
            return Err(DiagramError::UnknownComponent(j));
        }
        if j >= self.ranges.len() {
            return Ok(self.clone());
        }
        let mut sk = Skel::from_diagram(self);
        let (lo, hi) = self.ranges[j];
        sk.reverse_labels(lo, hi);
        Ok(sk.canonical())
    }

    /// Connected sum, cutting `self` at edge `e1` and `other` at `e2` and
    /// splicing so that orientations agree.
    pub fn connected_sum(&self, other: &LinkDiagram, e1: u32, e2: u32) -> Result<LinkDiagram, DiagramError> {
        let (t1, h1) = self.edge_slots(e1).ok_or(DiagramError::UnknownEdge(e1))?;
        let (t2, h2) = other.edge_slots(e2).ok_or(DiagramError::UnknownEdge(e2))?;
        let mut a = Skel::from_diagram(self);
        let off = a.append(&Skel::from_diagram(other));
        a.connect(t1, h2 + off);
        a.connect(t2 + off, h1);
        Ok(a.canonical())
    }

    /// Applies crossing-reducing Reidemeister I and II moves until none
    /// is left.
    pub fn simplify(&self) -> LinkDiagram {
        let mut sk = Skel::from_diagram(self);
        let mut changed = false;
        while sk.reduce_once() {
            changed = true;
        }
        if changed {
            sk.canonical()
        } else {
            self.clone()
        }
    }

    /// PD text; a `components=` header is written when crossingless
    /// components are present.
    pub fn to_pd_string(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.free_loops > 0 {
            let _ = write!(s, "components={}", self.component_count());
        }
        for t in &self.crossings {
            if !s.is_empty() {
                s.push(' ');
            }
            let _ = write!(s, "X({},{},{},{})", t[0], t[1], t[2], t[3]);
        }
        s
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}
