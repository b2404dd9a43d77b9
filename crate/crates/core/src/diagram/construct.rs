//! Diagrams of standard families: braid closures, two-strand torus links,
//! Turk's head links, pretzel links, and medial diagrams of plane graphs.

use alloc::vec;
use alloc::vec::Vec;

use super::{DiagramError, LinkDiagram, Skel};

/// A parametrized family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Closure of the two-strand braid with `k` half twists.
    Torus2(i64),
    /// Pretzel link with one twist column per entry.
    Pretzel(Vec<i64>),
    /// Closure of a braid word; letter `i` is the `i`-th standard
    /// generator, `-i` its inverse.
    BraidClosure { strands: usize, word: Vec<i64> },
    /// Closure of the 3-braid `(s1 s2^-1)^n`.
    TurksHead(usize),
}

pub fn construct(spec: &FamilySpec) -> Result<LinkDiagram, DiagramError> {
    match spec {
        FamilySpec::Torus2(k) => Ok(torus2(*k)),
        FamilySpec::Pretzel(cols) => pretzel(cols),
        FamilySpec::BraidClosure { strands, word } => braid_closure(*strands, word),
        FamilySpec::TurksHead(n) => Ok(turks_head(*n)),
    }
}

// Braid crossing slots, counterclockwise; strands run upward.
const SE: usize = 0;
const NE: usize = 1;
const NW: usize = 2;
const SW: usize = 3;

/// Closure of a braid. Strands run bottom to top, the first letter is
/// lowest, and each top end is joined to the bottom end in the same
/// position. For a positive letter the over strand runs from lower left
/// to upper right, giving a positive crossing.
pub fn braid_closure(strands: usize, word: &[i64]) -> Result<LinkDiagram, DiagramError> {
    if strands == 0 {
        return Err(DiagramError::InvalidFamily("a braid needs at least one strand"));
    }
    if word.iter().any(|&g| g == 0 || g.unsigned_abs() as usize >= strands) {
        return Err(DiagramError::InvalidFamily("braid letters must satisfy 0 < |letter| < strands"));
    }
    let n = word.len();
    let mut sk = Skel::new(n);
    // Open upper end at each position: a slot, or None if still at the
    // bottom. `bottom[i]` is the slot the bottom end of position i feeds.
    let mut top: Vec<Option<usize>> = vec![None; strands];
    let mut bottom: Vec<Option<usize>> = vec![None; strands];
    let mut hint = 1u32;
    for (p, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize - 1;
        sk.axis[p] = if g > 0 { 0 } else { 1 };
        for (pos, slot) in [(i, SW), (i + 1, SE)] {
            let s = 4 * p + slot;
            sk.head[s] = true;
            match top[pos] {
                Some(t) => {
                    sk.label[s] = hint;
                    sk.label[t] = hint;
                    hint += 1;
                    sk.connect(t, s);
                }
                None => bottom[pos] = Some(s),
            }
        }
        top[i] = Some(4 * p + NW);
        top[i + 1] = Some(4 * p + NE);
    }
    for pos in 0..strands {
        match (top[pos], bottom[pos]) {
            (Some(t), Some(b)) => {
                sk.label[t] = hint;
                sk.label[b] = hint;
                hint += 1;
                sk.connect(t, b);
            }
            _ => sk.free_loops += 1,
        }
    }
    Ok(sk.canonical())
}

/// Closure of the two-strand braid with `k` half twists; positive
/// crossings for `k > 0`, the two-component unlink for `k = 0`.
pub fn torus2(k: i64) -> LinkDiagram {
    let g = if k >= 0 { 1 } else { -1 };
    braid_closure(2, &vec![g; k.unsigned_abs() as usize]).expect("valid two-strand word")
}

/// Closure of `(s1 s2^-1)^n`; the unknot for `n = 0`.
pub fn turks_head(n: usize) -> LinkDiagram {
    if n == 0 {
        return LinkDiagram::unknot();
    }
    let word: Vec<i64> = (0..n).flat_map(|_| [1, -2]).collect();
    braid_closure(3, &word).expect("valid three-strand word")
}

/// Pretzel link with vertical twist columns of `cols[i]` half twists.
///
/// Built as the medial diagram of the graph with a top and a bottom
/// vertex joined by one path of `|cols[i]|` edges per column; columns
/// with all-positive entries give positive crossings (so `(1,1,1)` is the
/// right-handed trefoil).
pub fn pretzel(cols: &[i64]) -> Result<LinkDiagram, DiagramError> {
    if cols.is_empty() {
        return Err(DiagramError::InvalidFamily("a pretzel needs at least one column"));
    }
    if cols.contains(&0) {
        return Err(DiagramError::InvalidFamily("pretzel columns must be nonzero"));
    }
    let (top, bot) = (0usize, 1usize);
    let mut vertices = 2usize;
    let mut edges: Vec<(usize, usize, i8)> = Vec::new();
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(), Vec::new()];
    let mut first_edge = Vec::new();
    let mut last_edge = Vec::new();
    for &c in cols {
        let sign = if c > 0 { -1 } else { 1 };
        let len = c.unsigned_abs() as usize;
        let mut prev = top;
        for j in 0..len {
            let v = if j + 1 == len {
                bot
            } else {
                vertices += 1;
                rot.push(Vec::new());
                vertices - 1
            };
            let e = edges.len();
            edges.push((prev, v, sign));
            if j == 0 {
                first_edge.push(e);
            }
            if prev != top {
                // interior path vertex: incoming edge then outgoing edge
                rot[prev].push(e);
            }
            if v != bot {
                rot[v].push(e);
            }
            prev = v;
        }
        last_edge.push(edges.len() - 1);
    }
    // Columns left to right: counterclockwise around the top vertex is
    // left to right, around the bottom vertex right to left.
    rot[top] = first_edge;
    rot[bot] = last_edge.into_iter().rev().collect();
    medial_diagram(vertices, &edges, &rot)
}

/// Medial diagram of a plane graph given by its rotation system.
///
/// Each edge `(u, v, sign)` becomes one crossing and the graph's vertices
/// become the black faces; a positive edge gets the crossing whose
/// checkerboard sign (see the Goeritz module) is `+1`. `rot[x]` lists the
/// edges at `x` counterclockwise; a loop is listed twice, its first
/// occurrence standing for the `u` end. The orientation is the canonical
/// one chosen by the numbering.
pub fn medial_diagram(vertex_count: usize, edges: &[(usize, usize, i8)], rot: &[Vec<usize>]) -> Result<LinkDiagram, DiagramError> {
    if rot.len() != vertex_count {
        return Err(DiagramError::InvalidFamily("rotation must list every vertex"));
    }
    if edges.is_empty() {
        return if vertex_count == 1 {
            Ok(LinkDiagram::unknot())
        } else {
            Err(DiagramError::Disconnected)
        };
    }
    // Edge u -> v drawn west to east; slots NE=0, NW=1, SW=2, SE=3.
    const NE_: usize = 0;
    const NW_: usize = 1;
    const SW_: usize = 2;
    const SE_: usize = 3;
    let mut sk = Skel::new(edges.len());
    for (e, &(_, _, s)) in edges.iter().enumerate() {
        sk.axis[e] = if s > 0 { 0 } else { 1 };
    }
    let mut used_u = vec![false; edges.len()];
    let mut hint = 1;
    for (x, r) in rot.iter().enumerate() {
        // (left-near slot, right-near slot) of each edge end at x
        let mut ends: Vec<(usize, usize)> = Vec::with_capacity(r.len());
        for &e in r {
            let &(u, v, _) = edges.get(e).ok_or(DiagramError::InvalidFamily("rotation names an unknown edge"))?;
            let at_u = if u == v {
                let first = !used_u[e];
                used_u[e] = true;
                first
            } else if x == u {
                true
            } else if x == v {
                false
            } else {
                return Err(DiagramError::InvalidFamily("rotation lists an edge at a vertex it does not touch"));
            };
            ends.push(if at_u { (4 * e + NW_, 4 * e + SW_) } else { (4 * e + SE_, 4 * e + NE_) });
        }
        for j in 0..ends.len() {
            let a = ends[j].0;
            let b = ends[(j + 1) % ends.len()].1;
            if sk.partner[a] != usize::MAX || sk.partner[b] != usize::MAX {
                return Err(DiagramError::InvalidFamily("rotation lists an edge end twice"));
            }
            sk.label[a] = hint;
            sk.label[b] = hint;
            hint += 1;
            sk.connect(a, b);
        }
    }
    if sk.partner.contains(&usize::MAX) {
        return Err(DiagramError::InvalidFamily("rotation misses an edge end"));
    }
    let d = sk.canonical();
    if !d.is_connected_projection() {
        return Err(DiagramError::Disconnected);
    }
    Ok(d)
}
