//! Seifert circles, the Seifert graph, diagram genus and Seifert matrices.
//!
//! The matrix comes from an explicit model of the surface produced by
//! Seifert's algorithm. Each circle bounds a disk on the side away from
//! the face at infinity, nested disks sit higher, and each crossing
//! contributes a half-twisted band. Every disk is shrunk to a thin strip
//! along its circle, cut open just before its first band, so a curve
//! crossing the disk enters radially, runs parallel to the circle at a
//! private depth and leaves radially. A band whose region is the disk
//! side of a circle folds over that strip. Linking numbers
//! `lk(a+, b)` are half the signed crossing count of the two curves in
//! projection, which splits into three local terms:
//!
//! * a radial of one curve against the run of another on the same strip,
//! * a folded band lane over the run of another curve,
//! * the half twist of each band carrying both curves.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::diagram::{DiagramError, LinkDiagram};
use crate::graph::SignedPlanarGraph;
use crate::matrix::IntMatrix;
use crate::poly::state_circles;
use crate::util::UnionFind;

/// Seifert circles and the data derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    /// Edge labels of each circle in traversal order.
    pub circles: Vec<Vec<u32>>,
    pub s: usize,
    /// Vertices are circles, one edge per crossing signed by the crossing.
    pub graph: SignedPlanarGraph,
    pub genus: i64,
    /// The circle whose disk directly contains each circle, if any.
    pub nesting: Vec<Option<usize>>,
}

/// A Seifert matrix with its basis of fundamental cycles, each given as
/// `(crossing, direction)` steps, direction `+1` when the cycle crosses
/// the band from the circle through slot 0 to the other one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    pub v: IntMatrix,
    pub basis: Vec<Vec<(usize, i8)>>,
}

/// Oriented-smoothing partner of slot `s`.
fn smooth_pair(sign: i8, s: usize) -> usize {
    let b = s - s % 4;
    let k = s % 4;
    b + if sign > 0 { k ^ 1 } else { 3 - k }
}

/// Surface model shared by the data and matrix computations.
struct Surface {
    /// Circle index of every slot.
    circle: Vec<usize>,
    count: usize,
    /// Incoming slots of each circle in traversal order.
    arcs: Vec<Vec<usize>>,
    /// Position of crossing `p` along circle `c`: `pos[c]` indexed by `p`.
    pos: Vec<Vec<usize>>,
    /// `+1` when a circle's disk lies on its left.
    kappa: Vec<i64>,
    /// Whether crossing `p`'s band folds over circle `c`'s strip.
    inside: Vec<Vec<bool>>,
    parent: Vec<Option<usize>>,
}

impl Surface {
    fn new(d: &LinkDiagram) -> Result<Surface, DiagramError> {
        let fs = d.faces()?;
        let n = d.crossing_count();
        let (circle, count) = state_circles(d, d.signs());
        if n == 0 {
            return Ok(Surface {
                circle,
                count,
                arcs: vec![Vec::new(); count],
                pos: vec![Vec::new(); count],
                kappa: vec![1; count],
                inside: vec![Vec::new(); count],
                parent: vec![None; count],
            });
        }
        // traversal order
        let mut arcs = vec![Vec::new(); count];
        let mut seen = vec![false; 4 * n];
        for s0 in 0..4 * n {
            if seen[s0] || !d.is_head(s0) {
                continue;
            }
            let c = circle[s0];
            let mut s = s0;
            while !seen[s] {
                seen[s] = true;
                arcs[c].push(s);
                s = d.partner(smooth_pair(d.sign(s / 4), s));
            }
        }
        let mut pos = vec![vec![usize::MAX; n]; count];
        for (c, list) in arcs.iter().enumerate() {
            for (i, &s) in list.iter().enumerate() {
                pos[c][s / 4] = i;
            }
        }
        // regions: faces joined through the gap between the two arcs
        let gap_quadrants = |p: usize| if d.sign(p) > 0 { (1, 3) } else { (0, 2) };
        let mut uf = UnionFind::new(fs.len());
        for p in 0..n {
            let (x, y) = gap_quadrants(p);
            uf.union(fs.quadrant_face(p, x), fs.quadrant_face(p, y));
        }
        let region = |uf: &mut UnionFind, p: usize, k: usize| uf.find(fs.quadrant_face(p, k));
        let gap = |uf: &mut UnionFind, p: usize| region(uf, p, gap_quadrants(p).0);
        // left and right region of each circle
        let mut sides = vec![(0usize, 0usize); count];
        for (c, list) in arcs.iter().enumerate() {
            let i = list[0];
            let (p, k) = (i / 4, i % 4);
            let j = smooth_pair(d.sign(p), i) % 4;
            sides[c] = if j == (k + 1) % 4 {
                (gap(&mut uf, p), region(&mut uf, p, k))
            } else {
                (region(&mut uf, p, j), gap(&mut uf, p))
            };
        }
        // region tree rooted at the face at infinity
        let root = uf.find(0);
        let mut depth = vec![usize::MAX; fs.len()];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(r) = queue.pop_front() {
            for &(l, rr) in &sides {
                for (a, b) in [(l, rr), (rr, l)] {
                    if a == r && depth[b] == usize::MAX {
                        depth[b] = depth[r] + 1;
                        queue.push_back(b);
                    }
                }
            }
        }
        let child: Vec<usize> = sides.iter().map(|&(l, r)| if depth[l] > depth[r] { l } else { r }).collect();
        let kappa: Vec<i64> = sides.iter().zip(&child).map(|(&(l, _), &k)| if k == l { 1 } else { -1 }).collect();
        let parent: Vec<Option<usize>> = (0..count)
            .map(|c| {
                let outer = if child[c] == sides[c].0 { sides[c].1 } else { sides[c].0 };
                child.iter().position(|&k| k == outer)
            })
            .collect();
        let mut inside = vec![vec![false; n]; count];
        for (c, list) in arcs.iter().enumerate() {
            for &s in list {
                let p = s / 4;
                inside[c][p] = gap(&mut uf, p) == child[c];
            }
        }
        Ok(Surface { circle, count, arcs, pos, kappa, inside, parent })
    }

    /// Circles joined by crossing `p`: the one through slot 0 first.
    fn band_ends(&self, p: usize) -> (usize, usize) {
        let a = self.circle[4 * p];
        let b = (1..4).map(|k| self.circle[4 * p + k]).find(|&c| c != a).expect("two circles meet at a crossing");
        (a, b)
    }
}

/// Seifert circles, graph, genus and nesting of a connected diagram.
pub fn seifert_data(d: &LinkDiagram) -> Result<SeifertData, DiagramError> {
    let sf = Surface::new(d)?;
    let circles: Vec<Vec<u32>> = sf
        .arcs
        .iter()
        .map(|list| list.iter().map(|&s| d.label(smooth_pair(d.sign(s / 4), s))).collect())
        .collect();
    let edges = (0..d.crossing_count())
        .map(|p| {
            let (a, b) = sf.band_ends(p);
            (a, b, d.sign(p))
        })
        .collect();
    let s = sf.count as i64;
    let twice = 2 - (s + d.component_count() as i64 - d.crossing_count() as i64);
    Ok(SeifertData {
        circles,
        s: sf.count,
        graph: SignedPlanarGraph { vertex_count: sf.count, edges, rotation: None },
        genus: twice / 2,
        nesting: sf.parent,
    })
}

/// One curve's passage across a circle's strip.
struct Visit {
    circle: usize,
    band_in: usize,
    band_out: usize,
}

/// Seifert matrix `lk(a+, b)` over the fundamental cycles of a
/// breadth-first spanning tree of the Seifert graph.
pub fn seifert_matrix(d: &LinkDiagram) -> Result<SeifertMatrix, DiagramError> {
    let sf = Surface::new(d)?;
    let n = d.crossing_count();
    let ends: Vec<(usize, usize)> = (0..n).map(|p| sf.band_ends(p)).collect();

    // spanning tree
    let mut adj = vec![Vec::new(); sf.count];
    for (p, &(a, b)) in ends.iter().enumerate() {
        adj[a].push((p, b));
        adj[b].push((p, a));
    }
    let mut up: Vec<Option<(usize, usize)>> = vec![None; sf.count];
    let mut depth = vec![usize::MAX; sf.count];
    let mut tree = vec![false; n];
    depth[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for &(p, o) in &adj[c] {
            if depth[o] == usize::MAX {
                depth[o] = depth[c] + 1;
                up[o] = Some((p, c));
                tree[p] = true;
                queue.push_back(o);
            }
        }
    }

    // fundamental cycles as (band, from, to) steps
    let mut cycles: Vec<Vec<(usize, usize, usize)>> = Vec::new();
    for p in (0..n).filter(|&p| !tree[p]) {
        let (u, v) = ends[p];
        let (mut x, mut y) = (v, u);
        let mut down: Vec<(usize, usize, usize)> = Vec::new();
        let mut rise: Vec<(usize, usize, usize)> = Vec::new();
        while x != y {
            if depth[x] >= depth[y] {
                let (q, px) = up[x].unwrap();
                down.push((q, x, px));
                x = px;
            } else {
                let (q, py) = up[y].unwrap();
                rise.push((q, py, y));
                y = py;
            }
        }
        let mut cyc = vec![(p, u, v)];
        cyc.extend(down);
        cyc.extend(rise.into_iter().rev());
        cycles.push(cyc);
    }

    let m = cycles.len();
    let big = 2 * m as i64 + 4;
    let visits: Vec<Vec<Visit>> = cycles
        .iter()
        .map(|cyc| {
            (0..cyc.len())
                .map(|k| Visit { circle: cyc[k].2, band_in: cyc[k].0, band_out: cyc[(k + 1) % cyc.len()].0 })
                .collect()
        })
        .collect();
    let dir = |x: usize, p: usize| -> Option<i64> {
        cycles[x].iter().find(|st| st.0 == p).map(|st| if st.1 == ends[p].0 { 1 } else { -1 })
    };
    // lane position of curve x at band p on circle c
    let lane = |c: usize, p: usize, x: usize| -> i64 {
        let eps = if sf.inside[c][p] { -1 } else { 1 };
        sf.pos[c][p] as i64 * big + eps * sf.kappa[c] * (x as i64 + 1)
    };
    let visit_at = |x: usize, c: usize| visits[x].iter().find(|v| v.circle == c);

    let mut v = vec![vec![0i64; m]; m];
    for a in 0..m {
        for b in 0..m {
            let mut twice = 0i64;
            for p in 0..n {
                if let (Some(da), Some(db)) = (dir(a, p), dir(b, p)) {
                    twice -= d.sign(p) as i64 * da * db;
                }
            }
            if a != b {
                for va in &visits[a] {
                    let c = va.circle;
                    let Some(vb) = visit_at(b, c) else { continue };
                    let run = |x: usize, vx: &Visit| {
                        let (s0, s1) = (lane(c, vx.band_in, x), lane(c, vx.band_out, x));
                        (s0.min(s1), s0.max(s1), (s1 - s0).signum())
                    };
                    let (alo, ahi, sa) = run(a, va);
                    let (blo, bhi, sb) = run(b, vb);
                    let in_a = |s: i64| alo < s && s < ahi;
                    let in_b = |s: i64| blo < s && s < bhi;
                    // radials against runs, the deeper curve's radial
                    // crossing the shallower run
                    for (band, rho) in [(vb.band_in, 1), (vb.band_out, -1)] {
                        if b > a && in_a(lane(c, band, b)) {
                            twice += sa * rho;
                        }
                    }
                    for (band, rho) in [(va.band_in, 1), (va.band_out, -1)] {
                        if a > b && in_b(lane(c, band, a)) {
                            twice -= rho * sb;
                        }
                    }
                    // folded band lanes over runs
                    for (band, lambda) in [(va.band_in, -1), (va.band_out, 1)] {
                        if sf.inside[c][band] && in_b(lane(c, band, a)) {
                            twice += sf.kappa[c] * -lambda * sb;
                        }
                    }
                    for (band, lambda) in [(vb.band_in, -1), (vb.band_out, 1)] {
                        if sf.inside[c][band] && in_a(lane(c, band, b)) {
                            twice += sf.kappa[c] * -lambda * sa;
                        }
                    }
                }
            }
            debug_assert!(twice % 2 == 0, "linking numbers are integers");
            v[a][b] = twice / 2;
        }
    }
    let basis = cycles.iter().map(|cyc| cyc.iter().map(|&(p, from, _)| (p, if from == ends[p].0 { 1 } else { -1 })).collect()).collect();
    Ok(SeifertMatrix { v: IntMatrix::from_fn(m, |i, j| BigInt::from(v[i][j])), basis })
}
