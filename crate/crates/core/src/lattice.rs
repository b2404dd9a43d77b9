//! Lattice knots: simple closed polygons on the cubical lattice, written
//! as cyclic words in unit steps along the coordinate axes.
//!
//! The square moves are the Dehn-Heegaard moves. `Dh1` swaps two
//! neighboring perpendicular edges (pushing a corner across its unit
//! square), `Dh2` replaces one edge by the other three sides of a unit
//! square and `Dh2Inv` undoes that.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{parse_pd, DiagramError, LinkDiagram};

/// Coordinate axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    fn index(self) -> usize {
        self as usize
    }
}

/// A unit step: an axis and a direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub axis: Axis,
    pub positive: bool,
}

impl Step {
    pub const fn new(axis: Axis, positive: bool) -> Self {
        Step { axis, positive }
    }

    pub fn inverse(self) -> Self {
        Step { axis: self.axis, positive: !self.positive }
    }

    pub fn vector(self) -> [i64; 3] {
        let mut v = [0; 3];
        v[self.axis.index()] = if self.positive { 1 } else { -1 };
        v
    }

    /// Lowercase letter for a positive step, uppercase for its inverse.
    pub fn letter(self) -> char {
        let c = match self.axis {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        };
        if self.positive {
            c
        } else {
            c.to_ascii_uppercase()
        }
    }
}

fn add(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    Empty,
    Syntax { pos: usize, msg: &'static str },
    NotClosed { sums: [i64; 3] },
    /// The trace returns to an earlier vertex after `step` steps.
    SelfIntersecting { step: usize, vertex: [i64; 3] },
    /// The square of a move meets the polygon away from the replaced edges.
    Obstructed { vertex: [i64; 3] },
    /// The edges at the cited position do not have the shape the move needs.
    Precondition(&'static str),
    NotPlanar,
    /// No area-decreasing reduction exists within the search.
    Stuck { area: i64 },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LatticeError::*;
        match self {
            Empty => f.write_str("empty word"),
            Syntax { pos, msg } => write!(f, "syntax error at byte {}: {}", pos, msg),
            NotClosed { sums } => write!(f, "word is not closed: exponent sums x={} y={} z={}", sums[0], sums[1], sums[2]),
            SelfIntersecting { step, vertex } => {
                write!(f, "polygon revisits vertex {:?} after {} steps", vertex, step)
            }
            Obstructed { vertex } => write!(f, "square is obstructed at vertex {:?}", vertex),
            Precondition(msg) => write!(f, "move not applicable: {}", msg),
            NotPlanar => f.write_str("word uses all three axes"),
            Stuck { area } => write!(f, "no area-decreasing move found at area {}", area),
        }
    }
}

/// A validated lattice knot: the step word and its start vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeWord {
    start: [i64; 3],
    steps: Vec<Step>,
}

/// Per-axis letter counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct AxisStats {
    pub positive: usize,
    pub negative: usize,
}

/// A Dehn-Heegaard square move. Positions index the word cyclically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Move {
    /// Swap edges `corner - 1` and `corner`, moving vertex `corner`.
    Dh1 { corner: usize },
    /// Replace edge `edge` by `normal`, the edge, `normal` inverse.
    Dh2 { edge: usize, normal: Step },
    /// Replace edges `edge, edge + 1, edge + 2` of shape `n a n^-1` by `a`.
    Dh2Inv { edge: usize },
}

/// Tokenizes a word such as `x^2 z^3 Y X^-1` (also accepts `x2`, and
/// letters written without spaces). `X` is the inverse of `x`; a negative
/// exponent inverts again.
pub fn parse_word(text: &str) -> Result<Vec<Step>, LatticeError> {
    let s = text.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < s.len() {
        let c = s[i];
        if c.is_ascii_whitespace() || c == b'*' || c == b'.' {
            i += 1;
            continue;
        }
        let (axis, positive) = match c {
            b'x' => (Axis::X, true),
            b'X' => (Axis::X, false),
            b'y' => (Axis::Y, true),
            b'Y' => (Axis::Y, false),
            b'z' => (Axis::Z, true),
            b'Z' => (Axis::Z, false),
            _ => return Err(LatticeError::Syntax { pos: i, msg: "expected one of x X y Y z Z" }),
        };
        i += 1;
        if s.get(i) == Some(&b'^') {
            i += 1;
        }
        let mut neg = false;
        if s.get(i) == Some(&b'-') {
            neg = true;
            i += 1;
        }
        let digits = i;
        let mut n: usize = 0;
        while let Some(&d) = s.get(i) {
            if !d.is_ascii_digit() {
                break;
            }
            n = n
                .checked_mul(10)
                .and_then(|n| n.checked_add((d - b'0') as usize))
                .filter(|&n| n <= 1 << 20)
                .ok_or(LatticeError::Syntax { pos: digits, msg: "exponent too large" })?;
            i += 1;
        }
        if i == digits {
            if neg || s.get(i - 1) == Some(&b'^') {
                return Err(LatticeError::Syntax { pos: i, msg: "expected an exponent" });
            }
            n = 1;
        }
        out.extend(core::iter::repeat_n(Step::new(axis, positive != neg), n));
    }
    Ok(out)
}

impl LatticeWord {
    /// Parses and validates a word starting at the origin.
    pub fn parse(text: &str) -> Result<Self, LatticeError> {
        Self::new([0; 3], parse_word(text)?)
    }

    /// Validates a closed, simple step sequence.
    pub fn new(start: [i64; 3], steps: Vec<Step>) -> Result<Self, LatticeError> {
        if steps.is_empty() {
            return Err(LatticeError::Empty);
        }
        let mut sums = [0i64; 3];
        for s in &steps {
            sums = add(sums, s.vector());
        }
        if sums != [0; 3] {
            return Err(LatticeError::NotClosed { sums });
        }
        let mut seen = BTreeSet::new();
        let mut v = start;
        for (k, s) in steps.iter().enumerate() {
            if !seen.insert(v) {
                return Err(LatticeError::SelfIntersecting { step: k, vertex: v });
            }
            v = add(v, s.vector());
        }
        // Closed words of length 2 (`x X`) pass the vertex test but retrace an edge.
        if steps.len() < 4 {
            return Err(LatticeError::SelfIntersecting { step: steps.len(), vertex: start });
        }
        Ok(LatticeWord { start, steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn start(&self) -> [i64; 3] {
        self.start
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Vertex `k` is where step `k` begins.
    pub fn vertices(&self) -> Vec<[i64; 3]> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut v = self.start;
        for s in &self.steps {
            out.push(v);
            v = add(v, s.vector());
        }
        out
    }

    pub fn axis_stats(&self) -> [AxisStats; 3] {
        let mut out = [AxisStats::default(); 3];
        for s in &self.steps {
            let a = &mut out[s.axis.index()];
            if s.positive {
                a.positive += 1;
            } else {
                a.negative += 1;
            }
        }
        out
    }

    /// Vertices where consecutive steps change axis.
    pub fn right_angles(&self) -> usize {
        let n = self.steps.len();
        (0..n).filter(|&k| self.steps[k].axis != self.steps[(k + 1) % n].axis).count()
    }

    /// Right angles whose plane differs from the previous right angle's.
    pub fn plane_changes(&self) -> usize {
        let n = self.steps.len();
        let planes: Vec<u8> = (0..n)
            .filter_map(|k| {
                let (a, b) = (self.steps[k].axis, self.steps[(k + 1) % n].axis);
                (a != b).then(|| 7 - (1 << a.index()) - (1 << b.index()))
            })
            .collect();
        let m = planes.len();
        (0..m).filter(|&k| m > 1 && planes[k] != planes[(k + 1) % m]).count()
    }

    /// The two axes of a planar word, or `None` if it uses all three.
    pub fn plane(&self) -> Option<(Axis, Axis)> {
        let mut used = [false; 3];
        for s in &self.steps {
            used[s.axis.index()] = true;
        }
        match used {
            [true, true, true] => None,
            [_, false, false] | [false, _, false] | [false, false, _] => unreachable!("closed simple words turn"),
            [true, true, false] => Some((Axis::X, Axis::Y)),
            [true, false, true] => Some((Axis::X, Axis::Z)),
            [false, true, true] => Some((Axis::Y, Axis::Z)),
        }
    }

    /// Signed enclosed area of a planar word in its plane, positive when
    /// it runs counterclockwise from the first axis toward the second.
    pub fn signed_area(&self) -> Result<i64, LatticeError> {
        let (a, b) = self.plane().ok_or(LatticeError::NotPlanar)?;
        let vs = self.vertices();
        let n = vs.len();
        let twice: i64 = (0..n)
            .map(|k| {
                let (p, q) = (vs[k], vs[(k + 1) % n]);
                p[a.index()] * q[b.index()] - q[a.index()] * p[b.index()]
            })
            .sum();
        Ok(twice / 2)
    }

    pub fn area(&self) -> Result<i64, LatticeError> {
        self.signed_area().map(i64::abs)
    }

    /// Word text with runs folded into exponents, e.g. `x^2 y X^2 Y`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut k = 0;
        while k < self.steps.len() {
            let s = self.steps[k];
            let mut run = 1;
            while k + run < self.steps.len() && self.steps[k + run] == s {
                run += 1;
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push(s.letter());
            if run > 1 {
                out.push_str(&format!("^{}", run));
            }
            k += run;
        }
        out
    }

    /// Equality as cyclic words at the same location (start ignored).
    pub fn same_polygon(&self, other: &LatticeWord) -> bool {
        let n = self.steps.len();
        if n != other.steps.len() {
            return false;
        }
        let vs = other.vertices();
        (0..n).any(|r| {
            vs[r] == self.start && (0..n).all(|k| self.steps[k] == other.steps[(k + r) % n])
        })
    }

    /// Rotates the word so step `k` comes first.
    fn rotated(&self, k: usize) -> LatticeWord {
        let n = self.steps.len();
        let k = k % n;
        let start = self.vertices()[k];
        let steps = self.steps[k..].iter().chain(&self.steps[..k]).copied().collect();
        LatticeWord { start, steps }
    }

    /// Applies a square move, checking that the square meets the polygon
    /// only in the replaced edges.
    pub fn apply(&self, mv: Move) -> Result<LatticeWord, LatticeError> {
        let n = self.steps.len();
        match mv {
            Move::Dh1 { corner } => {
                if corner >= n {
                    return Err(LatticeError::Precondition("position out of range"));
                }
                let i = (corner + n - 1) % n;
                let (a, b) = (self.steps[i], self.steps[corner]);
                if a.axis == b.axis {
                    return Err(LatticeError::Precondition("edges at the corner are not perpendicular"));
                }
                let vs = self.vertices();
                let moved = add(vs[i], b.vector());
                if vs.contains(&moved) {
                    return Err(LatticeError::Obstructed { vertex: moved });
                }
                let mut w = self.clone();
                w.steps[i] = b;
                w.steps[corner] = a;
                if corner == 0 {
                    w.start = moved;
                }
                Ok(w)
            }
            Move::Dh2 { edge, normal } => {
                if edge >= n {
                    return Err(LatticeError::Precondition("position out of range"));
                }
                let a = self.steps[edge];
                if a.axis == normal.axis {
                    return Err(LatticeError::Precondition("normal must be perpendicular to the edge"));
                }
                let vs = self.vertices();
                let p = add(vs[edge], normal.vector());
                let q = add(p, a.vector());
                for v in [p, q] {
                    if vs.contains(&v) {
                        return Err(LatticeError::Obstructed { vertex: v });
                    }
                }
                let mut steps = Vec::with_capacity(n + 2);
                steps.extend_from_slice(&self.steps[..edge]);
                steps.extend_from_slice(&[normal, a, normal.inverse()]);
                steps.extend_from_slice(&self.steps[edge + 1..]);
                Ok(LatticeWord { start: self.start, steps })
            }
            Move::Dh2Inv { edge } => {
                if edge >= n {
                    return Err(LatticeError::Precondition("position out of range"));
                }
                if n < 6 {
                    return Err(LatticeError::Precondition("a four-edge square cannot shrink further"));
                }
                let (nm, a, back) = (self.steps[edge], self.steps[(edge + 1) % n], self.steps[(edge + 2) % n]);
                if nm.axis == a.axis || back != nm.inverse() {
                    return Err(LatticeError::Precondition("edges do not form three sides of a square"));
                }
                let w = if edge + 2 < n { self.clone() } else { self.rotated(edge) };
                let e = if edge + 2 < n { edge } else { 0 };
                let mut steps = Vec::with_capacity(n - 2);
                steps.extend_from_slice(&w.steps[..e]);
                steps.push(a);
                steps.extend_from_slice(&w.steps[e + 3..]);
                Ok(LatticeWord { start: w.start, steps })
            }
        }
    }

    /// Every applicable move, in a fixed order.
    pub fn moves(&self) -> Vec<Move> {
        let n = self.steps.len();
        let mut out = Vec::new();
        for k in 0..n {
            for mv in [Move::Dh2Inv { edge: k }, Move::Dh1 { corner: k }] {
                if self.apply(mv).is_ok() {
                    out.push(mv);
                }
            }
            for axis in Axis::ALL {
                for positive in [true, false] {
                    let mv = Move::Dh2 { edge: k, normal: Step::new(axis, positive) };
                    if self.apply(mv).is_ok() {
                        out.push(mv);
                    }
                }
            }
        }
        out
    }

    /// Planar projection as a link diagram (see [`lattice_diagram`]).
    pub fn to_diagram(&self) -> Result<LinkDiagram, DiagramError> {
        lattice_diagram(self)
    }
}

impl fmt::Display for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// One step of a planar reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub mv: Move,
    pub word: LatticeWord,
    pub area: i64,
}

/// Reduces a planar lattice knot to a unit square by moves that each
/// shrink the enclosed area.
///
/// Every square move changes the enclosed area by exactly one, so the
/// trace has `area - 1` steps. Moves are tried removing bumps first, then
/// cutting corners, with backtracking over dead ends.
pub fn planar_reduce(w: &LatticeWord) -> Result<Vec<ReductionStep>, LatticeError> {
    let area = w.area()?;
    let mut dead = BTreeSet::new();
    let mut trace = Vec::new();
    if reduce_from(w, area, &mut dead, &mut trace) {
        trace.reverse();
        Ok(trace)
    } else {
        Err(LatticeError::Stuck { area })
    }
}

fn polygon_key(w: &LatticeWord) -> Vec<[i64; 3]> {
    let mut vs = w.vertices();
    vs.sort_unstable();
    vs
}

fn reduce_from(
    w: &LatticeWord,
    area: i64,
    dead: &mut BTreeSet<Vec<[i64; 3]>>,
    trace: &mut Vec<ReductionStep>,
) -> bool {
    if area == 1 {
        return true;
    }
    if dead.contains(&polygon_key(w)) {
        return false;
    }
    let n = w.len();
    // Bump removals first, then corner cuts; DH2 on a planar word either
    // leaves the plane or grows the area, so it never helps here.
    let candidates = (0..n).map(|k| Move::Dh2Inv { edge: k }).chain((0..n).map(|k| Move::Dh1 { corner: k }));
    for mv in candidates {
        let Ok(next) = w.apply(mv) else { continue };
        let a = next.area().expect("moves keep a planar word planar");
        if a >= area {
            continue;
        }
        if reduce_from(&next, a, dead, trace) {
            trace.push(ReductionStep { mv, word: next, area: a });
            return true;
        }
    }
    dead.insert(polygon_key(w));
    false
}

/// Projects a lattice knot to a link diagram.
///
/// The view direction is generic for the polygon's bounding box: with
/// coordinates shifted into `[0, r]` the map is
/// `(x, y, z) -> (m x + z, m y + k z)` with `k = 2r + 3` and
/// `m = 2(r + 1)k + 1`. Then no vertex lands on another edge, parallel
/// edges never overlap and only x-edges cross y- or z-edges, so every
/// crossing is a transverse double point. Height is measured along
/// `(-1, -k, m)`, which makes the frame right-handed.
pub fn lattice_diagram(w: &LatticeWord) -> Result<LinkDiagram, DiagramError> {
    let vs0 = w.vertices();
    let mut lo = [i64::MAX; 3];
    for v in &vs0 {
        for i in 0..3 {
            lo[i] = lo[i].min(v[i]);
        }
    }
    let vs: Vec<[i128; 3]> = vs0.iter().map(|v| [0, 1, 2].map(|i| (v[i] - lo[i]) as i128)).collect();
    let r = vs.iter().flat_map(|v| v.iter().copied()).max().unwrap_or(0);
    let k = 2 * r + 3;
    let m = 2 * (r + 1) * k + 1;
    let n = vs.len();
    // Edge e as a base vertex with the moving coordinate at its lower end.
    let base = |e: usize| -> [i128; 3] {
        let s = w.steps[e];
        if s.positive {
            vs[e]
        } else {
            vs[(e + 1) % n]
        }
    };
    // Crossing events: (edge, position along travel scaled by m k, height scaled by m k).
    let mut events: Vec<(usize, i128, i128, usize)> = Vec::new();
    let mut crossings = 0usize;
    let along = |e: usize, t: i128| if w.steps[e].positive { t } else { m * k - t };
    for ex in (0..n).filter(|&e| w.steps[e].axis == Axis::X) {
        let [x1, y1, z1] = base(ex);
        for eo in 0..n {
            let [x2, y2, z2] = base(eo);
            let (tx, to, hx, ho) = match w.steps[eo].axis {
                Axis::X => continue,
                Axis::Y => {
                    let a = m * x2 + z2 - m * x1 - z1;
                    let b = m * y1 + k * z1 - m * y2 - k * z2;
                    if !(0 < a && a < m && 0 < b && b < m) {
                        continue;
                    }
                    let hx = -(m * x1 + a) - k * m * y1 + m * m * z1;
                    let ho = -m * x2 - k * (m * y2 + b) + m * m * z2;
                    (a * k, b * k, hx * k, ho * k)
                }
                Axis::Z => {
                    let c = m * y1 + k * z1 - m * y2 - k * z2;
                    if !(0 < c && c < k) {
                        continue;
                    }
                    let a = k * (m * x2 + z2) + c - k * (m * x1 + z1);
                    if !(0 < a && a < m * k) {
                        continue;
                    }
                    let hx = -(m * k * x1 + a) - k * m * k * y1 + m * m * k * z1;
                    let ho = -m * k * x2 - k * m * k * y2 + m * (m * k * z2 + m * c);
                    (a, c * m, hx, ho)
                }
            };
            events.push((ex, along(ex, tx), hx, crossings));
            events.push((eo, along(eo, to), ho, crossings));
            crossings += 1;
        }
    }
    match crossings {
        0 => return Ok(LinkDiagram::unknot()),
        1 => {
            let (hx, ho) = (events[0].2, events[1].2);
            let (under_e, over_e) = if hx < ho { (events[0].0, events[1].0) } else { (events[1].0, events[0].0) };
            let sign = crossing_sign(dir2(w.steps[under_e], m, k), dir2(w.steps[over_e], m, k));
            return parse_pd(if sign > 0 { "X(2,2,1,1)" } else { "X(2,1,1,2)" });
        }
        _ => {}
    }
    events.sort_by_key(|&(e, t, _, _)| (e, t));
    // Passage j runs along edge label j -> j + 1; labels are 1..2c.
    let total = events.len() as u32;
    let mut under: BTreeMap<usize, (u32, Step)> = BTreeMap::new();
    let mut over: BTreeMap<usize, (u32, Step)> = BTreeMap::new();
    for (j, &(e, _, h, id)) in events.iter().enumerate() {
        let other = events.iter().find(|ev| ev.3 == id && ev.0 != e).expect("paired event").2;
        let slot = (j as u32, w.steps[e]);
        if h < other {
            under.insert(id, slot);
        } else {
            over.insert(id, slot);
        }
    }
    let inc = |j: u32| if j == 0 { total } else { j };
    let out = |j: u32| j + 1;
    let mut pd = String::new();
    for id in 0..crossings {
        let (ju, su) = under[&id];
        let (jo, so) = over[&id];
        let (u, o) = (dir2(su, m, k), dir2(so, m, k));
        let (b, d) = if u.0 * o.1 - u.1 * o.0 > 0 { (inc(jo), out(jo)) } else { (out(jo), inc(jo)) };
        pd.push_str(&format!("X({},{},{},{}) ", inc(ju), b, out(ju), d));
    }
    parse_pd(&pd)
}

fn dir2(s: Step, m: i128, k: i128) -> (i128, i128) {
    let g = if s.positive { 1 } else { -1 };
    match s.axis {
        Axis::X => (g * m, 0),
        Axis::Y => (0, g * m),
        Axis::Z => (g, g * k),
    }
}

fn crossing_sign(under: (i128, i128), over: (i128, i128)) -> i8 {
    if over.0 * under.1 - over.1 * under.0 > 0 {
        1
    } else {
        -1
    }
}

/// Axis-aligned `w` by `h` rectangle traced counterclockwise in the xy-plane.
pub fn rectangle(w: usize, h: usize) -> Result<LatticeWord, LatticeError> {
    let mut steps = vec![Step::new(Axis::X, true); w];
    steps.extend(vec![Step::new(Axis::Y, true); h]);
    steps.extend(vec![Step::new(Axis::X, false); w]);
    steps.extend(vec![Step::new(Axis::Y, false); h]);
    LatticeWord::new([0; 3], steps)
}
