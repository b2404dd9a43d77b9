//! Mutable slot graph used for editing diagrams.
//!
//! Each crossing has four slots in counterclockwise order; `axis` names
//! the under pair (`0` means slots 0 and 2). Every slot records its
//! partner slot, whether its edge enters the crossing there, and a label
//! hint used to choose the canonical numbering.

use alloc::vec;
use alloc::vec::Vec;

use super::LinkDiagram;

const DEAD: usize = usize::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Skel {
    pub partner: Vec<usize>,
    pub head: Vec<bool>,
    pub label: Vec<u32>,
    pub axis: Vec<u8>,
    pub alive: Vec<bool>,
    pub free_loops: usize,
}

fn opp(s: usize) -> usize {
    s ^ 2
}

fn cw(s: usize) -> usize {
    s - s % 4 + (s % 4 + 3) % 4
}

impl Skel {
    /// `n` unconnected crossings.
    pub fn new(n: usize) -> Self {
        Skel {
            partner: vec![DEAD; 4 * n],
            head: vec![false; 4 * n],
            label: vec![0; 4 * n],
            axis: vec![0; n],
            alive: vec![true; n],
            free_loops: 0,
        }
    }

    pub fn from_diagram(d: &LinkDiagram) -> Self {
        let n = d.crossing_count();
        let m = 4 * n;
        Skel {
            partner: (0..m).map(|s| d.partner(s)).collect(),
            head: (0..m).map(|s| d.is_head(s)).collect(),
            label: (0..m).map(|s| d.label(s)).collect(),
            axis: vec![0; n],
            alive: vec![true; n],
            free_loops: d.free_loops(),
        }
    }

    /// Sub-skeleton on a set of crossings closed under adjacency.
    pub fn restrict(&self, crossings: &[usize]) -> Skel {
        let mut index = vec![DEAD; self.axis.len()];
        for (i, &p) in crossings.iter().enumerate() {
            index[p] = i;
        }
        let mut out = Skel::new(crossings.len());
        for (i, &p) in crossings.iter().enumerate() {
            out.axis[i] = self.axis[p];
            for k in 0..4 {
                let s = 4 * p + k;
                let x = self.partner[s];
                out.partner[4 * i + k] = 4 * index[x / 4] + x % 4;
                out.head[4 * i + k] = self.head[s];
                out.label[4 * i + k] = self.label[s];
            }
        }
        out
    }

    pub fn is_over(&self, s: usize) -> bool {
        (s % 2) as u8 != self.axis[s / 4]
    }

    pub fn flip(&mut self, p: usize) {
        self.axis[p] ^= 1;
    }

    /// Reverses every edge whose label hint lies in `lo..=hi`.
    pub fn reverse_labels(&mut self, lo: u32, hi: u32) {
        for s in 0..self.head.len() {
            if self.partner[s] != DEAD && lo <= self.label[s] && self.label[s] <= hi {
                self.head[s] = !self.head[s];
            }
        }
    }

    /// Appends `other`, shifting its slots and label hints; returns the
    /// slot offset.
    pub fn append(&mut self, other: &Skel) -> usize {
        let off = self.partner.len();
        let loff = self.label.iter().copied().max().unwrap_or(0);
        self.partner.extend(other.partner.iter().map(|&x| if x == DEAD { DEAD } else { x + off }));
        self.head.extend_from_slice(&other.head);
        self.label.extend(other.label.iter().map(|&l| l + loff));
        self.axis.extend_from_slice(&other.axis);
        self.alive.extend_from_slice(&other.alive);
        self.free_loops += other.free_loops;
        off
    }

    pub fn connect(&mut self, a: usize, b: usize) {
        self.partner[a] = b;
        self.partner[b] = a;
        let l = self.label[a].min(self.label[b]);
        self.label[a] = l;
        self.label[b] = l;
    }

    /// Deletes crossing `p`, joining its slots in the two given pairs.
    /// Strands closing up inside the crossing become free loops.
    pub fn remove_crossing(&mut self, p: usize, pairs: [[usize; 2]; 2]) {
        let base = 4 * p;
        let pair_of = |k: usize| {
            for pr in pairs {
                if pr[0] == k {
                    return pr[1];
                }
                if pr[1] == k {
                    return pr[0];
                }
            }
            unreachable!("pairs cover all four slots")
        };
        let inside = |x: usize| x / 4 == p;
        let mut seen = [false; 4];
        for k in 0..4 {
            if seen[k] || inside(self.partner[base + k]) {
                continue;
            }
            let x = self.partner[base + k];
            seen[k] = true;
            let mut j = pair_of(k);
            seen[j] = true;
            let mut y = self.partner[base + j];
            while inside(y) {
                seen[y % 4] = true;
                j = pair_of(y % 4);
                seen[j] = true;
                y = self.partner[base + j];
            }
            self.connect(x, y);
        }
        for k in 0..4 {
            if seen[k] {
                continue;
            }
            let mut j = k;
            while !seen[j] {
                seen[j] = true;
                let m = self.partner[base + j] % 4;
                seen[m] = true;
                j = pair_of(m);
            }
            self.free_loops += 1;
        }
        for k in 0..4 {
            self.partner[base + k] = DEAD;
        }
        self.alive[p] = false;
    }

    /// Performs one reducing Reidemeister I or II move if available.
    pub fn reduce_once(&mut self) -> bool {
        let m = self.partner.len();
        for s in 0..m {
            if self.partner[s] == DEAD {
                continue;
            }
            if cw(self.partner[s]) == s {
                self.remove_crossing(s / 4, [[0, 2], [1, 3]]);
                return true;
            }
        }
        for s in 0..m {
            if self.partner[s] == DEAD {
                continue;
            }
            let x = self.partner[s];
            let t = cw(x);
            if t / 4 == s / 4 || cw(self.partner[t]) != s {
                continue;
            }
            if self.is_over(s) == self.is_over(x) {
                self.remove_crossing(s / 4, [[0, 2], [1, 3]]);
                self.remove_crossing(t / 4, [[0, 2], [1, 3]]);
                return true;
            }
        }
        false
    }

    /// Builds the canonical diagram: live crossings keep their order,
    /// components are ordered by smallest label hint and numbered from it.
    pub fn canonical(&self) -> LinkDiagram {
        let live: Vec<usize> = (0..self.axis.len()).filter(|&p| self.alive[p]).collect();
        let mut index = vec![DEAD; self.axis.len()];
        for (i, &p) in live.iter().enumerate() {
            index[p] = i;
        }
        let ns = |s: usize| 4 * index[s / 4] + s % 4;
        let n = live.len();
        let mut head = vec![false; 4 * n];
        let mut hint = vec![0u32; 4 * n];
        let mut seen = vec![false; 4 * n];
        // (min hint, oriented edges as (tail, head) new slots)
        let mut comps: Vec<(u32, Vec<(usize, usize)>)> = Vec::new();
        for &p in &live {
            for k in 0..4 {
                let s0 = 4 * p + k;
                if seen[ns(s0)] {
                    continue;
                }
                let mut walk: Vec<(usize, usize)> = Vec::new();
                let mut s = s0;
                loop {
                    let x = self.partner[s];
                    seen[ns(s)] = true;
                    seen[ns(x)] = true;
                    walk.push((s, x));
                    s = opp(x);
                    if s == s0 {
                        break;
                    }
                }
                let i0 = (0..walk.len()).min_by_key(|&i| (self.label[walk[i].0], ns(walk[i].0).min(ns(walk[i].1)))).unwrap();
                let (a, b) = walk[i0];
                let forward = if self.head[a] != self.head[b] { self.head[b] } else { ns(a) < ns(b) };
                let len = walk.len();
                let mut edges: Vec<(usize, usize)> = if forward {
                    (0..len).map(|j| walk[(i0 + j) % len]).collect()
                } else {
                    (0..len).map(|j| {
                        let (u, v) = walk[(i0 + len - j) % len];
                        (v, u)
                    })
                    .collect()
                };
                let min_hint = self.label[a];
                if len == 2 {
                    // match the parser's reading of two-edge components
                    let over = |s: usize| self.is_over(s);
                    let (h0, h1) = (edges[0].1, edges[1].1);
                    let swap = match (over(h0), over(h1)) {
                        (true, true) => ns(h0) / 4 > ns(h1) / 4,
                        (false, true) => true,
                        _ => false,
                    };
                    if swap {
                        edges.swap(0, 1);
                    }
                }
                let edges = edges.into_iter().map(|(u, v)| (ns(u), ns(v))).collect();
                comps.push((min_hint, edges));
            }
        }
        comps.sort_by_key(|c| (c.0, c.1[0].0));
        let mut ranges = Vec::with_capacity(comps.len());
        let mut next_label = 1u32;
        for (_, edges) in &comps {
            let lo = next_label;
            for &(t, h) in edges {
                head[t] = false;
                head[h] = true;
                hint[t] = next_label;
                hint[h] = next_label;
                next_label += 1;
            }
            ranges.push((lo, next_label - 1));
        }
        let mut tuples = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for (i, &p) in live.iter().enumerate() {
            let a = self.axis[p] as usize;
            let u = if head[4 * i + a] { a } else { a + 2 };
            let mut t = [0u32; 4];
            for (k, x) in t.iter_mut().enumerate() {
                *x = hint[4 * i + (u + k) % 4];
            }
            tuples.push(t);
            signs.push(if head[4 * i + (u + 3) % 4] { 1 } else { -1 });
        }
        LinkDiagram::from_parts(tuples, ranges, self.free_loops, signs)
    }
}
