//! PD text parser and validator.
//!
//! Grammar: whitespace-separated `X(a,b,c,d)` terms with positive integer
//! labels, an optional `components=n` header giving the total component
//! count, and `#` comments running to the end of the line.

use alloc::vec;
use alloc::vec::Vec;

use super::{faces, DiagramError, LinkDiagram};
use crate::util::UnionFind;

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() {
            match self.s[self.pos] {
                b'#' => {
                    while self.pos < self.s.len() && self.s[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn err(&self, msg: &'static str) -> DiagramError {
        DiagramError::Syntax { pos: self.pos, msg }
    }

    fn expect(&mut self, c: u8, msg: &'static str) -> Result<(), DiagramError> {
        self.skip_inline_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(msg))
        }
    }

    fn skip_inline_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] == b' ' || self.s[self.pos] == b'\t') {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<u64, DiagramError> {
        self.skip_inline_ws();
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(&c) = self.s.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or(DiagramError::Syntax { pos: start, msg: "number too large" })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a positive integer"));
        }
        Ok(v)
    }

    fn starts_with(&self, w: &[u8]) -> bool {
        self.s[self.pos..].starts_with(w)
    }
}

/// Parses and validates PD text.
///
/// Orientation comes from the numbering: along a component of three or
/// more edges the successor of `e` is `e + 1`, wrapping from the largest
/// label to the smallest. A two-edge component `{e, e+1}` is consecutive
/// both ways: an over passage runs `e -> e+1`, except that when the
/// component passes over at two crossings the later one (in list order)
/// runs `e+1 -> e`.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    let mut declared: Option<usize> = None;
    let mut tuples: Vec<[u32; 4]> = Vec::new();
    loop {
        lx.skip_ws();
        if lx.pos >= lx.s.len() {
            break;
        }
        if lx.starts_with(b"components") {
            if declared.is_some() || !tuples.is_empty() {
                return Err(lx.err("components header must come first and only once"));
            }
            lx.pos += b"components".len();
            lx.expect(b'=', "expected '=' after 'components'")?;
            let n = lx.number()?;
            declared = Some(usize::try_from(n).map_err(|_| lx.err("component count too large"))?);
            continue;
        }
        if lx.s[lx.pos] != b'X' {
            return Err(lx.err("expected 'X(' or 'components='"));
        }
        lx.pos += 1;
        lx.expect(b'(', "expected '(' after 'X'")?;
        let mut t = [0u32; 4];
        for (k, slot) in t.iter_mut().enumerate() {
            if k > 0 {
                lx.expect(b',', "expected ','")?;
            }
            let at = lx.pos;
            let v = lx.number()?;
            if v == 0 || v > u32::MAX as u64 / 2 {
                return Err(DiagramError::Syntax { pos: at, msg: "edge labels must be positive" });
            }
            *slot = v as u32;
        }
        lx.expect(b')', "expected ')'")?;
        tuples.push(t);
    }
    validate(tuples, declared)
}

fn validate(tuples: Vec<[u32; 4]>, declared: Option<usize>) -> Result<LinkDiagram, DiagramError> {
    let n = tuples.len();
    let m = 2 * n as u32;
    let mut count = vec![0usize; m as usize + 1];
    for t in &tuples {
        for &e in t {
            if e > m {
                return Err(DiagramError::EdgeCount { edge: e, count: tuples.iter().flatten().filter(|&&x| x == e).count() });
            }
            count[e as usize] += 1;
        }
    }
    for e in 1..=m {
        match count[e as usize] {
            2 => {}
            0 => return Err(DiagramError::MissingEdge { edge: e }),
            c => return Err(DiagramError::EdgeCount { edge: e, count: c }),
        }
    }
    for (p, t) in tuples.iter().enumerate() {
        if t[0] == t[2] || t[1] == t[3] {
            return Err(DiagramError::DegenerateCrossing { crossing: p });
        }
    }

    // Components: labels joined straight through crossings.
    let mut uf = UnionFind::new(m as usize + 1);
    for t in &tuples {
        uf.union(t[0] as usize, t[2] as usize);
        uf.union(t[1] as usize, t[3] as usize);
    }
    let mut ranges: Vec<(u32, u32)> = Vec::new();
    for g in uf.groups().into_iter().skip(1) {
        // groups are sorted, so contiguity means last - first = len - 1
        let (lo, hi) = (g[0] as u32, *g.last().unwrap() as u32);
        if (hi - lo) as usize + 1 != g.len() {
            let gap = g.windows(2).find(|w| w[1] != w[0] + 1).map(|w| w[0] as u32).unwrap_or(lo);
            return Err(DiagramError::NonConsecutive { edge: gap });
        }
        ranges.push((lo, hi));
    }
    ranges.sort_unstable();
    let range_of = |e: u32| *ranges.iter().find(|&&(lo, hi)| lo <= e && e <= hi).unwrap();
    let next = |e: u32| {
        let (lo, hi) = range_of(e);
        if e == hi {
            lo
        } else {
            e + 1
        }
    };

    // Which over label is incoming: Some(true) = d enters (positive).
    let mut d_in: Vec<Option<bool>> = vec![None; n];
    for (p, t) in tuples.iter().enumerate() {
        let (lo, hi) = range_of(t[0]);
        if hi - lo >= 2 && next(t[0]) != t[2] {
            return Err(DiagramError::Orientation { crossing: p });
        }
        let (lo, hi) = range_of(t[1]);
        if hi - lo >= 2 {
            d_in[p] = if next(t[3]) == t[1] {
                Some(true)
            } else if next(t[1]) == t[3] {
                Some(false)
            } else {
                return Err(DiagramError::Orientation { crossing: p });
            };
        }
    }
    // Two-edge components: each has exactly two passages.
    for &(lo, hi) in ranges.iter().filter(|r| r.1 - r.0 == 1) {
        // (crossing, is_under)
        let mut passages: Vec<(usize, bool)> = Vec::new();
        for (p, t) in tuples.iter().enumerate() {
            if t[0] == lo || t[0] == hi {
                passages.push((p, true));
            }
            if t[1] == lo || t[1] == hi {
                passages.push((p, false));
            }
        }
        debug_assert_eq!(passages.len(), 2);
        let unders: Vec<usize> = passages.iter().filter(|x| x.1).map(|x| x.0).collect();
        match unders.len() {
            // over at both crossings: `lo` enters the first, `hi` the second
            0 => {
                d_in[passages[0].0] = Some(tuples[passages[0].0][3] == lo);
                d_in[passages[1].0] = Some(tuples[passages[1].0][3] == hi);
            }
            // the over passage runs lo -> hi, so `hi` enters the under one
            1 => {
                if tuples[unders[0]][0] != hi {
                    return Err(DiagramError::Orientation { crossing: unders[0] });
                }
                let q = passages.iter().find(|x| !x.1).unwrap().0;
                d_in[q] = Some(tuples[q][3] == lo);
            }
            _ => {
                if tuples[unders[0]][0] == tuples[unders[1]][0] {
                    return Err(DiagramError::Orientation { crossing: unders[1] });
                }
            }
        }
    }
    let signs: Vec<i8> = d_in.iter().map(|x| if x.unwrap() { 1 } else { -1 }).collect();

    let free = match declared {
        Some(k) if k < ranges.len() => {
            return Err(DiagramError::ComponentCount { declared: k, needed: ranges.len() })
        }
        Some(k) => k - ranges.len(),
        None if n == 0 => 1,
        None => 0,
    };
    let d = LinkDiagram::from_parts(tuples, ranges, free, signs);
    let fc = faces::orbit_count(&d);
    let expected = n + 2 * d.pieces().len();
    if n > 0 && fc != expected {
        return Err(DiagramError::NonPlanar { faces: fc, expected });
    }
    Ok(d)
}
