//! Text formats for braid words and signed plane graphs.
//!
//! Braids: `braid <strands>: <i1> <i2> ...` with signed nonzero generator
//! indices. Graphs: a `v <count>` line, then `e <u> <v> <+|->` lines
//! (edge ids count from 0 in order of appearance) and optional
//! `rot <v>: <edge ids>` lines. `#` starts a comment.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{GraphError, SignedPlanarGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormatError {
    /// Malformed text on a 1-based line.
    Syntax { line: usize, msg: &'static str },
    Graph(GraphError),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Syntax { line, msg } => write!(f, "line {}: {}", line, msg),
            FormatError::Graph(e) => write!(f, "{}", e),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// A braid word together with its strand count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub word: Vec<i64>,
}

impl BraidWord {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut found: Option<BraidWord> = None;
        for (n, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            let err = |msg| FormatError::Syntax { line: n + 1, msg };
            if found.is_some() {
                return Err(err("text after the braid line"));
            }
            let rest = line.strip_prefix("braid").ok_or(err("expected `braid <strands>: ...`"))?;
            let (head, letters) = rest.split_once(':').ok_or(err("missing `:` after the strand count"))?;
            let strands: usize = head.trim().parse().map_err(|_| err("strand count must be a positive integer"))?;
            if strands == 0 {
                return Err(err("strand count must be a positive integer"));
            }
            let mut word = Vec::new();
            for tok in letters.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
                let g: i64 = tok.parse().map_err(|_| err("generators are signed integers"))?;
                if g == 0 || g.unsigned_abs() as usize >= strands {
                    return Err(err("generator index out of range"));
                }
                word.push(g);
            }
            found = Some(BraidWord { strands, word });
        }
        found.ok_or(FormatError::Syntax { line: 1, msg: "no braid line" })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid {}:", self.strands)?;
        for g in &self.word {
            write!(f, " {}", g)?;
        }
        Ok(())
    }
}

/// Parses graph text. The rotation system is kept only if every vertex
/// has a `rot` line; a partial one is an error.
pub fn parse_graph(text: &str) -> Result<SignedPlanarGraph, FormatError> {
    let mut count: Option<usize> = None;
    let mut edges = Vec::new();
    let mut rot: Vec<Option<Vec<usize>>> = Vec::new();
    let mut rot_lines = 0usize;
    let mut last = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        last = n + 1;
        let err = |msg| FormatError::Syntax { line: n + 1, msg };
        let num = |t: Option<&str>| -> Result<usize, FormatError> {
            t.ok_or(err("missing number"))?.parse().map_err(|_| err("expected a non-negative integer"))
        };
        if let Some(rest) = line.strip_prefix("rot") {
            let nv = count.ok_or(err("`v <count>` must come first"))?;
            let (v, ids) = rest.split_once(':').ok_or(err("expected `rot <v>: <edge ids>`"))?;
            let v = num(Some(v.trim()))?;
            if v >= nv {
                return Err(err("vertex out of range"));
            }
            if rot[v].is_some() {
                return Err(err("repeated rotation line"));
            }
            let ids = ids.split_whitespace().map(|t| num(Some(t))).collect::<Result<Vec<_>, _>>()?;
            rot[v] = Some(ids);
            rot_lines += 1;
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("v") => {
                if count.is_some() {
                    return Err(err("repeated `v` line"));
                }
                let nv = num(toks.next())?;
                count = Some(nv);
                rot = vec![None; nv];
            }
            Some("e") => {
                count.ok_or(err("`v <count>` must come first"))?;
                let u = num(toks.next())?;
                let v = num(toks.next())?;
                let s = match toks.next() {
                    Some("+") | Some("+1") => 1,
                    Some("-") | Some("-1") => -1,
                    _ => return Err(err("edge sign must be + or -")),
                };
                edges.push((u, v, s));
            }
            _ => return Err(err("expected `v`, `e` or `rot`")),
        }
        if toks.next().is_some() {
            return Err(err("trailing tokens"));
        }
    }
    let nv = count.ok_or(FormatError::Syntax { line: last.max(1), msg: "missing `v <count>` line" })?;
    if rot_lines == 0 {
        return SignedPlanarGraph::new(nv, edges).map_err(FormatError::Graph);
    }
    if rot_lines < nv {
        let v = rot.iter().position(|r| r.is_none()).unwrap_or(0);
        return Err(FormatError::Graph(GraphError::BadRotation { vertex: v }));
    }
    let rotation = rot.into_iter().map(|r| r.unwrap_or_default()).collect();
    SignedPlanarGraph::with_rotation(nv, edges, rotation).map_err(FormatError::Graph)
}

/// Writes graph text that [`parse_graph`] reads back to the same graph.
pub fn graph_to_text(g: &SignedPlanarGraph) -> String {
    let mut out = format!("v {}\n", g.vertex_count);
    for &(u, v, s) in &g.edges {
        out.push_str(&format!("e {} {} {}\n", u, v, if s > 0 { '+' } else { '-' }));
    }
    if let Some(rot) = &g.rotation {
        for (v, ids) in rot.iter().enumerate() {
            out.push_str(&format!("rot {}:", v));
            for i in ids {
                out.push_str(&format!(" {}", i));
            }
            out.push('\n');
        }
    }
    out
}
