//! Small table of named knots and links given as braid words.

use alloc::vec::Vec;

use crate::diagram::{braid_closure, LinkDiagram};

/// `(name, strands, word)`.
pub const BRAIDS: &[(&str, usize, &[i64])] = &[
    ("unknot", 1, &[]),
    ("hopf", 2, &[1, 1]),
    ("3_1", 2, &[1, 1, 1]),
    ("4_1", 3, &[1, -2, 1, -2]),
    ("L4a1", 2, &[1, 1, 1, 1]),
    ("5_1", 2, &[1, 1, 1, 1, 1]),
    ("5_2", 3, &[1, 1, 1, 2, -1, 2]),
    ("6_1", 4, &[1, 1, 2, -1, -3, 2, -3]),
    ("6_2", 3, &[1, 1, 1, -2, 1, -2]),
    ("6_3", 3, &[1, 1, -2, 1, -2, -2]),
    ("borromean", 3, &[1, -2, 1, -2, 1, -2]),
    ("7_1", 2, &[1, 1, 1, 1, 1, 1, 1]),
    ("7_2", 4, &[1, 1, 1, 2, -1, 2, 3, -2, 3]),
    ("7_3", 3, &[1, 1, 1, 1, 1, 2, -1, 2]),
    ("7_4", 4, &[1, 1, 2, -1, 2, 2, 3, -2, 3]),
    ("7_5", 3, &[1, 1, 1, 1, 2, -1, 2, 2]),
    ("7_6", 4, &[1, 1, -2, 1, 3, -2, 3]),
    ("7_7", 4, &[1, -2, 1, -2, 3, -2, 3]),
    ("8_19", 3, &[1, 1, 1, 2, 1, 1, 1, 2]),
    ("8_20", 3, &[1, 1, 1, -2, -1, -1, -1, -2]),
    ("9_42", 4, &[1, 1, 1, -2, -1, -1, 3, -2, 3]),
];

/// Diagram of a catalog entry.
pub fn named(name: &str) -> Option<LinkDiagram> {
    BRAIDS.iter().find(|e| e.0 == name).map(|&(_, n, w)| braid_closure(n, w).expect("catalog words are valid"))
}

/// Every catalog entry with its diagram.
pub fn all() -> Vec<(&'static str, LinkDiagram)> {
    BRAIDS.iter().map(|&(name, n, w)| (name, braid_closure(n, w).expect("catalog words are valid"))).collect()
}
