//! Shared proptest strategies: random braid closures and their variants.

#![allow(dead_code)]

use knotinv_core::diagram::{braid_closure, LinkDiagram};
use proptest::prelude::*;

/// `(strands, word)` with 2..=4 strands and 1..=max_len letters.
pub fn braid(max_len: usize) -> impl Strategy<Value = (usize, Vec<i64>)> {
    (2usize..=4).prop_flat_map(move |n| {
        let letter = (1..n as i64, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
        (Just(n), prop::collection::vec(letter, 1..=max_len))
    })
}

/// Braid closure, optionally mirrored and with one component reversed.
pub fn diagram(max_len: usize) -> impl Strategy<Value = LinkDiagram> {
    (braid(max_len), any::<bool>(), any::<u8>()).prop_map(|((n, w), mirror, rev)| {
        let mut d = braid_closure(n, &w).expect("valid word");
        if mirror {
            d = d.mirror();
        }
        let comps = d.component_count();
        if rev % 2 == 1 && comps > 0 {
            if let Ok(r) = d.reverse_component(rev as usize % comps) {
                d = r;
            }
        }
        d
    })
}

/// Diagrams whose projection is connected.
pub fn connected(max_len: usize) -> impl Strategy<Value = LinkDiagram> {
    diagram(max_len).prop_filter("connected projection", |d| d.is_connected_projection() && d.crossing_count() > 0)
}

/// Connected knot diagrams.
pub fn knot(max_len: usize) -> impl Strategy<Value = LinkDiagram> {
    connected(max_len).prop_filter("one component", |d| d.component_count() == 1)
}
