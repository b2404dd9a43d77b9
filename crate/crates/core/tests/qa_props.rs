mod common;

use knotinv_core::diagram::{parse_pd, LinkDiagram};
use knotinv_core::poly::nugatory_crossings;
use knotinv_core::qa::{is_qa_crossing, qa_certify, QaStatus};
use proptest::prelude::*;

/// Rewrites the PD code with its crossings listed in another order.
fn shuffled(d: &LinkDiagram, order: &[usize]) -> LinkDiagram {
    let mut text = format!("components={}\n", d.component_count());
    for &p in order {
        let [a, b, c, e] = d.tuples()[p];
        text.push_str(&format!("X({},{},{},{})\n", a, b, c, e));
    }
    parse_pd(&text).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn larger_budgets_keep_certificates(d in common::connected(7), depth in 1usize..=4, nodes in 1usize..=200) {
        let small = qa_certify(&d, depth, nodes).unwrap();
        let large = qa_certify(&d, depth + 2, nodes * 4).unwrap();
        if small.status == QaStatus::Certified {
            prop_assert_eq!(large.status, QaStatus::Certified);
            prop_assert!(large.qacti_upper <= small.qacti_upper);
        }
    }

    #[test]
    fn certificates_are_sound(d in common::connected(8)) {
        let r = qa_certify(&d, 8, 5_000).unwrap();
        if let Some(c) = &r.certificate {
            prop_assert!(c.verify());
            prop_assert!(r.det >= 1u32.into());
            prop_assert!(r.qacti_lower <= c.depth());
            prop_assert!(num_bigint::BigInt::from(c.depth()) <= r.det_bound_upper);
        }
    }

    #[test]
    fn crossing_order_does_not_matter(d in common::connected(7), order in any::<u64>()) {
        let n = d.crossing_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = order | 1;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = qa_certify(&d, 10, 20_000).unwrap();
        let b = qa_certify(&shuffled(&d, &perm), 10, 20_000).unwrap();
        prop_assume!(!a.budget_exhausted && !b.budget_exhausted);
        prop_assert_eq!(a.status, b.status);
        prop_assert_eq!(a.qacti_upper, b.qacti_upper);
    }

    #[test]
    fn reduced_alternating_crossings_are_qa(d in common::connected(9)) {
        prop_assume!(d.is_alternating());
        let nugatory = nugatory_crossings(&d);
        for p in (0..d.crossing_count()).filter(|p| !nugatory.contains(p)) {
            let (ok, dets) = is_qa_crossing(&d, p).unwrap();
            prop_assert!(ok, "crossing {} of {}: {:?}", p, d.to_pd_string(), dets);
        }
    }
}
