mod common;

use knotinv_core::diagram::{pretzel, torus2};
use knotinv_core::matrix::IntMatrix;
use knotinv_core::poly::{conway_via_skein, potential_bundle, potential_omega};
use knotinv_core::seifert::{seifert_data, seifert_matrix};
use knotinv_core::signature::classical_signature;
use num_bigint::BigInt;
use proptest::prelude::*;

fn negated(v: &IntMatrix) -> IntMatrix {
    v.scale(&BigInt::from(-1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conway_matches_skein(d in common::connected(9)) {
        let sm = seifert_matrix(&d).unwrap();
        prop_assert_eq!(potential_bundle(&sm.v).unwrap().conway.poly, conway_via_skein(&d));
    }

    #[test]
    fn rank_is_first_betti_number(d in common::connected(9)) {
        let sm = seifert_matrix(&d).unwrap();
        let sd = seifert_data(&d).unwrap();
        prop_assert_eq!(sm.v.dim() + sd.s, d.crossing_count() + 1);
        prop_assert_eq!(sm.basis.len(), sm.v.dim());
    }

    #[test]
    fn knots_have_unimodular_skew_part(d in common::knot(9)) {
        let v = seifert_matrix(&d).unwrap().v;
        let skew = v.sub(&v.transpose());
        prop_assert_eq!(skew.transpose(), negated(&skew));
        prop_assert_eq!(skew.det_bareiss(), BigInt::from(1));
    }

    #[test]
    fn mirror_negates_the_form(d in common::connected(8)) {
        let v = seifert_matrix(&d).unwrap().v;
        let w = seifert_matrix(&d.mirror()).unwrap().v;
        prop_assert_eq!(potential_omega(&w), potential_omega(&negated(&v)));
        prop_assert_eq!(classical_signature(&w), -classical_signature(&v));
    }

    #[test]
    fn diagonal_is_minus_half_the_traversed_signs(d in common::connected(9)) {
        let sm = seifert_matrix(&d).unwrap();
        for (k, cycle) in sm.basis.iter().enumerate() {
            let twice: i64 = cycle.iter().map(|&(p, _)| d.sign(p) as i64).sum();
            prop_assert_eq!(BigInt::from(-twice), sm.v.get(k, k) * 2);
        }
    }

    #[test]
    fn connected_sums_with_pretzels(
        cols in prop::collection::vec((1i64..=3, any::<bool>()), 1..=3),
        k in 2i64..=4,
        e in any::<prop::sample::Index>(),
    ) {
        let cols: Vec<i64> = cols.into_iter().map(|(c, neg)| if neg { -c } else { c }).collect();
        let p = pretzel(&cols).unwrap();
        let t = torus2(k);
        let s = p.connected_sum(&t, 1, 1 + e.index(t.edge_count()) as u32).unwrap();
        for j in 0..s.component_count() {
            let r = s.reverse_component(j).unwrap();
            if r.is_connected_projection() {
                let v = seifert_matrix(&r).unwrap().v;
                prop_assert_eq!(potential_bundle(&v).unwrap().conway.poly, conway_via_skein(&r));
            }
        }
    }
}
