mod common;

use knotinv_core::diagram::{parse_pd, turks_head, LinkDiagram, Smoothing};
use knotinv_core::goeritz::link_determinant;
use knotinv_core::laurent::LaurentPoly;
use knotinv_core::poly::{
    conway_at_minus_two_i, conway_via_skein, determinant_via_bracket, kauffman_bracket, potential_omega, turks_head_det,
};
use knotinv_core::ring::Ring;
use knotinv_core::seifert::seifert_matrix;
use num_bigint::BigInt;
use proptest::prelude::*;

const CAP: usize = 16;

/// `(-A^3)^(-w) <D>`, unchanged by every Reidemeister move.
fn normalized_bracket(d: &LinkDiagram) -> LaurentPoly {
    let w = d.writhe();
    let b = kauffman_bracket(d, CAP).unwrap().shift(-3 * w);
    if w % 2 == 0 { b } else { b.neg() }
}

#[test]
fn turks_head_conway_modulus() {
    for n in 2..=7usize {
        let c = conway_via_skein(&turks_head(n));
        let det = conway_at_minus_two_i(&c);
        assert_eq!(det.norm(), turks_head_det(n as u32).pow(2), "n = {}", n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn three_determinants_agree(d in common::diagram(9)) {
        let goeritz = link_determinant(&d);
        prop_assert_eq!(&determinant_via_bracket(&d, CAP).unwrap(), &goeritz);
        prop_assert_eq!(&conway_at_minus_two_i(&conway_via_skein(&d)), &goeritz);
    }

    #[test]
    fn potential_is_symmetric(d in common::connected(9)) {
        let omega = potential_omega(&seifert_matrix(&d).unwrap().v);
        prop_assert_eq!(omega.invert_var().negate_var(), omega);
    }

    #[test]
    fn kink_multiplies_bracket(d in common::connected(7), positive in any::<bool>()) {
        let kink = parse_pd(if positive { "X(2,2,1,1)" } else { "X(2,1,1,2)" }).unwrap();
        let kinked = d.connected_sum(&kink, 1, 1).unwrap();
        let factor = LaurentPoly::monomial(if positive { 3 } else { -3 }, -1);
        prop_assert_eq!(kauffman_bracket(&kinked, CAP).unwrap(), kauffman_bracket(&d, CAP).unwrap().mul(&factor));
    }

    #[test]
    fn simplify_keeps_normalized_bracket(d in common::diagram(9)) {
        prop_assert_eq!(normalized_bracket(&d.simplify()), normalized_bracket(&d));
    }

    #[test]
    fn conway_skein_relation(d in common::diagram(8), pick in any::<prop::sample::Index>()) {
        let p = pick.index(d.crossing_count());
        let other = d.crossing_change(p).unwrap();
        let (plus, minus) = if d.sign(p) > 0 { (&d, &other) } else { (&other, &d) };
        let zero = d.smooth(p, Smoothing::Oriented).unwrap();
        let lhs = conway_via_skein(plus).sub(&conway_via_skein(minus));
        prop_assert_eq!(lhs, conway_via_skein(&zero).shift(1));
    }
}

#[test]
fn lone_positive_kink() {
    let kink = parse_pd("X(2,2,1,1)").unwrap();
    let b = kauffman_bracket(&kink, CAP).unwrap();
    assert_eq!(b, LaurentPoly::monomial(3, BigInt::from(-1)));
}
