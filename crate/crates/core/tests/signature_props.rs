mod common;

use knotinv_core::diagram::Smoothing;
use knotinv_core::goeritz::signature_and_nullity;
use knotinv_core::poly::conway_via_skein;
use knotinv_core::realroots::{isolate_roots, QPoly};
use knotinv_core::seifert::seifert_matrix;
use knotinv_core::signature::{signature_function, tl_signature, UnitDirection};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn direction() -> impl Strategy<Value = UnitDirection> {
    (0i64..=6, -6i64..=6).prop_filter_map("nonzero", |(a, b)| UnitDirection::new(a, b).ok())
}

fn sigma(d: &knotinv_core::diagram::LinkDiagram, psi: UnitDirection) -> i64 {
    tl_signature(&seifert_matrix(d).unwrap().v, psi).sigma
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn mirror_negates(d in common::connected(8), psi in direction()) {
        prop_assert_eq!(sigma(&d.mirror(), psi), -sigma(&d, psi));
    }

    #[test]
    fn conjugate_direction_agrees(d in common::connected(8), psi in direction()) {
        prop_assert_eq!(sigma(&d, psi.conj()), sigma(&d, psi));
    }

    #[test]
    fn classical_direction_matches_goeritz(d in common::connected(9)) {
        prop_assert_eq!(sigma(&d, UnitDirection::one()), signature_and_nullity(&d).sigma);
    }

    #[test]
    fn crossing_changes_are_monotone(
        d in common::connected(8),
        pick in any::<prop::sample::Index>(),
        psi in direction(),
    ) {
        let p = pick.index(d.crossing_count());
        let other = d.crossing_change(p).unwrap();
        let (plus, minus) = if d.sign(p) > 0 { (&d, &other) } else { (&other, &d) };
        prop_assume!(plus.is_connected_projection() && minus.is_connected_projection());
        let jump = sigma(plus, psi) - sigma(minus, psi);
        prop_assert!((-2..=0).contains(&jump), "sigma(L+) - sigma(L-) = {}", jump);
        let zero = d.smooth(p, Smoothing::Oriented).unwrap();
        if zero.is_connected_projection() {
            prop_assert!((sigma(plus, psi) - sigma(&zero, psi)).abs() <= 1);
        }
    }

    #[test]
    fn knot_signature_functions(d in common::knot(9)) {
        let v = seifert_matrix(&d).unwrap().v;
        let f = signature_function(&v).unwrap();
        prop_assert_eq!(f.classical, sigma(&d, UnitDirection::one()));
        prop_assert_eq!(f.interval_values[0], 0);
        prop_assert_eq!(*f.interval_values.last().unwrap(), f.classical);
        for (k, s) in f.samples.iter().enumerate() {
            prop_assert_eq!(tl_signature(&v, *s).sigma, f.interval_values[k]);
        }
        for pair in f.interval_values.windows(2) {
            prop_assert!((pair[0] - pair[1]).abs() <= 2);
        }
    }

    #[test]
    fn milnor_constancy(d in common::knot(9)) {
        // z = 2i sin(theta): the roots that matter satisfy z^2 in [-4, 0].
        let conway = conway_via_skein(&d);
        let deg = conway.max_degree().unwrap_or(0).max(0) as usize;
        let q: Vec<BigInt> = (0..=deg / 2).map(|j| conway.coeff(2 * j as i64) * BigInt::from(-4).pow(j as u32)).collect();
        let width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 20));
        let roots = isolate_roots(&QPoly::from_ints(&q), &BigRational::zero(), &BigRational::one(), &width);
        if roots.is_empty() {
            let f = signature_function(&seifert_matrix(&d).unwrap().v).unwrap();
            prop_assert!(f.interval_values.iter().all(|&s| s == 0));
        }
    }
}
