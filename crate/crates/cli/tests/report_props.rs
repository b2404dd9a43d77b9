use knotinv_cli::report::{InputEcho, InvariantReport};
use knotinv_cli::{construct, invariants};
use knotinv_core::diagram::braid_closure;
use num_bigint::BigInt;
use proptest::prelude::*;

fn word() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (2usize..=4).prop_flat_map(|n| {
        let letter = (1..n as i64, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
        (Just(n), prop::collection::vec(letter, 0..=8))
    })
}

fn report(n: usize, w: &[i64]) -> InvariantReport {
    let d = braid_closure(n, w).unwrap();
    let echo = InputEcho { format: "braid".into(), text: format!("{:?}", w), pd: d.to_pd_string() };
    invariants(&d, echo, 14).unwrap()
}

proptest! {
    #[test]
    fn json_round_trip((n, w) in word()) {
        let r = report(n, &w);
        let text = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<InvariantReport>(&text).unwrap(), r);
    }

    #[test]
    fn determinant_is_consistent((n, w) in word()) {
        let r = report(n, &w);
        let (re, im) = (&r.determinant.re.0, &r.determinant.im.0);
        prop_assert!(re == &BigInt::from(0) || im == &BigInt::from(0));
        prop_assert_eq!(&r.det_abs.0, &(re + im).magnitude().clone().into());
        if r.det_abs.0 != BigInt::from(0) {
            // Det = i^sigma |Det|
            let expected = match r.signature.rem_euclid(4) {
                0 => (r.det_abs.0.clone(), BigInt::from(0)),
                1 => (BigInt::from(0), r.det_abs.0.clone()),
                2 => (-r.det_abs.0.clone(), BigInt::from(0)),
                _ => (BigInt::from(0), -r.det_abs.0.clone()),
            };
            prop_assert_eq!((re.clone(), im.clone()), expected);
        }
    }
}

#[test]
fn big_integers_stay_exact() {
    let d = construct("turkshead", &[8]).unwrap();
    let echo = InputEcho { format: "pd".into(), text: String::new(), pd: d.to_pd_string() };
    let mut r = invariants(&d, echo, 0).unwrap();
    assert!(r.bracket.is_none());
    assert_eq!(r.det_abs.0, BigInt::from(2205));
    r.det_abs.0 = BigInt::from(u64::MAX) * BigInt::from(u64::MAX);
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.contains(&format!("\"det_abs\":{},", r.det_abs.0)));
    assert_eq!(serde_json::from_str::<InvariantReport>(&text).unwrap(), r);
}

#[test]
fn conway_matches_the_skein_oracle() {
    use knotinv_core::poly::conway_via_skein;
    for (n, w) in [(2, vec![1, 1]), (3, vec![1, -2, 1, -2]), (3, vec![1, 1]), (4, vec![1, 3, -2, 1, 3])] {
        let d = braid_closure(n, &w).unwrap();
        assert_eq!(report(n, &w).conway.terms, knotinv_cli::report::Poly::new(&conway_via_skein(&d), knotinv_core::laurent::Var::Z).terms);
    }
}
