use proptest::prelude::*;

use super::*;
use crate::intform::{FormClass, Parity};

const TR: KnotSpec = KnotSpec::TrefoilRight;
const TL: KnotSpec = KnotSpec::TrefoilLeft;
const F8: KnotSpec = KnotSpec::FigureEight;

#[test]
fn table_shape() {
    let t = surgery_table();
    assert_eq!(t.len(), 5);
    assert_eq!(t[2].presentations.len(), 2);
    assert!(t.iter().all(|r| r.lambda_coefficient.abs() == 1));
    assert_eq!((t[0].k1, t[0].k2), (BaseKnot::TrefoilRight, BaseKnot::TrefoilRight));
    assert_eq!((t[4].k1, t[4].k2), (BaseKnot::FigureEight, BaseKnot::FigureEight));
}

#[test]
fn casson_surgery_examples() {
    for n in -12..=12 {
        assert_eq!(casson_surgery(&KnotSpec::double(BaseKnot::TrefoilRight, n, Sign::Plus), Sign::Plus), -n);
        assert_eq!(casson_surgery(&KnotSpec::double(BaseKnot::TrefoilRight, n, Sign::Minus), Sign::Minus), -n);
    }
    for eps in [Sign::Plus, Sign::Minus] {
        assert_eq!(casson_surgery(&KnotSpec::Unknot, eps), 0);
    }
}

#[test]
fn casson_of_mn_examples() {
    assert_eq!(casson_of_mn(&TR, &TR, 5), Ok(-5));
    assert_eq!(casson_of_mn(&F8, &F8, 7), Ok(7));
    assert_eq!(casson_of_mn(&F8, &TR, -4), Ok(-4));
    assert!(matches!(casson_of_mn(&TL, &TL, 3), Err(ResultsError::CombinationNotCovered { .. })));
    let d = KnotSpec::double(BaseKnot::Unknot, 1, Sign::Plus);
    assert!(matches!(casson_of_mn(&d, &TR, 3), Err(ResultsError::CombinationNotCovered { .. })));
}

#[test]
fn rows_follow_lambda_column() {
    for row in surgery_table() {
        for n in -12..=12 {
            for v in row.lambdas(n) {
                assert_eq!(v, row.lambda_coefficient * n, "row {} n {n}", row.row);
            }
        }
    }
}

#[test]
fn mirrored_query_reaches_table() {
    let (k1, k2, m) = mirrored_query(BaseKnot::TrefoilLeft, BaseKnot::TrefoilLeft, 3);
    assert_eq!(-casson_of_mn(&k1.knot(), &k2.knot(), m).unwrap(), -3);
}

#[test]
fn rohlin_examples() {
    assert_eq!(rohlin_of_mn(&TR, &TR, 3), Ok(1));
    assert_eq!(rohlin_of_mn(&TR, &TR, 4), Ok(0));
    assert_eq!(rohlin_of_mn(&TR, &TR, -3), Ok(1));
    for row in surgery_table() {
        assert_eq!(rohlin_of_mn(&row.k1.knot(), &row.k2.knot(), 0), Ok(0));
    }
}

#[test]
fn verdict_examples() {
    let v = bounding_verdict(&TR, &TR, 7).unwrap();
    assert_eq!(v, Verdict { value: VerdictValue::DoesNotBound, citations: vec![Citation::CorG] });
    assert_eq!(v.to_string(), "DoesNotBound (corG)");
    let v = bounding_verdict(&TR, &TR, 6).unwrap();
    assert_eq!(v, Verdict { value: VerdictValue::Bounds, citations: vec![Citation::CorM] });
    let v = bounding_verdict(&F8, &TR, 6).unwrap();
    assert_eq!(v, Verdict { value: VerdictValue::Bounds, citations: vec![Citation::Cor2] });
    let v = bounding_verdict(&TR, &TR, 0).unwrap();
    assert_eq!(v.value, VerdictValue::DoesNotBound);
    assert_eq!(v.citations, vec![Citation::AkbulutFact, Citation::TangeFact]);
    let v = bounding_verdict(&TR, &TR, -3).unwrap();
    assert_eq!(v.citations, vec![Citation::CorG, Citation::TangeFact]);
    let v = bounding_verdict(&TR, &TR, 4).unwrap();
    assert_eq!(v, Verdict { value: VerdictValue::Unknown, citations: vec![] });
    assert_eq!(v.to_string(), "Unknown");
    assert_eq!(bounding_verdict(&TR, &F8, 6).unwrap().value, VerdictValue::Unknown);
}

#[test]
fn verdicts_never_bound_for_odd_n() {
    for row in surgery_table() {
        for n in (-25..=25).filter(|n| n % 2 != 0) {
            let v = bounding_verdict(&row.k1.knot(), &row.k2.knot(), n).unwrap();
            assert_eq!(v.value, VerdictValue::DoesNotBound);
            assert!(v.citations.contains(&Citation::CorG));
        }
    }
}

#[test]
fn appendix_examples() {
    let r = appendix_report(3).unwrap();
    assert_eq!((r.index_b, r.parity_b, r.mu), (8, Parity::Even, 1));
    let r = appendix_report(4).unwrap();
    assert_eq!((r.index_a, r.parity_a, r.mu), (0, Parity::Even, 0));
    let r = appendix_report(0).unwrap();
    assert_eq!((r.mu, r.mu_via_casson), (0, 0));
}

#[test]
fn appendix_range() {
    for n in -12..=12 {
        let r = appendix_report(n).unwrap();
        assert_eq!(r.mu, r.mu_via_casson);
        assert_eq!(r.mu as i64, n.rem_euclid(2));
        assert_eq!((r.index_a, r.index_b), (0, 8));
        assert_eq!(r.parity_a == Parity::Even, n % 2 == 0);
        assert_eq!(r.parity_b == Parity::Even, n % 2 != 0);
    }
}

#[test]
fn union_classification() {
    for n in [-3, 0, 6] {
        let c = double_surgery_union_classification(n).unwrap();
        assert_eq!(c, FormClass::DefiniteDiagonal { sign: Sign::Plus, rank: 2 });
    }
}

#[test]
fn zero_twist_agreement() {
    assert_eq!(zero_twist_lambdas(0), [0, 0, 0]);
    assert!(zero_twist_presentations_agree());
    assert_eq!(zero_twist_lambdas(1), [1, 0, 0]);
}

#[test]
fn crossing_change_suite_ranges() {
    let r = crossing_change_suite(-12, 12).unwrap();
    assert!(r.passed());
    assert_eq!(r.checked, 25 * 4);
    assert!(crossing_change_suite(0, 0).unwrap().passed());
    assert_eq!(crossing_change_suite(1, 0).unwrap().checked, 0);
}

#[test]
fn crossing_change_suite_reports_witness() {
    let corrupt = |k: &KnotSpec| if *k == KnotSpec::double(BaseKnot::FigureEight, 2, Sign::Minus) { 0 } else { casson_knot(k) };
    let r = crossing_change_suite_with(-3, 3, corrupt).unwrap();
    assert_eq!(r.failures.len(), 1);
    let w = &r.failures[0];
    assert_eq!(w.knot, KnotSpec::double(BaseKnot::FigureEight, 2, Sign::Minus));
    assert_eq!((w.lambda_plus, w.lambda_minus, w.lk), (0, 0, -2));
}

#[test]
fn records_serialize() {
    let rec = TableRecord::evaluate(&surgery_table()[0], 6).unwrap();
    let json = serde_json::to_string(&rec).unwrap();
    assert!(json.contains("\"lambda\":-6"), "{json}");
    assert!(json.contains("\"citations\":[\"corM\"]"), "{json}");
    let a = AppendixRecord::from(&appendix_report(3).unwrap());
    let json = serde_json::to_string(&a).unwrap();
    assert!(json.contains("\"indexB\":8"), "{json}");
    assert!(json.contains("\"schema\":1"), "{json}");
}

proptest! {
    #[test]
    fn presentations_agree(n in -10_000i64..10_000) {
        for row in surgery_table() {
            prop_assert_eq!(row.lambda(n).unwrap(), row.lambda_coefficient * n);
        }
    }

    #[test]
    fn surgery_routes_agree(c in prop::sample::select(BaseKnot::ALL.to_vec()), n in -500i64..500, plus in any::<bool>(), eps_plus in any::<bool>()) {
        let hook = if plus { Sign::Plus } else { Sign::Minus };
        let eps = if eps_plus { Sign::Plus } else { Sign::Minus };
        let k = KnotSpec::double(c, n, hook);
        prop_assert_eq!(casson_surgery(&k, eps), eps.as_i64() * casson_knot(&k));
        prop_assert_eq!(casson_surgery(&c.knot(), eps), eps.as_i64() * casson_knot(&c.knot()));
    }
}
