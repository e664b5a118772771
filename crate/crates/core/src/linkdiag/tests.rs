use proptest::prelude::*;

use super::*;

const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const HOPF: &str = "X[1,3,2,4] X[3,1,4,2]";

fn lk(code: &PDCode) -> i64 {
    trace_components(code).unwrap().linking_number(0, 1).unwrap()
}

#[test]
fn parse_examples() {
    let code = parse_pd(HOPF).unwrap();
    assert_eq!(code.crossings.len(), 2);
    let labels: std::collections::BTreeSet<_> = code.labels().collect();
    assert_eq!(labels.into_iter().collect::<Vec<_>>(), [1, 2, 3, 4]);
    assert!(parse_pd("").unwrap().is_empty());
    assert!(parse_pd("  # nothing here\n").unwrap().is_empty());
}

#[test]
fn parse_tolerates_spacing_and_comments() {
    let code = parse_pd("X[1, 3, 2, 4]   # first\nX+[ 3,1,4,2 ]").unwrap();
    assert_eq!(code.crossings[1].sign, Some(Sign::Plus));
    assert_eq!(code.to_string(), "X[1,3,2,4] X+[3,1,4,2]");
}

#[test]
fn parse_errors() {
    assert_eq!(
        parse_pd("X[1,2,3]"),
        Err(LinkError::BadArity { token: "X[1,2,3]".into(), arity: 3 })
    );
    assert_eq!(parse_pd("Y[1,2,3,4]"), Err(LinkError::MalformedToken { token: "Y[1,2,3,4]".into() }));
    assert_eq!(parse_pd("X[1,2,a,4]"), Err(LinkError::MalformedToken { token: "X[1,2,a,4]".into() }));
    assert_eq!(parse_pd("X[1,2,3,4"), Err(LinkError::MalformedToken { token: "X[1,2,3,4".into() }));
    assert_eq!(
        parse_pd("X[1,3,2,4] X[3,1,4,5]"),
        Err(LinkError::EdgeLabelCountViolation { label: 2, count: 1 })
    );
    assert_eq!(
        parse_pd("Loop[1] X[1,3,2,4] X[3,1,4,2]"),
        Err(LinkError::EdgeLabelCountViolation { label: 1, count: 4 })
    );
}

#[test]
fn component_counts() {
    assert_eq!(trace_components(&parse_pd(TREFOIL).unwrap()).unwrap().component_count(), 1);
    assert_eq!(trace_components(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap().component_count(), 1);
    assert_eq!(trace_components(&parse_pd(HOPF).unwrap()).unwrap().component_count(), 2);

    let shifted = parse_pd("X[11,14,12,15] X[13,16,14,11] X[15,12,16,13]").unwrap();
    let union = parse_pd(HOPF).unwrap().disjoint_union(&shifted).unwrap();
    assert_eq!(trace_components(&union).unwrap().component_count(), 3);
}

#[test]
fn knot_writhes() {
    // the usual 3_1 code is the left-handed trefoil and the amphichiral figure eight
    assert_eq!(trace_components(&parse_pd(TREFOIL).unwrap()).unwrap().writhe(), -3);
    assert_eq!(trace_components(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap().writhe(), 0);
}

#[test]
fn hopf_link_is_positive() {
    let d = trace_components(&parse_pd(HOPF).unwrap()).unwrap();
    assert!(d.crossings.iter().all(|c| c.sign == Sign::Plus));
    assert_eq!(d.linking_number(0, 1), Ok(1));
    assert_eq!(d.linking_number(1, 0), Ok(1));
    assert_eq!(d.components, vec![vec![1, 2], vec![3, 4]]);
}

#[test]
fn split_link_has_zero_linking() {
    let d = trace_components(&parse_pd("Loop[1] Loop[2]").unwrap()).unwrap();
    assert_eq!(d.linking_number(0, 1), Ok(0));
    let code = parse_pd(TREFOIL).unwrap().disjoint_union(&parse_pd("Loop[9]").unwrap()).unwrap();
    assert_eq!(lk(&code), 0);
}

#[test]
fn linking_errors() {
    let d = trace_components(&parse_pd(HOPF).unwrap()).unwrap();
    assert_eq!(d.linking_number(0, 2), Err(LinkError::UnknownComponent { id: 2, count: 2 }));
    assert_eq!(d.linking_number(1, 1), Err(LinkError::SameComponent { id: 1 }));

    let mut odd = d.clone();
    odd.crossings.pop();
    assert_eq!(odd.linking_number(0, 1), Err(LinkError::OddMixedSignSum { sum: 1 }));
}

#[test]
fn explicit_signs() {
    // the over-only component of a Whitehead-style clasp is oriented by X±
    let agree = parse_pd("X+[1,3,2,4] X+[3,1,4,2]").unwrap();
    assert_eq!(lk(&agree), 1);
    let conflict = parse_pd("X-[1,3,2,4] X[3,1,4,2]").unwrap();
    assert_eq!(trace_components(&conflict), Err(LinkError::InconsistentOrientation { crossing: 0 }));
}

#[test]
fn over_only_component_uses_label_order() {
    // component {5,6,7} never passes under; labels increase along 5 → 6 → 7
    let code = parse_pd("X[1,6,2,5] X[2,7,3,6] X[3,5,1,7]").unwrap();
    let d = trace_components(&code).unwrap();
    assert_eq!(d.components, vec![vec![1, 2, 3], vec![5, 6, 7]]);
    assert!(d.crossings.iter().all(|c| c.sign == Sign::Plus && c.over == 1));

    // an explicit sign beats the label rule and orients the whole strand
    let code = parse_pd("X-[1,6,2,5] X[2,7,3,6] X[3,5,1,7]").unwrap();
    let d = trace_components(&code).unwrap();
    assert!(d.crossings.iter().all(|c| c.sign == Sign::Minus));
    let code = parse_pd("X-[1,6,2,5] X+[2,7,3,6] X[3,5,1,7]").unwrap();
    assert!(matches!(trace_components(&code), Err(LinkError::InconsistentOrientation { .. })));
}

#[test]
fn twist_region_examples() {
    let zero = twist_region_link(0);
    assert!(zero.crossings.is_empty());
    assert_eq!(lk(&zero), 0);
    let one = twist_region_link(1);
    assert_eq!(one.crossings.len(), 2);
    assert_eq!(lk(&one), -1);
    assert_eq!(lk(&twist_region_link(-4)), 4);
    for n in -12..=12 {
        let code = twist_region_link(n);
        assert_eq!(code.crossings.len() as u64, 2 * n.unsigned_abs());
        let d = trace_components(&code).unwrap();
        assert_eq!(d.component_count(), 2, "n = {n}");
        assert_eq!(d.linking_number(0, 1), Ok(-n), "n = {n}");
    }
}

#[test]
fn reversing_a_component_negates_linking() {
    for n in [-3, -1, 2, 5] {
        let d = trace_components(&twist_region_link(n)).unwrap();
        let r = d.reverse_component(1).unwrap();
        assert_eq!(r.linking_number(0, 1), Ok(n));
        assert_eq!(d.reverse_component(0).unwrap().reverse_component(1).unwrap().linking_number(0, 1), Ok(-n));
    }
    let hopf = trace_components(&parse_pd(HOPF).unwrap()).unwrap();
    assert_eq!(hopf.reverse_component(0).unwrap().linking_number(1, 0), Ok(-1));
    assert!(hopf.reverse_component(4).is_err());
}

fn corpus() -> impl Strategy<Value = String> {
    let fixed = prop::sample::select(vec![TREFOIL.to_string(), FIGURE_EIGHT.to_string(), HOPF.to_string(), String::new()]);
    let twists = (-8i64..=8).prop_map(|n| twist_region_link(n).to_string());
    prop_oneof![fixed, twists]
}

proptest! {
    #[test]
    fn render_reparses(s in corpus(), signs in proptest::collection::vec(any::<bool>(), 0..16)) {
        let mut code = parse_pd(&s).unwrap();
        // pin signs that agree with the traced diagram, so the code stays valid
        let traced = trace_components(&code).unwrap();
        for (i, pin) in signs.iter().enumerate().take(code.crossings.len()) {
            if *pin {
                code.crossings[i].sign = Some(traced.crossings[i].sign);
            }
        }
        let again = parse_pd(&code.to_string()).unwrap();
        prop_assert_eq!(&again, &code);
        prop_assert_eq!(trace_components(&again).unwrap(), traced);
    }

    #[test]
    fn linking_is_symmetric(n in -12i64..=12) {
        let d = trace_components(&twist_region_link(n)).unwrap();
        prop_assert_eq!(d.linking_number(0, 1).unwrap(), d.linking_number(1, 0).unwrap());
    }
}
