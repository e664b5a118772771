use num_bigint::BigInt;
use serde::Serialize;

use super::{casson_surgery, rohlin_of_mn, surgery_table, ResultsError};
use crate::intform::{classify_unimodular, index, parity_type, rohlin_mu, FormClass, Parity, SymIntMatrix};
use crate::kirbyrep::{appendix_matrix_a, appendix_matrix_b, union_closed_form, FramedPresentation};
use crate::knotinv::{casson_knot, verify_crossing_change_with, BaseKnot, CrossingChangeCheck, KnotSpec};
use crate::Sign;

/// Determinant, index and parity of the two appendix linking matrices, and
/// the Rohlin invariant of `M_n(T₂,₃, T₂,₃)` computed two ways: from the
/// even one of the two forms, and from the Casson invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixReport {
    pub n: i64,
    pub det_a: BigInt,
    pub index_a: i64,
    pub parity_a: Parity,
    pub det_b: BigInt,
    pub index_b: i64,
    pub parity_b: Parity,
    pub mu: u8,
    pub mu_via_casson: u8,
}

pub fn appendix_report(n: i64) -> Result<AppendixReport, ResultsError> {
    let a = appendix_matrix_a(n);
    let b = appendix_matrix_b(n);
    let (parity_a, parity_b) = (parity_type(&a), parity_type(&b));
    let even = match (parity_a, parity_b) {
        (Parity::Even, _) => &a,
        (_, Parity::Even) => &b,
        _ => unreachable!("neither appendix form is even for n = {n}"),
    };
    let mu = rohlin_mu(even)?;
    let trefoil = KnotSpec::TrefoilRight;
    let mu_via_casson = rohlin_of_mn(&trefoil, &trefoil, n)?;
    assert_eq!(mu, mu_via_casson, "Rohlin invariants disagree at n = {n}");
    Ok(AppendixReport {
        n,
        det_a: a.det(),
        index_a: index(&a),
        parity_a,
        det_b: b.det(),
        index_b: index(&b),
        parity_b,
        mu,
        mu_via_casson,
    })
}

/// The closed manifold `V¹ ∪ (-V²)`, where `V¹` is the trace of `+1` surgery
/// on `D₋(T₂,₃, n)` and `V²` that of `-1` surgery on `D₊(T₂,₃, n)`. The two
/// boundaries are the same homology sphere, which is checked at the level of
/// Casson invariants before gluing.
pub fn double_surgery_union_classification(n: i64) -> Result<FormClass, ResultsError> {
    let d_minus = KnotSpec::double(BaseKnot::TrefoilRight, n, Sign::Minus);
    let d_plus = KnotSpec::double(BaseKnot::TrefoilRight, n, Sign::Plus);
    assert_eq!(casson_surgery(&d_minus, Sign::Plus), casson_surgery(&d_plus, Sign::Minus));
    let v1 = FramedPresentation::new(SymIntMatrix::diagonal([1]), vec![d_minus.to_string()])?;
    let v2 = FramedPresentation::new(SymIntMatrix::diagonal([-1]), vec![d_plus.to_string()])?;
    let closed = union_closed_form(&v1, &v2)?;
    Ok(classify_unimodular(&closed)?)
}

/// Casson invariants of `S³₋₁(D₊(T₂,₃, first))`, `S³₊₁(D₋(T₂,₃, 0))` and
/// `S³₊₁(D₊(4₁, 0))`.
pub fn zero_twist_lambdas(first: i64) -> [i64; 3] {
    [
        casson_surgery(&KnotSpec::double(BaseKnot::TrefoilRight, first, Sign::Plus), Sign::Minus),
        casson_surgery(&KnotSpec::double(BaseKnot::TrefoilRight, 0, Sign::Minus), Sign::Plus),
        casson_surgery(&KnotSpec::double(BaseKnot::FigureEight, 0, Sign::Plus), Sign::Plus),
    ]
}

pub fn zero_twist_presentations_agree() -> bool {
    let l = zero_twist_lambdas(0);
    l[0] == l[1] && l[1] == l[2]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingChangeReport {
    pub checked: usize,
    pub failures: Vec<CrossingChangeCheck>,
}

impl CrossingChangeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the clasp crossing-change formula for every double in the table
/// and every twist count in `lo..=hi`.
pub fn crossing_change_suite(lo: i64, hi: i64) -> Result<CrossingChangeReport, ResultsError> {
    crossing_change_suite_with(lo, hi, casson_knot)
}

pub fn crossing_change_suite_with(
    lo: i64,
    hi: i64,
    lambda: impl Fn(&KnotSpec) -> i64,
) -> Result<CrossingChangeReport, ResultsError> {
    let mut families: Vec<(BaseKnot, Sign)> = surgery_table()
        .iter()
        .flat_map(|r| r.presentations.iter().map(move |p| (r.k2, p.hook)))
        .collect();
    families.sort();
    families.dedup();

    let mut report = CrossingChangeReport { checked: 0, failures: Vec::new() };
    for n in lo..=hi {
        for &(companion, hook) in &families {
            let check = verify_crossing_change_with(&KnotSpec::double(companion, n, hook), &lambda)?;
            report.checked += 1;
            if !check.holds {
                report.failures.push(check);
            }
        }
    }
    Ok(report)
}
