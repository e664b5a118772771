use serde::Serialize;

use super::{casson_knot, KnotError, KnotSpec};
use crate::linkdiag::{trace_components, twist_region_link, PDCode};
use crate::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SkeinSide {
    KPlus,
    KMinus,
}

/// Two knots that differ at the clasp crossing of a double, and the
/// two-component link obtained by resolving that crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinTriple {
    pub k_plus: KnotSpec,
    pub k_minus: KnotSpec,
    pub trivial_side: SkeinSide,
    pub resolved_lk: i64,
    pub resolved_code: PDCode,
}

/// Changing the clasp crossing of a double unclasps it, so one side is the
/// unknot: `K₋` for a positive hook, `K₊` for a negative one. The resolution
/// `K₀` is two parallel strands joined through the twist region.
pub fn skein_triple(d: &KnotSpec) -> Result<SkeinTriple, KnotError> {
    let KnotSpec::Double { twists, hook, .. } = *d else {
        return Err(KnotError::NotADouble { knot: d.to_string() });
    };
    let (k_plus, k_minus, trivial_side) = match hook {
        Sign::Plus => (*d, KnotSpec::Unknot, SkeinSide::KMinus),
        Sign::Minus => (KnotSpec::Unknot, *d, SkeinSide::KPlus),
    };
    Ok(SkeinTriple {
        k_plus,
        k_minus,
        trivial_side,
        resolved_lk: -twists,
        resolved_code: twist_region_link(twists),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingChangeCheck {
    pub knot: KnotSpec,
    pub lambda_plus: i64,
    pub lambda_minus: i64,
    /// Linking number of the resolution, traced from its PD code.
    pub lk: i64,
    pub holds: bool,
}

/// Checks `λ'(K₊) - λ'(K₋) = lk(K₀)` for the clasp crossing of `d`.
pub fn verify_crossing_change(d: &KnotSpec) -> Result<bool, KnotError> {
    Ok(verify_crossing_change_with(d, casson_knot)?.holds)
}

/// As [`verify_crossing_change`], with `λ'` supplied by the caller, returning
/// every quantity involved.
pub fn verify_crossing_change_with(
    d: &KnotSpec,
    lambda: impl Fn(&KnotSpec) -> i64,
) -> Result<CrossingChangeCheck, KnotError> {
    let triple = skein_triple(d)?;
    let diagram = trace_components(&triple.resolved_code)?;
    let lk = diagram.linking_number(0, 1)?;
    let lambda_plus = lambda(&triple.k_plus);
    let lambda_minus = lambda(&triple.k_minus);
    Ok(CrossingChangeCheck {
        knot: *d,
        lambda_plus,
        lambda_minus,
        lk,
        holds: lambda_plus - lambda_minus == lk,
    })
}
