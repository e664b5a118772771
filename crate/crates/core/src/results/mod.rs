//! The surgery table for `M_n(K₁, K₂)`, Casson and Rohlin invariants read
//! off from it, bounding verdicts, and the consistency checks built on them.

mod checks;
mod records;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::intform::IntFormError;
use crate::kirbyrep::KirbyError;
use crate::knotinv::{casson_knot, mirror, BaseKnot, KnotError, KnotSpec};
use crate::Sign;

pub use checks::{
    appendix_report, crossing_change_suite, crossing_change_suite_with,
    double_surgery_union_classification, zero_twist_lambdas, zero_twist_presentations_agree,
    AppendixReport, CrossingChangeReport,
};
pub use records::{AppendixRecord, TableRecord, SCHEMA_VERSION};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResultsError {
    #[error("CombinationNotCovered: ({k1}, {k2}) is not a row of the surgery table")]
    CombinationNotCovered { k1: KnotSpec, k2: KnotSpec },
    #[error("PresentationsDisagree: row {row} at n = {n} gives Casson invariants {values:?}")]
    PresentationsDisagree { row: usize, n: i64, values: Vec<i64> },
    #[error(transparent)]
    Form(#[from] IntFormError),
    #[error(transparent)]
    Kirby(#[from] KirbyError),
    #[error(transparent)]
    Knot(#[from] KnotError),
}

/// One surgery description `S³_{surgery}(D_{hook}(K₂, n))` of `M_n(K₁, K₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SurgeryPresentation {
    pub surgery: Sign,
    pub hook: Sign,
}

impl SurgeryPresentation {
    pub fn knot(&self, k2: BaseKnot, n: i64) -> KnotSpec {
        KnotSpec::double(k2, n, self.hook)
    }

    pub fn describe(&self, k2: BaseKnot, n: i64) -> String {
        format!("S3_{}1({})", self.surgery, self.knot(k2, n))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// 1-based position in the table.
    pub row: usize,
    pub k1: BaseKnot,
    pub k2: BaseKnot,
    pub presentations: &'static [SurgeryPresentation],
    /// `λ(M_n) = lambda_coefficient · n`.
    pub lambda_coefficient: i64,
}

const fn pres(surgery: Sign, hook: Sign) -> SurgeryPresentation {
    SurgeryPresentation { surgery, hook }
}

use BaseKnot::{FigureEight, TrefoilLeft, TrefoilRight};
use Sign::{Minus, Plus};

static SURGERY_TABLE: [TableRow; 5] = [
    TableRow { row: 1, k1: TrefoilRight, k2: TrefoilRight, presentations: &[pres(Plus, Plus)], lambda_coefficient: -1 },
    TableRow { row: 2, k1: TrefoilLeft, k2: TrefoilRight, presentations: &[pres(Minus, Minus)], lambda_coefficient: -1 },
    TableRow {
        row: 3,
        k1: FigureEight,
        k2: TrefoilRight,
        presentations: &[pres(Minus, Plus), pres(Plus, Minus)],
        lambda_coefficient: 1,
    },
    TableRow { row: 4, k1: TrefoilRight, k2: FigureEight, presentations: &[pres(Plus, Plus)], lambda_coefficient: -1 },
    TableRow { row: 5, k1: FigureEight, k2: FigureEight, presentations: &[pres(Plus, Minus)], lambda_coefficient: 1 },
];

pub fn surgery_table() -> &'static [TableRow] {
    &SURGERY_TABLE
}

pub fn find_row(k1: &KnotSpec, k2: &KnotSpec) -> Result<&'static TableRow, ResultsError> {
    SURGERY_TABLE
        .iter()
        .find(|r| Some(r.k1) == k1.as_base() && Some(r.k2) == k2.as_base())
        .ok_or(ResultsError::CombinationNotCovered { k1: *k1, k2: *k2 })
}

/// Pairs outside the table may still be reachable by mirroring: the mirror
/// of `M_n(K₁, K₂)` is `M_{-n}(mirror K₁, mirror K₂)`, and `λ` changes sign.
/// Returns the mirrored query; it is up to the caller to negate the result.
pub fn mirrored_query(k1: BaseKnot, k2: BaseKnot, n: i64) -> (BaseKnot, BaseKnot, i64) {
    (k1.mirror(), k2.mirror(), -n)
}

/// Casson invariant of `S³_{eps}(K)`. `+1` surgery gives `λ'(K)`; `-1`
/// surgery is the orientation reversal of `+1` surgery on the mirror. The
/// result is checked against `eps · λ'(K)`.
pub fn casson_surgery(k: &KnotSpec, eps: Sign) -> i64 {
    let via_mirror = match eps {
        Sign::Plus => casson_knot(k),
        Sign::Minus => -casson_knot(&mirror(k)),
    };
    let via_sign = eps.as_i64() * casson_knot(k);
    assert_eq!(via_mirror, via_sign, "surgery routes disagree for {k} with coefficient {eps}1");
    via_mirror
}

impl TableRow {
    /// Casson invariant of each presentation, in table order.
    pub fn lambdas(&self, n: i64) -> Vec<i64> {
        self.presentations
            .iter()
            .map(|p| casson_surgery(&p.knot(self.k2, n), p.surgery))
            .collect()
    }

    pub fn lambda(&self, n: i64) -> Result<i64, ResultsError> {
        let values = self.lambdas(n);
        if values.windows(2).any(|w| w[0] != w[1]) {
            return Err(ResultsError::PresentationsDisagree { row: self.row, n, values });
        }
        Ok(values[0])
    }
}

pub fn casson_of_mn(k1: &KnotSpec, k2: &KnotSpec, n: i64) -> Result<i64, ResultsError> {
    find_row(k1, k2)?.lambda(n)
}

/// Rohlin invariant as the Casson invariant mod 2.
pub fn rohlin_of_mn(k1: &KnotSpec, k2: &KnotSpec, n: i64) -> Result<u8, ResultsError> {
    Ok(casson_of_mn(k1, k2, n)?.rem_euclid(2) as u8)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Citation {
    #[serde(rename = "corG")]
    CorG,
    #[serde(rename = "corM")]
    CorM,
    #[serde(rename = "cor1")]
    Cor1,
    #[serde(rename = "cor2")]
    Cor2,
    AkbulutFact,
    TangeFact,
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Citation::CorG => "corG",
            Citation::CorM => "corM",
            Citation::Cor1 => "cor1",
            Citation::Cor2 => "cor2",
            Citation::AkbulutFact => "AkbulutFact",
            Citation::TangeFact => "TangeFact",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictValue {
    Bounds,
    DoesNotBound,
    Unknown,
}

impl fmt::Display for VerdictValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictValue::Bounds => "Bounds",
            VerdictValue::DoesNotBound => "DoesNotBound",
            VerdictValue::Unknown => "Unknown",
        })
    }
}

/// Whether `M_n` bounds a contractible 4-manifold, with the facts that
/// decide it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Verdict {
    pub value: VerdictValue,
    pub citations: Vec<Citation>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if !self.citations.is_empty() {
            let tags: Vec<String> = self.citations.iter().map(|c| c.to_string()).collect();
            write!(f, " ({})", tags.join(", "))?;
        }
        Ok(())
    }
}

pub fn bounding_verdict(k1: &KnotSpec, k2: &KnotSpec, n: i64) -> Result<Verdict, ResultsError> {
    let row = find_row(k1, k2)?;
    let mut citations = Vec::new();
    let mut value = VerdictValue::Unknown;

    // odd n: μ = 1
    if rohlin_of_mn(k1, k2, n)? == 1 {
        value = VerdictValue::DoesNotBound;
        citations.push(Citation::CorG);
    }
    if row.row == 1 && n < 2 {
        value = VerdictValue::DoesNotBound;
        citations.push(Citation::TangeFact);
        if n == 0 {
            citations.push(Citation::AkbulutFact);
        }
    }
    // D₊(T₂,₃, 6) is slice, so +1 surgery on it bounds
    if n == 6 && row.row == 1 {
        value = VerdictValue::Bounds;
        citations.push(Citation::CorM);
    }
    if n == 6 && row.row == 3 {
        value = VerdictValue::Bounds;
        citations.push(Citation::Cor2);
    }
    citations.sort();
    Ok(Verdict { value, citations })
}

#[cfg(test)]
mod tests;
