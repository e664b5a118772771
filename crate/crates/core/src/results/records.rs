use num_traits::ToPrimitive;
use serde::Serialize;

use super::{bounding_verdict, rohlin_of_mn, AppendixReport, Citation, ResultsError, TableRow, VerdictValue};
use crate::intform::Parity;

pub const SCHEMA_VERSION: u32 = 1;

/// One evaluated table row, in the stable JSON layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRecord {
    pub schema: u32,
    pub n: i64,
    pub row: usize,
    pub k1: String,
    pub k2: String,
    pub presentations: Vec<String>,
    pub lambda: i64,
    pub mu: u8,
    pub verdict: VerdictValue,
    pub citations: Vec<Citation>,
}

impl TableRecord {
    pub fn evaluate(row: &TableRow, n: i64) -> Result<Self, ResultsError> {
        let (k1, k2) = (row.k1.knot(), row.k2.knot());
        let verdict = bounding_verdict(&k1, &k2, n)?;
        Ok(TableRecord {
            schema: SCHEMA_VERSION,
            n,
            row: row.row,
            k1: k1.to_string(),
            k2: k2.to_string(),
            presentations: row.presentations.iter().map(|p| p.describe(row.k2, n)).collect(),
            lambda: row.lambda(n)?,
            mu: rohlin_of_mn(&k1, &k2, n)?,
            verdict: verdict.value,
            citations: verdict.citations,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppendixRecord {
    pub schema: u32,
    pub n: i64,
    #[serde(rename = "detA")]
    pub det_a: i64,
    #[serde(rename = "indexA")]
    pub index_a: i64,
    #[serde(rename = "parityA")]
    pub parity_a: Parity,
    #[serde(rename = "detB")]
    pub det_b: i64,
    #[serde(rename = "indexB")]
    pub index_b: i64,
    #[serde(rename = "parityB")]
    pub parity_b: Parity,
    pub mu: u8,
    #[serde(rename = "mu_via_casson")]
    pub mu_via_casson: u8,
}

impl From<&AppendixReport> for AppendixRecord {
    fn from(r: &AppendixReport) -> Self {
        AppendixRecord {
            schema: SCHEMA_VERSION,
            n: r.n,
            det_a: r.det_a.to_i64().expect("unimodular"),
            index_a: r.index_a,
            parity_a: r.parity_a,
            det_b: r.det_b.to_i64().expect("unimodular"),
            index_b: r.index_b,
            parity_b: r.parity_b,
            mu: r.mu,
            mu_via_casson: r.mu_via_casson,
        }
    }
}
