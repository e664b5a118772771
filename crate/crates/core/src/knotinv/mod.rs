//! Knot families, Seifert matrices, Alexander and Conway polynomials, the
//! Casson knot invariant `λ'`, and crossing-change triples for twisted
//! Whitehead doubles.

mod laurent;
mod seifert;
mod skein;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::linkdiag::LinkError;
use crate::Sign;

pub use laurent::{second_derivative_at_one, LaurentPoly};
pub use seifert::{alexander, conway_polynomial, seifert_matrix, SeifertMatrix};
pub use skein::{
    skein_triple, verify_crossing_change, verify_crossing_change_with, CrossingChangeCheck,
    SkeinSide, SkeinTriple,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("Parse: {msg} in {input:?}")]
    Parse { input: String, msg: String },
    #[error("NestedDouble: companion of a double must be unknot, trefoil-r, trefoil-l or fig8, got {companion}")]
    NestedDouble { companion: String },
    #[error("NotADouble: {knot} is not a twisted double")]
    NotADouble { knot: String },
    #[error("InvalidSeifertMatrix: det(V - Vᵀ) = {det}, expected 1")]
    InvalidSeifertMatrix { det: BigInt },
    #[error(transparent)]
    Link(#[from] LinkError),
}

/// Knots allowed as companions of a double.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BaseKnot {
    Unknot,
    TrefoilRight,
    TrefoilLeft,
    FigureEight,
}

impl BaseKnot {
    pub const ALL: [BaseKnot; 4] =
        [BaseKnot::Unknot, BaseKnot::TrefoilRight, BaseKnot::TrefoilLeft, BaseKnot::FigureEight];

    pub fn knot(self) -> KnotSpec {
        match self {
            BaseKnot::Unknot => KnotSpec::Unknot,
            BaseKnot::TrefoilRight => KnotSpec::TrefoilRight,
            BaseKnot::TrefoilLeft => KnotSpec::TrefoilLeft,
            BaseKnot::FigureEight => KnotSpec::FigureEight,
        }
    }

    pub fn mirror(self) -> BaseKnot {
        match self {
            BaseKnot::TrefoilRight => BaseKnot::TrefoilLeft,
            BaseKnot::TrefoilLeft => BaseKnot::TrefoilRight,
            other => other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnotSpec {
    Unknot,
    TrefoilRight,
    TrefoilLeft,
    FigureEight,
    /// The `twists`-twisted Whitehead double of `companion` with clasp `hook`.
    Double { companion: BaseKnot, twists: i64, hook: Sign },
}

impl KnotSpec {
    pub fn double(companion: BaseKnot, twists: i64, hook: Sign) -> Self {
        KnotSpec::Double { companion, twists, hook }
    }

    pub fn as_base(&self) -> Option<BaseKnot> {
        match self {
            KnotSpec::Unknot => Some(BaseKnot::Unknot),
            KnotSpec::TrefoilRight => Some(BaseKnot::TrefoilRight),
            KnotSpec::TrefoilLeft => Some(BaseKnot::TrefoilLeft),
            KnotSpec::FigureEight => Some(BaseKnot::FigureEight),
            KnotSpec::Double { .. } => None,
        }
    }

    pub fn is_double(&self) -> bool {
        matches!(self, KnotSpec::Double { .. })
    }
}

impl From<BaseKnot> for KnotSpec {
    fn from(b: BaseKnot) -> Self {
        b.knot()
    }
}

impl fmt::Display for BaseKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseKnot::Unknot => "unknot",
            BaseKnot::TrefoilRight => "trefoil-r",
            BaseKnot::TrefoilLeft => "trefoil-l",
            BaseKnot::FigureEight => "fig8",
        })
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.as_base(), self) {
            (Some(b), _) => b.fmt(f),
            (None, KnotSpec::Double { companion, twists, hook }) => {
                write!(f, "double({companion}, {twists}, {hook})")
            }
            (None, _) => unreachable!(),
        }
    }
}

impl Serialize for KnotSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for KnotSpec {
    type Err = KnotError;

    fn from_str(input: &str) -> Result<Self, KnotError> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
        parse_compact(&compact, input)
    }
}

impl FromStr for BaseKnot {
    type Err = KnotError;

    fn from_str(input: &str) -> Result<Self, KnotError> {
        let k: KnotSpec = input.parse()?;
        k.as_base().ok_or_else(|| KnotError::NestedDouble { companion: k.to_string() })
    }
}

fn parse_compact(s: &str, input: &str) -> Result<KnotSpec, KnotError> {
    let err = |msg: &str| KnotError::Parse { input: input.to_string(), msg: msg.to_string() };
    match s {
        "unknot" => return Ok(KnotSpec::Unknot),
        "trefoil-r" => return Ok(KnotSpec::TrefoilRight),
        "trefoil-l" => return Ok(KnotSpec::TrefoilLeft),
        "fig8" => return Ok(KnotSpec::FigureEight),
        _ => {}
    }
    let inner = s
        .strip_prefix("double(")
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| err("unknown knot"))?;
    // the hook and the twist count are the last two comma-separated fields;
    // everything before them is the companion, which may itself contain commas
    let mut fields = inner.rsplitn(3, ',');
    let hook = fields.next().ok_or_else(|| err("missing hook"))?;
    let twists = fields.next().ok_or_else(|| err("missing twist count"))?;
    let companion = fields.next().ok_or_else(|| err("missing companion"))?;
    let hook: Sign = hook.parse().map_err(|_| err("hook must be + or -"))?;
    let twists: i64 = twists.parse().map_err(|_| err("twist count must be an integer"))?;
    let companion = parse_compact(companion, input)?;
    let companion = companion
        .as_base()
        .ok_or_else(|| KnotError::NestedDouble { companion: companion.to_string() })?;
    Ok(KnotSpec::Double { companion, twists, hook })
}

/// Mirror image. A double's mirror is the double of the mirrored companion
/// with negated twisting and hook.
pub fn mirror(k: &KnotSpec) -> KnotSpec {
    match *k {
        KnotSpec::Double { companion, twists, hook } => {
            KnotSpec::Double { companion: companion.mirror(), twists: -twists, hook: -hook }
        }
        other => other.as_base().expect("base knot").mirror().knot(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotInvariantRecord {
    pub knot: KnotSpec,
    #[serde(serialize_with = "serialize_display")]
    pub alexander: LaurentPoly,
    pub a2: i64,
    pub casson_prime: i64,
}

fn serialize_display<S: serde::Serializer>(p: &LaurentPoly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// Alexander polynomial, Conway `a₂` and `λ' = ½Δ''(1)`, the last two by
/// separate computations that are required to agree.
pub fn knot_invariants(k: &KnotSpec) -> KnotInvariantRecord {
    let v = seifert_matrix(k);
    let delta = alexander(&v);
    let d2 = second_derivative_at_one(&delta);
    assert!(d2.is_even(), "Δ''(1) = {d2} is odd for {k}");
    let casson_prime = to_i64(&(d2 / 2));
    let conway = conway_polynomial(&v);
    let a2 = to_i64(conway.get(2).unwrap_or(&BigInt::default()));
    assert_eq!(casson_prime, a2, "½Δ''(1) and Conway a₂ disagree for {k}");
    KnotInvariantRecord { knot: *k, alexander: delta, a2, casson_prime }
}

/// Casson knot invariant `λ'`, normalized so `λ'(right trefoil) = 1`.
pub fn casson_knot(k: &KnotSpec) -> i64 {
    knot_invariants(k).casson_prime
}

fn to_i64(v: &BigInt) -> i64 {
    v.to_i64().expect("knot invariant fits in i64")
}
