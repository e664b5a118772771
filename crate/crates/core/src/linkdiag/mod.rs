//! Planar-diagram (PD) link codes: parsing, strand tracing, crossing signs
//! and linking numbers.
//!
//! A crossing `X[a,b,c,d]` lists its four edge labels counterclockwise,
//! starting from the incoming under-strand, so the under-strand runs
//! `a → c` and the over-strand joins `b` and `d`. `X+[…]`/`X-[…]` pin the
//! crossing sign, which fixes the over-strand direction. `Loop[e]` is a
//! component with no crossings.

mod trace;
mod twist;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::Sign;

pub use trace::{linking_number, trace_components, DiagramCrossing, LinkDiagram};
pub use twist::twist_region_link;

pub type EdgeLabel = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("MalformedToken: {token:?}")]
    MalformedToken { token: String },
    #[error("BadArity: {token:?} has {arity} labels")]
    BadArity { token: String, arity: usize },
    #[error("EdgeLabelCountViolation: label {label} occurs {count} times, expected 2")]
    EdgeLabelCountViolation { label: EdgeLabel, count: usize },
    #[error("InconsistentOrientation: crossing {crossing} contradicts the orientation of its strands")]
    InconsistentOrientation { crossing: usize },
    #[error("UnknownComponent: component {id} of {count}")]
    UnknownComponent { id: usize, count: usize },
    #[error("SameComponent: linking number needs two distinct components, got {id} twice")]
    SameComponent { id: usize },
    #[error("OddMixedSignSum: mixed crossings sum to {sum}")]
    OddMixedSignSum { sum: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PdCrossing {
    pub labels: [EdgeLabel; 4],
    pub sign: Option<Sign>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PDCode {
    pub crossings: Vec<PdCrossing>,
    /// Labels of crossingless components.
    pub loops: Vec<EdgeLabel>,
}

impl PDCode {
    pub fn new(crossings: Vec<PdCrossing>, loops: Vec<EdgeLabel>) -> Result<Self, LinkError> {
        let code = PDCode { crossings, loops };
        code.validate()?;
        Ok(code)
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty() && self.loops.is_empty()
    }

    fn validate(&self) -> Result<(), LinkError> {
        let mut counts: BTreeMap<EdgeLabel, usize> = BTreeMap::new();
        for x in &self.crossings {
            for &l in &x.labels {
                *counts.entry(l).or_default() += 1;
            }
        }
        for &l in &self.loops {
            *counts.entry(l).or_default() += 2;
        }
        match counts.into_iter().find(|&(_, c)| c != 2) {
            Some((label, count)) => Err(LinkError::EdgeLabelCountViolation { label, count }),
            None => Ok(()),
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = EdgeLabel> + '_ {
        self.crossings.iter().flat_map(|x| x.labels).chain(self.loops.iter().copied())
    }

    /// Disjoint union; labels of `other` must not collide with ours.
    pub fn disjoint_union(&self, other: &PDCode) -> Result<PDCode, LinkError> {
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().copied());
        let mut loops = self.loops.clone();
        loops.extend(other.loops.iter().copied());
        PDCode::new(crossings, loops)
    }
}

impl fmt::Display for PdCrossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.labels;
        match self.sign {
            Some(s) => write!(f, "X{s}[{a},{b},{c},{d}]"),
            None => write!(f, "X[{a},{b},{c},{d}]"),
        }
    }
}

impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens = self
            .crossings
            .iter()
            .map(ToString::to_string)
            .chain(self.loops.iter().map(|l| format!("Loop[{l}]")));
        let mut first = true;
        for t in tokens {
            if !first {
                f.write_str(" ")?;
            }
            f.write_str(&t)?;
            first = false;
        }
        Ok(())
    }
}

/// Splits on whitespace outside brackets, dropping `#` comments.
fn tokens(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for line in text.lines() {
        let body = line.split('#').next().unwrap_or("");
        let mut cur = String::new();
        let mut depth = 0usize;
        for ch in body.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    cur.push(ch);
                }
                ']' => {
                    depth = depth.saturating_sub(1);
                    cur.push(ch);
                }
                c if c.is_whitespace() => {
                    if depth == 0 && !cur.is_empty() {
                        out.push(std::mem::take(&mut cur));
                    }
                }
                c => cur.push(c),
            }
        }
        if !cur.is_empty() {
            out.push(cur);
        }
    }
    out
}

enum Token {
    Crossing(PdCrossing),
    Loop(EdgeLabel),
}

fn parse_token(token: &str) -> Result<Token, LinkError> {
    let malformed = || LinkError::MalformedToken { token: token.to_string() };
    let (head, rest) = token.split_once('[').ok_or_else(malformed)?;
    let body = rest.strip_suffix(']').ok_or_else(malformed)?;
    if body.contains('[') || body.contains(']') {
        return Err(malformed());
    }
    let labels: Vec<EdgeLabel> = if body.is_empty() {
        Vec::new()
    } else {
        body.split(',').map(|s| s.parse::<EdgeLabel>().map_err(|_| malformed())).collect::<Result<_, _>>()?
    };
    let sign = match head {
        "X" => None,
        "X+" => Some(Sign::Plus),
        "X-" => Some(Sign::Minus),
        "Loop" => {
            return match labels.as_slice() {
                &[l] => Ok(Token::Loop(l)),
                _ => Err(LinkError::BadArity { token: token.to_string(), arity: labels.len() }),
            }
        }
        _ => return Err(malformed()),
    };
    let labels: [EdgeLabel; 4] = labels
        .try_into()
        .map_err(|v: Vec<EdgeLabel>| LinkError::BadArity { token: token.to_string(), arity: v.len() })?;
    Ok(Token::Crossing(PdCrossing { labels, sign }))
}

pub fn parse_pd(text: &str) -> Result<PDCode, LinkError> {
    let mut crossings = Vec::new();
    let mut loops = Vec::new();
    for t in tokens(text) {
        match parse_token(&t)? {
            Token::Crossing(x) => crossings.push(x),
            Token::Loop(l) => loops.push(l),
        }
    }
    PDCode::new(crossings, loops)
}

impl FromStr for PDCode {
    type Err = LinkError;

    fn from_str(s: &str) -> Result<PDCode, LinkError> {
        parse_pd(s)
    }
}

#[cfg(test)]
mod tests;
