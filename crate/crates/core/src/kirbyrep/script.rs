//! Move scripts: one move per line, `blowup ±1`, `blowdown <i>` or
//! `slide <i> <j> ±1`, with 1-based component indices and `#` comments.

use std::fmt;

use super::{blow_down, blow_up, handle_slide, FramedPresentation, KirbyError};
use crate::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    BlowUp(Sign),
    /// 0-based component index.
    BlowDown(usize),
    /// Slide component `i` over component `j` (0-based).
    Slide { i: usize, j: usize, sign: Sign },
}

impl Move {
    pub fn apply(&self, p: &FramedPresentation) -> Result<FramedPresentation, KirbyError> {
        match *self {
            Move::BlowUp(s) => Ok(blow_up(p, s)),
            Move::BlowDown(i) => blow_down(p, i),
            Move::Slide { i, j, sign } => handle_slide(p, i, j, sign),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::BlowUp(s) => write!(f, "blowup {s}1"),
            Move::BlowDown(i) => write!(f, "blowdown {}", i + 1),
            Move::Slide { i, j, sign } => write!(f, "slide {} {} {sign}1", i + 1, j + 1),
        }
    }
}

pub fn parse_move_script(text: &str) -> Result<Vec<Move>, KirbyError> {
    let mut moves = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |msg: String| KirbyError::Script { line, msg };
        let words: Vec<&str> = body.split_whitespace().collect();
        let index = |w: &str| -> Result<usize, KirbyError> {
            match w.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(err(format!("bad component index {w:?} (indices are 1-based)"))),
            }
        };
        let sign = |w: &str| -> Result<Sign, KirbyError> {
            match w {
                "+1" | "-1" => Ok(w.parse().expect("checked")),
                _ => Err(err(format!("bad sign {w:?}, expected +1 or -1"))),
            }
        };
        let mv = match words.as_slice() {
            ["blowup", s] => Move::BlowUp(sign(s)?),
            ["blowdown", i] => Move::BlowDown(index(i)?),
            ["slide", i, j, s] => Move::Slide { i: index(i)?, j: index(j)?, sign: sign(s)? },
            _ => return Err(err(format!("unrecognized move {body:?}"))),
        };
        moves.push(mv);
    }
    Ok(moves)
}

pub fn apply_moves(
    start: &FramedPresentation,
    moves: &[Move],
) -> Result<FramedPresentation, KirbyError> {
    moves.iter().try_fold(start.clone(), |p, m| m.apply(&p))
}
