//! Plain-text matrix format: a line holding `n`, then `n` rows of `n`
//! whitespace-separated integers. Empty lines and `#` comment lines are
//! skipped.

use num_bigint::BigInt;

use super::{IntFormError, SymIntMatrix};

pub fn parse_matrix_text(text: &str) -> Result<SymIntMatrix, IntFormError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines
        .next()
        .ok_or(IntFormError::Parse { line: 0, msg: "missing size line".into() })?;
    let n: usize = header
        .parse()
        .map_err(|_| IntFormError::Parse { line, msg: format!("bad size {header:?}") })?;

    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (line, body) = lines.next().ok_or(IntFormError::Parse {
            line: 0,
            msg: format!("expected {n} rows, found {r}"),
        })?;
        let row = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|_| IntFormError::Parse { line, msg: format!("bad entry {tok:?}") })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(IntFormError::Parse {
                line,
                msg: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(IntFormError::Parse { line, msg: "trailing data".into() });
    }
    SymIntMatrix::from_rows(rows)
}

pub fn render_matrix_text(m: &SymIntMatrix) -> String {
    let mut out = format!("{}\n", m.size());
    for row in m.as_matrix().rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
