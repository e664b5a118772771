use super::{EdgeLabel, PDCode, PdCrossing};

/// The closed two-strand twist region with `2|n|` crossings, both strands
/// oriented the same way through the region. Every crossing is a mixed
/// crossing of sign `-sgn(n)`, so the linking number is `-n`. `n = 0` gives
/// the two-component unlink as a pair of loops.
///
/// Edge labels: the left strand position between crossings `k-1` and `k` is
/// `k + 1`, the right position is `m + k + 1`, with `m = 2|n|`.
pub fn twist_region_link(n: i64) -> PDCode {
    if n == 0 {
        return PDCode { crossings: Vec::new(), loops: vec![1, 2] };
    }
    let m = 2 * n.unsigned_abs();
    let left = |k: u64| -> EdgeLabel { k % m + 1 };
    let right = |k: u64| -> EdgeLabel { m + k % m + 1 };
    let crossings = (0..m)
        .map(|k| {
            let labels = if n > 0 {
                // under: left-in → right-out; over: right-in → left-out
                [left(k), right(k), right(k + 1), left(k + 1)]
            } else {
                // under: right-in → left-out; over: left-in → right-out
                [right(k), right(k + 1), left(k + 1), left(k)]
            };
            PdCrossing { labels, sign: None }
        })
        .collect();
    PDCode { crossings, loops: Vec::new() }
}
