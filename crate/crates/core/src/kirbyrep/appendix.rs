//! The intersection forms `A(n)` (rank 10) and `B(n)` (rank 14) of two
//! handlebodies whose common boundary is `M_n(T₂,₃, T₂,₃)`. `A(n)` is even
//! exactly when `n` is even and `B(n)` exactly when `n` is odd.
//!
//! Each table lists, per displayed row (1-indexed), the `(column, value)`
//! pairs shown; blank entries are zero. The parameterized diagonal entry is
//! marked with [`Cell::Param`].

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::intform::SymIntMatrix;
use crate::matrix::IntMatrix;

#[derive(Clone, Copy)]
enum Cell {
    Fixed(i64),
    /// `n + offset`
    Param(i64),
}

use Cell::{Fixed as F, Param as P};

const A_ROWS: [&[(usize, Cell)]; 10] = [
    &[(1, F(-2)), (4, F(1))],
    &[(2, F(2)), (3, F(1))],
    &[(2, F(1)), (3, F(2)), (4, F(1))],
    &[(1, F(1)), (3, F(1)), (4, F(0)), (5, F(1))],
    &[(4, F(1)), (5, F(-6)), (6, F(1))],
    &[(5, F(1)), (6, P(-6)), (7, F(1))],
    &[(6, F(1)), (7, F(0)), (8, F(1)), (10, F(1))],
    &[(7, F(1)), (8, F(2)), (9, F(1))],
    &[(8, F(1)), (9, F(2))],
    &[(7, F(1)), (10, F(-2))],
];

const B_ROWS: [&[(usize, Cell)]; 14] = [
    &[(1, F(2)), (4, F(1))],
    &[(2, F(2)), (3, F(1))],
    &[(2, F(1)), (3, F(2)), (4, F(1))],
    &[(1, F(1)), (3, F(1)), (4, F(2)), (5, F(1))],
    &[(4, F(1)), (5, F(2)), (6, F(1))],
    &[(5, F(1)), (6, F(2)), (7, F(1))],
    &[(6, F(1)), (7, F(2)), (8, F(1))],
    &[(7, F(1)), (8, F(2)), (9, F(1))],
    &[(8, F(1)), (9, F(2)), (10, F(1))],
    &[(9, F(1)), (10, P(-5)), (11, F(1))],
    &[(10, F(1)), (11, F(0)), (12, F(1)), (14, F(1))],
    &[(11, F(1)), (12, F(2)), (13, F(1))],
    &[(12, F(1)), (13, F(2))],
    &[(11, F(1)), (14, F(-2))],
];

/// Builds the symmetric matrix, mirroring any entry shown on one side of the
/// diagonal only. Entries shown on both sides must agree.
fn build(rows: &[&[(usize, Cell)]], n: i64) -> SymIntMatrix {
    let mut shown: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (r, row) in rows.iter().enumerate() {
        for &(c, cell) in row.iter() {
            let v = match cell {
                Cell::Fixed(v) => v,
                Cell::Param(off) => n + off,
            };
            shown.insert((r, c - 1), v);
        }
    }
    let size = rows.len();
    let mut m = IntMatrix::zeros(size);
    for (&(i, j), &v) in &shown {
        if let Some(&w) = shown.get(&(j, i)) {
            assert_eq!(v, w, "displayed entries ({i},{j}) and ({j},{i}) disagree");
        }
        m[(i, j)] = BigInt::from(v);
        m[(j, i)] = BigInt::from(v);
    }
    SymIntMatrix::new(m).expect("mirrored matrix is symmetric")
}

/// `A(n)`: 10×10, diagonal entry `(6,6)` equal to `n - 6`.
pub fn appendix_matrix_a(n: i64) -> SymIntMatrix {
    build(&A_ROWS, n)
}

/// `B(n)`: 14×14, diagonal entry `(10,10)` equal to `n - 5`.
pub fn appendix_matrix_b(n: i64) -> SymIntMatrix {
    build(&B_ROWS, n)
}
