//! Symmetric integer forms: determinant, inertia, parity, unimodular
//! classification and the Rohlin residue of an even form.

mod oracle;
mod text;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::matrix::{IntMatrix, MatrixError};
use crate::Sign;

pub use oracle::{characteristic_polynomial, inertia_oracle};
pub use text::{parse_matrix_text, render_matrix_text};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntFormError {
    #[error("NotSymmetric: entry ({i}, {j}) differs from ({j}, {i})")]
    NotSymmetric { i: usize, j: usize },
    #[error("{0}")]
    Matrix(#[from] MatrixError),
    #[error("NotEven: diagonal entry {index} is odd")]
    NotEven { index: usize },
    #[error("NotUnimodular: determinant is {det}")]
    NotUnimodular { det: BigInt },
    #[error("IndexNotDivisibleBy8: even unimodular form has index {index}")]
    IndexNotDivisibleBy8 { index: i64 },
    #[error("Degenerate: determinant is zero")]
    Degenerate,
    #[error("ENotUnimodular: change of basis has determinant {det}")]
    ENotUnimodular { det: BigInt },
    #[error("MatrixParse: line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A symmetric square matrix over the integers. Empty (size 0) is allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymIntMatrix(IntMatrix);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InertiaTriple {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl InertiaTriple {
    pub fn index(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "Even",
            Parity::Odd => "Odd",
        })
    }
}

/// Isomorphism class of a nondegenerate unimodular form, as far as this
/// crate can decide it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum FormClass {
    /// `p⟨1⟩ ⊕ q⟨-1⟩`.
    OddIndefinite { positive: usize, negative: usize },
    /// `h·H ⊕ e·E8`, where a negative `e8` means copies of `-E8`.
    EvenIndefinite { hyperbolic: usize, e8: i64 },
    /// `±⟨1⟩^rank`; every definite unimodular form of rank at most 7 is of this type.
    DefiniteDiagonal { sign: Sign, rank: usize },
    ZeroRank,
    /// Definite of rank 8 or more.
    Unclassified,
}

impl fmt::Display for FormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormClass::OddIndefinite { positive, negative } => {
                write!(f, "OddIndefinite({positive}, {negative})")
            }
            FormClass::EvenIndefinite { hyperbolic, e8 } => {
                write!(f, "EvenIndefinite({hyperbolic} H, {e8} E8)")
            }
            FormClass::DefiniteDiagonal { sign, rank } => write!(f, "DefiniteDiagonal({sign}, {rank})"),
            FormClass::ZeroRank => f.write_str("ZeroRank"),
            FormClass::Unclassified => f.write_str("Unclassified"),
        }
    }
}

impl SymIntMatrix {
    pub fn new(m: IntMatrix) -> Result<Self, IntFormError> {
        let n = m.size();
        for i in 0..n {
            for j in 0..i {
                if m[(i, j)] != m[(j, i)] {
                    return Err(IntFormError::NotSymmetric { i, j });
                }
            }
        }
        Ok(SymIntMatrix(m))
    }

    pub fn from_rows<T, R>(rows: impl IntoIterator<Item = R>) -> Result<Self, IntFormError>
    where
        T: Into<BigInt>,
        R: IntoIterator<Item = T>,
    {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn empty() -> Self {
        SymIntMatrix(IntMatrix::zeros(0))
    }

    pub fn diagonal<T: Into<BigInt>>(diag: impl IntoIterator<Item = T>) -> Self {
        let d: Vec<BigInt> = diag.into_iter().map(Into::into).collect();
        let mut m = IntMatrix::zeros(d.len());
        for (i, v) in d.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        SymIntMatrix(m)
    }

    /// The hyperbolic plane `[[0,1],[1,0]]`.
    pub fn hyperbolic() -> Self {
        Self::from_rows([[0, 1], [1, 0]]).unwrap()
    }

    /// The positive-definite E8 form (Cartan matrix).
    pub fn e8() -> Self {
        let mut m = IntMatrix::zeros(8);
        for i in 0..8 {
            m[(i, i)] = BigInt::from(2);
        }
        // chain 0-1-2-3-4-5-6 with node 7 attached to node 4
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
        for (i, j) in edges {
            m[(i, j)] = BigInt::from(-1);
            m[(j, i)] = BigInt::from(-1);
        }
        SymIntMatrix(m)
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.0[(i, j)]
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn negated(&self) -> Self {
        SymIntMatrix(-&self.0)
    }

    /// Block sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &SymIntMatrix) -> Self {
        let (a, b) = (self.size(), other.size());
        let mut m = IntMatrix::zeros(a + b);
        for i in 0..a {
            for j in 0..a {
                m[(i, j)] = self.get(i, j).clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                m[(a + i, a + j)] = other.get(i, j).clone();
            }
        }
        SymIntMatrix(m)
    }

    /// Deletes row and column `k`.
    pub fn without(&self, k: usize) -> Self {
        let n = self.size();
        assert!(k < n, "component {k} out of range");
        let keep: Vec<usize> = (0..n).filter(|&i| i != k).collect();
        let mut m = IntMatrix::zeros(n - 1);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                m[(a, b)] = self.get(i, j).clone();
            }
        }
        SymIntMatrix(m)
    }

    pub fn det(&self) -> BigInt {
        det_exact(self)
    }

    pub fn inertia(&self) -> InertiaTriple {
        inertia(self)
    }

    pub fn index(&self) -> i64 {
        index(self)
    }
}

impl fmt::Debug for SymIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for SymIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

pub fn det_exact(m: &SymIntMatrix) -> BigInt {
    m.0.det()
}

/// Sylvester inertia by exact symmetric congruence diagonalization.
///
/// The active block is kept integral: eliminating pivot `p` replaces the
/// block by `sgn(p)·(p·M' - b·bᵀ)`, a positive multiple of the Schur
/// complement, and the block is then divided by the gcd of its entries.
/// Neither step changes the signs of the remaining eigenvalues.
pub fn inertia(m: &SymIntMatrix) -> InertiaTriple {
    let mut block = m.0.to_rows();
    let mut out = InertiaTriple { positive: 0, negative: 0, zero: 0 };

    while !block.is_empty() {
        let n = block.len();
        let pivot = match (0..n).find(|&i| !block[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let pair = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !block[i][j].is_zero());
                match pair {
                    Some((i, j)) => {
                        // row/col i += row/col j; new diagonal is 2·b_ij
                        add_row_col(&mut block, i, j);
                        i
                    }
                    None => {
                        out.zero += n;
                        break;
                    }
                }
            }
        };

        block.swap(0, pivot);
        for row in block.iter_mut() {
            row.swap(0, pivot);
        }

        let p = block[0][0].clone();
        if p.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        let flip = p.is_negative();
        let mut next: Vec<Vec<BigInt>> = (1..n)
            .map(|i| {
                (1..n)
                    .map(|j| {
                        let v = &p * &block[i][j] - &block[i][0] * &block[0][j];
                        if flip {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let g = next.iter().flatten().fold(BigInt::zero(), |g, v| g.gcd(v));
        if g > BigInt::one() {
            for v in next.iter_mut().flatten() {
                *v /= &g;
            }
        }
        block = next;
    }
    out
}

fn add_row_col(block: &mut [Vec<BigInt>], i: usize, j: usize) {
    let row_j = block[j].clone();
    for (x, v) in block[i].iter_mut().zip(row_j) {
        *x += v;
    }
    for row in block.iter_mut() {
        let v = row[j].clone();
        row[i] += v;
    }
}

/// Signature: positive minus negative inertia.
pub fn index(m: &SymIntMatrix) -> i64 {
    inertia(m).index()
}

pub fn parity_type(m: &SymIntMatrix) -> Parity {
    if (0..m.size()).all(|i| m.get(i, i).is_even()) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

pub fn is_unimodular(m: &SymIntMatrix) -> bool {
    det_exact(m).abs().is_one()
}

/// `σ/8 mod 2` for an even unimodular form.
pub fn rohlin_mu(m: &SymIntMatrix) -> Result<u8, IntFormError> {
    if let Some(k) = (0..m.size()).find(|&i| m.get(i, i).is_odd()) {
        return Err(IntFormError::NotEven { index: k });
    }
    let det = det_exact(m);
    if !det.abs().is_one() {
        return Err(IntFormError::NotUnimodular { det });
    }
    let sigma = index(m);
    if sigma.rem_euclid(8) != 0 {
        return Err(IntFormError::IndexNotDivisibleBy8 { index: sigma });
    }
    Ok((sigma / 8).rem_euclid(2) as u8)
}

pub fn classify_unimodular(m: &SymIntMatrix) -> Result<FormClass, IntFormError> {
    let det = det_exact(m);
    if det.is_zero() {
        return Err(IntFormError::Degenerate);
    }
    if !det.abs().is_one() {
        return Err(IntFormError::NotUnimodular { det });
    }
    let t = inertia(m);
    debug_assert_eq!(t.zero, 0);
    let rank = t.rank();
    if rank == 0 {
        return Ok(FormClass::ZeroRank);
    }
    if t.positive == 0 || t.negative == 0 {
        if rank > 7 {
            return Ok(FormClass::Unclassified);
        }
        let sign = if t.positive > 0 { Sign::Plus } else { Sign::Minus };
        return Ok(FormClass::DefiniteDiagonal { sign, rank });
    }
    match parity_type(m) {
        Parity::Odd => Ok(FormClass::OddIndefinite { positive: t.positive, negative: t.negative }),
        Parity::Even => {
            let sigma = t.index();
            if sigma.rem_euclid(8) != 0 {
                return Err(IntFormError::IndexNotDivisibleBy8 { index: sigma });
            }
            let e8 = sigma / 8;
            let hyperbolic = (rank - 8 * e8.unsigned_abs() as usize) / 2;
            Ok(FormClass::EvenIndefinite { hyperbolic, e8 })
        }
    }
}

/// `Eᵀ·M·E` for an integral change of basis `E`.
pub fn congruence_apply(m: &SymIntMatrix, e: &IntMatrix) -> Result<SymIntMatrix, IntFormError> {
    if e.size() != m.size() {
        return Err(MatrixError::SizeMismatch { left: m.size(), right: e.size() }.into());
    }
    let det = e.det();
    if !det.abs().is_one() {
        return Err(IntFormError::ENotUnimodular { det });
    }
    let out = e.transpose().checked_mul(&m.0)?.checked_mul(e)?;
    debug_assert!(out.is_symmetric());
    Ok(SymIntMatrix(out))
}

/// Fits the determinant into an `i64`, for reports.
pub fn det_i64(m: &SymIntMatrix) -> Option<i64> {
    det_exact(m).to_i64()
}

#[cfg(test)]
mod tests;
