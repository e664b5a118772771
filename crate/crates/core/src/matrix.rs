//! Dense square integer matrices with exact fraction-free determinants.

use std::fmt;
use std::ops::{Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("NotSquare: row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("SizeMismatch: {left}x{left} vs {right}x{right}")]
    SizeMismatch { left: usize, right: usize },
}

/// A square matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    size: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        IntMatrix { size, entries: vec![BigInt::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// `I + c·e_ij`.
    pub fn elementary(size: usize, i: usize, j: usize, c: impl Into<BigInt>) -> Self {
        let mut m = Self::identity(size);
        m[(i, j)] += c.into();
        m
    }

    pub fn from_rows<T, R>(rows: impl IntoIterator<Item = R>) -> Result<Self, MatrixError>
    where
        T: Into<BigInt>,
        R: IntoIterator<Item = T>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != size {
                return Err(MatrixError::NotSquare { row, len: r.len(), size });
            }
            entries.extend(r);
        }
        Ok(IntMatrix { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        // chunks(0) panics, so guard the empty matrix
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntMatrix { size: self.size, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    /// Exact determinant by Bareiss elimination.
    pub fn det(&self) -> BigInt {
        bareiss_det(self.to_rows())
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.size != rhs.size {
            return Err(MatrixError::SizeMismatch { left: self.size, right: rhs.size });
        }
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.size != rhs.size {
            return Err(MatrixError::SizeMismatch { left: self.size, right: rhs.size });
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Ok(IntMatrix { size: self.size, entries })
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.size && j < self.size, "index ({i}, {j}) out of range");
        &self.entries[i * self.size + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.size && j < self.size, "index ({i}, {j}) out of range");
        &mut self.entries[i * self.size + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix sizes must agree")
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_sub(rhs).expect("matrix sizes must agree")
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix { size: self.size, entries: self.entries.iter().map(|e| -e).collect() }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|e| e.to_string().len()).max().unwrap_or(1);
        for r in self.rows() {
            let line: Vec<String> = r.iter().map(|e| format!("{e:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Fraction-free Gaussian elimination. Every intermediate value is a minor
/// of the input, so all divisions are exact.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}
