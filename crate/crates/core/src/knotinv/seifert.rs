//! Seifert matrices and the two routes from them to `λ'`: the Alexander
//! polynomial in `t` (by interpolating `det(tV - Vᵀ)`), and the Conway
//! polynomial in `z` (by a symbolic determinant in `s = t^½`).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::{BaseKnot, KnotError, KnotSpec};
use crate::matrix::IntMatrix;
use crate::Sign;

/// A Seifert matrix `V` with `det(V - Vᵀ) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix(IntMatrix);

impl SeifertMatrix {
    pub fn new(v: IntMatrix) -> Result<Self, KnotError> {
        let det = (&v - &v.transpose()).det();
        if !det.is_one() {
            return Err(KnotError::InvalidSeifertMatrix { det });
        }
        Ok(SeifertMatrix(v))
    }

    fn from_i64(rows: &[[i64; 2]]) -> Self {
        Self::new(IntMatrix::from_rows(rows.iter().map(|r| r.to_vec())).unwrap())
            .expect("family Seifert matrices are valid")
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn genus(&self) -> usize {
        self.0.size() / 2
    }

    /// Seifert matrix of the mirror image: `V ↦ -Vᵀ`.
    pub fn mirrored(&self) -> Self {
        SeifertMatrix(-&self.0.transpose())
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix({:?})", self.0)
    }
}

/// Genus ≤ 1 Seifert matrices for the supported families. A double's matrix
/// does not depend on its companion; the hook sign sits in the `(1,1)` entry
/// and the twisting in `(2,2)`.
pub fn seifert_matrix(k: &KnotSpec) -> SeifertMatrix {
    match *k {
        KnotSpec::Unknot => SeifertMatrix(IntMatrix::zeros(0)),
        KnotSpec::TrefoilRight => SeifertMatrix::from_i64(&[[-1, 1], [0, -1]]),
        KnotSpec::TrefoilLeft => seifert_matrix(&KnotSpec::TrefoilRight).mirrored(),
        KnotSpec::FigureEight => SeifertMatrix::from_i64(&[[1, 1], [0, -1]]),
        KnotSpec::Double { twists, hook, .. } => {
            let clasp = match hook {
                Sign::Plus => -1,
                Sign::Minus => 1,
            };
            SeifertMatrix::from_i64(&[[clasp, 1], [0, twists]])
        }
    }
}

/// Conway-normalized Alexander polynomial `det(t^½V - t^-½Vᵀ)`.
///
/// Computed as `t^-g · det(tV - Vᵀ)`, where the degree-`2g` polynomial
/// `det(tV - Vᵀ)` is recovered from its values at `t = 0, …, 2g`.
pub fn alexander(v: &SeifertMatrix) -> LaurentPoly {
    let m = v.matrix();
    let vt = m.transpose();
    let deg = m.size();
    let xs: Vec<i64> = (0..=deg as i64).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|&t| (&m.scale(&BigInt::from(t)) - &vt).det())
        .collect();
    let coeffs = interpolate(&xs, &ys);
    LaurentPoly::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (i as i64, c)))
        .shifted(-(v.genus() as i64))
}

/// Coefficients (lowest first) of the unique polynomial of degree
/// `< xs.len()` through the points; they must be integers.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> Vec<BigInt> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            dd[i] = num / BigRational::from_integer(BigInt::from(xs[i] - xs[i - level]));
        }
    }
    // expand the Newton form from the innermost term outwards
    let mut poly: Vec<BigRational> = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut next = vec![BigRational::zero(); n];
        for (j, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j + 1 < n {
                next[j + 1] += c;
            }
            next[j] -= c * BigRational::from_integer(BigInt::from(xs[i]));
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly.into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated determinant has non-integer coefficient {c}");
            c.to_integer()
        })
        .collect()
}

/// Conway polynomial coefficients `[a₀, a₁, a₂, …]` in `z = s - s⁻¹`.
pub fn conway_polynomial(v: &SeifertMatrix) -> Vec<BigInt> {
    let m = v.matrix();
    let n = m.size();
    let s = LaurentPoly::monomial(1, 1);
    let s_inv = LaurentPoly::monomial(1, -1);
    let entries: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = &s * &LaurentPoly::monomial(m[(i, j)].clone(), 0);
                    let b = &s_inv * &LaurentPoly::monomial(m[(j, i)].clone(), 0);
                    &a - &b
                })
                .collect()
        })
        .collect();
    let mut d = laurent_det(entries);

    // peel off z^(2k) = (s - s⁻¹)^(2k) from the top exponent down
    let mut coeffs: Vec<BigInt> = Vec::new();
    while let Some(top) = d.max_exp() {
        assert!(top >= 0 && top % 2 == 0, "not a Conway polynomial: top exponent {top}");
        let c = d.coeff(top);
        let k = top as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] = c.clone();
        let z = &s - &s_inv;
        let zk = (0..k).fold(LaurentPoly::one(), |acc, _| &acc * &z);
        d = &d - &(&zk * &LaurentPoly::monomial(c, 0));
    }
    coeffs
}

/// Bareiss elimination over `ℤ[s, s⁻¹]`.
fn laurent_det(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

impl BaseKnot {
    pub fn seifert_matrix(self) -> SeifertMatrix {
        seifert_matrix(&self.knot())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn family_matrices() {
        let tr = seifert_matrix(&KnotSpec::TrefoilRight);
        assert_eq!(tr.matrix(), &IntMatrix::from_rows([[-1, 1], [0, -1]]).unwrap());
        assert_eq!(seifert_matrix(&KnotSpec::Unknot).matrix().size(), 0);
        for companion in BaseKnot::ALL {
            let d = KnotSpec::Double { companion, twists: 4, hook: Sign::Plus };
            assert_eq!(seifert_matrix(&d).matrix(), &IntMatrix::from_rows([[-1, 1], [0, 4]]).unwrap());
        }
    }

    #[test]
    fn invalid_seifert_matrix() {
        let v = IntMatrix::from_rows([[1, 2], [0, 1]]).unwrap();
        assert_eq!(SeifertMatrix::new(v), Err(KnotError::InvalidSeifertMatrix { det: BigInt::from(4) }));
        let odd = IntMatrix::from_rows([[1]]).unwrap();
        assert!(SeifertMatrix::new(odd).is_err());
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(alexander(&seifert_matrix(&KnotSpec::TrefoilRight)), poly(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(alexander(&seifert_matrix(&KnotSpec::FigureEight)), poly(&[(1, -1), (0, 3), (-1, -1)]));
        assert_eq!(alexander(&seifert_matrix(&KnotSpec::Unknot)), LaurentPoly::one());
        for n in -12..=12 {
            let d = KnotSpec::Double { companion: BaseKnot::TrefoilRight, twists: n, hook: Sign::Plus };
            assert_eq!(alexander(&seifert_matrix(&d)), poly(&[(1, -n), (0, 2 * n + 1), (-1, -n)]));
        }
    }

    #[test]
    fn conway_examples() {
        let c = |k: &KnotSpec| conway_polynomial(&seifert_matrix(k));
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(c(&KnotSpec::Unknot), ints(&[1]));
        assert_eq!(c(&KnotSpec::TrefoilRight), ints(&[1, 0, 1]));
        assert_eq!(c(&KnotSpec::FigureEight), ints(&[1, 0, -1]));
        let d = KnotSpec::Double { companion: BaseKnot::FigureEight, twists: -3, hook: Sign::Minus };
        assert_eq!(c(&d), ints(&[1, 0, -3]));
    }

    #[test]
    fn genus_two_agrees_across_routes() {
        // connected sum of two trefoils: block-diagonal Seifert matrix
        let v = IntMatrix::from_rows([[-1, 1, 0, 0], [0, -1, 0, 0], [0, 0, 1, 1], [0, 0, 0, -1]]).unwrap();
        let v = SeifertMatrix::new(v).unwrap();
        let delta = alexander(&v);
        let expected = &poly(&[(1, 1), (0, -1), (-1, 1)]) * &poly(&[(1, -1), (0, 3), (-1, -1)]);
        assert_eq!(delta, expected);
        let conway = conway_polynomial(&v);
        // (1 + z²)(1 - z²) = 1 - z⁴
        assert_eq!(conway, [1, 0, 0, 0, -1].map(BigInt::from).to_vec());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let xs: Vec<i64> = (0..5).collect();
        let ys: Vec<BigInt> = xs.iter().map(|&x| BigInt::from(3 * x * x * x * x - 2 * x + 7)).collect();
        assert_eq!(interpolate(&xs, &ys), [7, -2, 0, 0, 3].map(BigInt::from).to_vec());
    }
}
