use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer Laurent polynomial in one variable `t`. Zero coefficients are
/// never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `p(t) ↦ p(t⁻¹)`.
    pub fn inverted(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// `p(t) ↦ t^k·p(t)`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.inverted()
    }

    /// `p(1)`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self` in
    /// `ℤ[t, t⁻¹]`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (dlo, dhi) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(rhi) = rem.max_exp() {
            let rlo = rem.min_exp().expect("nonzero");
            if rhi - rlo < dhi - dlo {
                return None;
            }
            let (q, r) = rem.coeff(rhi).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let term = LaurentPoly::monomial(q, rhi - dhi);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }
}

/// `Σ c_e · e · (e - 1)`, i.e. `p''(1)`.
pub fn second_derivative_at_one(p: &LaurentPoly) -> BigInt {
    p.terms().map(|(e, c)| c * BigInt::from(e) * BigInt::from(e - 1)).sum()
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
