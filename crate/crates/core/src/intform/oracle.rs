//! Second, independent inertia computation: exact characteristic polynomial
//! (Faddeev–LeVerrier) and Sturm-sequence root counting. Shares no code with
//! the congruence diagonalization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{InertiaTriple, SymIntMatrix};

/// Coefficients of `det(x·I - M)`, lowest degree first.
pub fn characteristic_polynomial(m: &SymIntMatrix) -> Vec<BigInt> {
    let a = m.as_matrix();
    let n = a.size();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc = crate::matrix::IntMatrix::zeros(n);
    for k in 1..=n {
        let mut next = a * &acc;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        let prod = a * &next;
        let trace: BigInt = (0..n).map(|i| prod[(i, i)].clone()).sum();
        // exact: the coefficients of an integer matrix's charpoly are integers
        coeffs[n - k] = -trace / BigInt::from(k);
        acc = next;
    }
    coeffs
}

pub fn inertia_oracle(m: &SymIntMatrix) -> InertiaTriple {
    let p = characteristic_polynomial(m);
    let zero = p.iter().take_while(|c| c.is_zero()).count();
    let q: Poly = p[zero..].iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let q_neg: Poly = q
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    InertiaTriple {
        positive: positive_roots_with_multiplicity(q),
        negative: positive_roots_with_multiplicity(q_neg),
        zero,
    }
}

type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn degree(p: &Poly) -> Option<usize> {
    p.len().checked_sub(1)
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(i.into())).collect())
}

fn rem(a: &Poly, b: &Poly) -> Poly {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut r = a.clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &lead;
        for (i, c) in b.iter().enumerate() {
            let v = &r[dr - db + i] - &f * c;
            r[dr - db + i] = v;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    match x.last().cloned() {
        Some(l) => x.iter().map(|c| c / &l).collect(),
        None => x,
    }
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), derivative(p)];
    loop {
        let k = seq.len();
        if seq[k - 1].is_empty() {
            seq.pop();
            break;
        }
        let r = rem(&seq[k - 2], &seq[k - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_of(c: &BigRational) -> i8 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

/// Distinct roots in `(0, ∞)`; requires `p(0) != 0`.
fn distinct_positive_roots(p: &Poly) -> usize {
    if degree(p).unwrap_or(0) == 0 {
        return 0;
    }
    let seq = sturm_sequence(p);
    let at_zero = variations(seq.iter().map(|s| s.first().map_or(0, sign_of)));
    let at_inf = variations(seq.iter().map(|s| s.last().map_or(0, sign_of)));
    at_zero - at_inf
}

/// Positive roots counted with multiplicity: the roots of `gcd(g, g')` are
/// those of `g` with multiplicity lowered by one, so summing distinct-root
/// counts along that chain recovers the multiplicities.
fn positive_roots_with_multiplicity(p: Poly) -> usize {
    let mut g = trim(p);
    let mut total = 0;
    while degree(&g).unwrap_or(0) > 0 {
        total += distinct_positive_roots(&g);
        g = gcd(&g, &derivative(&g));
    }
    total
}
