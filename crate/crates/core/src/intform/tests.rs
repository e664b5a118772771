use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::kirbyrep::{appendix_matrix_a, appendix_matrix_b};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn unimodular_from_ops(n: usize, ops: &[(usize, usize, i64)], flips: &[usize]) -> IntMatrix {
    let mut e = IntMatrix::identity(n);
    if n < 2 {
        return e;
    }
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i != j {
            e = &e * &IntMatrix::elementary(n, i, j, c);
        }
    }
    for &k in flips {
        let mut f = IntMatrix::identity(n);
        f[(k % n, k % n)] = big(-1);
        e = &e * &f;
    }
    e
}

fn sym_strategy(max: usize) -> impl Strategy<Value = SymIntMatrix> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(-9i64..=9, n * n).prop_map(move |v| {
            let mut m = IntMatrix::zeros(n);
            for i in 0..n {
                for j in 0..=i {
                    m[(i, j)] = big(v[i * n + j]);
                    m[(j, i)] = big(v[i * n + j]);
                }
            }
            SymIntMatrix::new(m).unwrap()
        })
    })
}

fn ops_strategy() -> impl Strategy<Value = (Vec<(usize, usize, i64)>, Vec<usize>)> {
    (
        proptest::collection::vec((0usize..16, 0usize..16, -3i64..=3), 0..12),
        proptest::collection::vec(0usize..16, 0..3),
    )
}

#[test]
fn det_examples() {
    assert_eq!(det_exact(&SymIntMatrix::from_rows([[0, 1], [1, 5]]).unwrap()), big(-1));
    assert_eq!(det_exact(&SymIntMatrix::empty()), big(1));
    for n in -12..=12 {
        assert_eq!(det_exact(&appendix_matrix_a(n)).abs(), big(1), "A({n})");
    }
}

#[test]
fn inertia_examples() {
    let t = |p, q, z| InertiaTriple { positive: p, negative: q, zero: z };
    assert_eq!(inertia(&SymIntMatrix::hyperbolic()), t(1, 1, 0));
    assert_eq!(inertia(&SymIntMatrix::diagonal([2, -3, 0])), t(1, 1, 1));
    assert_eq!(inertia(&appendix_matrix_b(1)), t(11, 3, 0));
    assert_eq!(inertia_oracle(&appendix_matrix_b(1)), t(11, 3, 0));
    assert_eq!(inertia(&SymIntMatrix::empty()), t(0, 0, 0));
    // all-zero diagonal forces the off-diagonal pivot path
    let m = SymIntMatrix::from_rows([[0, 2, 0], [2, 0, 3], [0, 3, 0]]).unwrap();
    assert_eq!(inertia(&m), inertia_oracle(&m));
}

#[test]
fn appendix_indices() {
    for n in -12..=12 {
        assert_eq!(index(&appendix_matrix_a(n)), 0, "A({n})");
        assert_eq!(index(&appendix_matrix_b(n)), 8, "B({n})");
    }
    assert_eq!(index(&SymIntMatrix::diagonal([1, 1])), 2);
    let a7 = appendix_matrix_a(7);
    assert_eq!(inertia(&a7), inertia_oracle(&a7));
}

#[test]
fn parity_examples() {
    assert_eq!(parity_type(&appendix_matrix_a(4)), Parity::Even);
    assert_eq!(parity_type(&appendix_matrix_a(3)), Parity::Odd);
    assert_eq!(parity_type(&appendix_matrix_b(3)), Parity::Even);
    assert_eq!(parity_type(&appendix_matrix_b(4)), Parity::Odd);
    assert_eq!(parity_type(&SymIntMatrix::empty()), Parity::Even);
}

#[test]
fn unimodular_examples() {
    for n in -5..=5 {
        assert!(is_unimodular(&SymIntMatrix::from_rows([[0, 1], [1, n]]).unwrap()));
    }
    assert!(!is_unimodular(&SymIntMatrix::diagonal([2])));
    assert!(is_unimodular(&SymIntMatrix::empty()));
}

#[test]
fn rohlin_examples() {
    for n in (-11..=11).step_by(2) {
        assert_eq!(rohlin_mu(&appendix_matrix_b(n)), Ok(1), "B({n})");
    }
    for n in (-12..=12).step_by(2) {
        assert_eq!(rohlin_mu(&appendix_matrix_a(n)), Ok(0), "A({n})");
    }
    assert_eq!(rohlin_mu(&SymIntMatrix::e8()), Ok(1));
    assert_eq!(rohlin_mu(&SymIntMatrix::e8().direct_sum(&SymIntMatrix::e8())), Ok(0));
    assert_eq!(rohlin_mu(&SymIntMatrix::empty()), Ok(0));
}

#[test]
fn rohlin_errors() {
    assert_eq!(rohlin_mu(&SymIntMatrix::diagonal([1])), Err(IntFormError::NotEven { index: 0 }));
    assert_eq!(rohlin_mu(&appendix_matrix_a(3)), Err(IntFormError::NotEven { index: 5 }));
    assert_eq!(
        rohlin_mu(&SymIntMatrix::diagonal([2])),
        Err(IntFormError::NotUnimodular { det: big(2) })
    );
    assert_eq!(
        rohlin_mu(&SymIntMatrix::diagonal([0, 2])),
        Err(IntFormError::NotUnimodular { det: big(0) })
    );
}

#[test]
fn e8_is_even_unimodular_definite() {
    let e8 = SymIntMatrix::e8();
    assert_eq!(det_exact(&e8), big(1));
    assert_eq!(inertia(&e8), InertiaTriple { positive: 8, negative: 0, zero: 0 });
    assert_eq!(parity_type(&e8), Parity::Even);
}

#[test]
fn classify_examples() {
    assert_eq!(
        classify_unimodular(&SymIntMatrix::diagonal([1, 1])),
        Ok(FormClass::DefiniteDiagonal { sign: Sign::Plus, rank: 2 })
    );
    assert_eq!(
        classify_unimodular(&SymIntMatrix::hyperbolic()),
        Ok(FormClass::EvenIndefinite { hyperbolic: 1, e8: 0 })
    );
    assert_eq!(
        classify_unimodular(&SymIntMatrix::diagonal([1, -1])),
        Ok(FormClass::OddIndefinite { positive: 1, negative: 1 })
    );
    assert_eq!(
        classify_unimodular(&SymIntMatrix::diagonal([-1, -1, -1])),
        Ok(FormClass::DefiniteDiagonal { sign: Sign::Minus, rank: 3 })
    );
    assert_eq!(classify_unimodular(&SymIntMatrix::e8()), Ok(FormClass::Unclassified));
    assert_eq!(classify_unimodular(&SymIntMatrix::empty()), Ok(FormClass::ZeroRank));
    let neg_e8_h = SymIntMatrix::e8().negated().direct_sum(&SymIntMatrix::hyperbolic());
    assert_eq!(classify_unimodular(&neg_e8_h), Ok(FormClass::EvenIndefinite { hyperbolic: 1, e8: -1 }));
    // B(n) for odd n: even, signature 8, rank 14
    assert_eq!(
        classify_unimodular(&appendix_matrix_b(3)),
        Ok(FormClass::EvenIndefinite { hyperbolic: 3, e8: 1 })
    );
    assert_eq!(
        classify_unimodular(&appendix_matrix_a(2)),
        Ok(FormClass::EvenIndefinite { hyperbolic: 5, e8: 0 })
    );
}

#[test]
fn classify_errors() {
    assert_eq!(classify_unimodular(&SymIntMatrix::diagonal([1, 0])), Err(IntFormError::Degenerate));
    assert_eq!(
        classify_unimodular(&SymIntMatrix::diagonal([3])),
        Err(IntFormError::NotUnimodular { det: big(3) })
    );
}

#[test]
fn congruence_examples() {
    let m = appendix_matrix_a(5);
    assert_eq!(congruence_apply(&m, &IntMatrix::identity(10)).unwrap(), m);

    let e = IntMatrix::elementary(2, 0, 1, 1);
    let out = congruence_apply(&SymIntMatrix::diagonal([1, 1]), &e).unwrap();
    assert_eq!(out, SymIntMatrix::from_rows([[1, 1], [1, 2]]).unwrap());

    let e = unimodular_from_ops(10, &[(0, 3, 2), (5, 1, -1), (9, 6, 3), (2, 7, 1), (4, 4, 1)], &[3]);
    let moved = congruence_apply(&appendix_matrix_a(0), &e).unwrap();
    assert_ne!(moved, appendix_matrix_a(0));
    assert_eq!(index(&moved), 0);

    let bad = IntMatrix::from_rows([[2, 0], [0, 1]]).unwrap();
    assert_eq!(
        congruence_apply(&SymIntMatrix::diagonal([1, 1]), &bad),
        Err(IntFormError::ENotUnimodular { det: big(2) })
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn inertia_agrees_with_oracle(m in sym_strategy(6)) {
        prop_assert_eq!(inertia(&m), inertia_oracle(&m));
    }

    #[test]
    fn inertia_congruence_invariant(m in sym_strategy(5), (ops, flips) in ops_strategy()) {
        let e = unimodular_from_ops(m.size(), &ops, &flips);
        let moved = congruence_apply(&m, &e).unwrap();
        prop_assert_eq!(inertia(&moved), inertia(&m));
        prop_assert_eq!(parity_type(&moved), parity_type(&m));
        prop_assert_eq!(det_exact(&moved), det_exact(&m));
    }

    #[test]
    fn direct_sum_is_additive(a in sym_strategy(4), b in sym_strategy(4)) {
        let s = a.direct_sum(&b);
        prop_assert_eq!(det_exact(&s), det_exact(&a) * det_exact(&b));
        prop_assert_eq!(index(&s), index(&a) + index(&b));
    }

    #[test]
    fn even_unimodular_signature_divisible_by_8(
        h in 0usize..3, pos in 0usize..2, neg in 0usize..2,
        (ops, flips) in ops_strategy(),
    ) {
        let mut m = SymIntMatrix::empty();
        for _ in 0..h { m = m.direct_sum(&SymIntMatrix::hyperbolic()); }
        for _ in 0..pos { m = m.direct_sum(&SymIntMatrix::e8()); }
        for _ in 0..neg { m = m.direct_sum(&SymIntMatrix::e8().negated()); }
        let e = unimodular_from_ops(m.size(), &ops, &flips);
        let m = congruence_apply(&m, &e).unwrap();
        prop_assert_eq!(parity_type(&m), Parity::Even);
        prop_assert_eq!(index(&m).rem_euclid(8), 0);
        prop_assert_eq!(rohlin_mu(&m).unwrap() as usize, (pos + neg) % 2);
    }
}
