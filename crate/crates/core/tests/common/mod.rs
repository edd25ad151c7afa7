//! Strategies and property bodies shared by the proptest suites and the
//! acceptance binary.
#![allow(dead_code)]

use esym_core::exactnum::{cyclotomic_polynomial, euler_phi, rational};
use esym_core::parse::parse_polynomial_in;
use esym_core::weights::{dual_weight, in_lambda_r, DominantWeight, IntegerLattice};
use esym_core::{Monomial, Polynomial, Scalar, SquareMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn element(r: u32) -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-6i64..=6, 1i64..=4), euler_phi(r)).prop_map(move |c| {
        Scalar::from_power_basis(r, c.into_iter().map(|(p, q)| rational(p, q)).collect())
    })
}

/// `(r, a, b, c)` with `a, b, c` in `Q(zeta_r)`, `r <= 12`.
pub fn field_triple() -> impl Strategy<Value = (u32, Scalar, Scalar, Scalar)> {
    (1u32..=12).prop_flat_map(|r| (Just(r), element(r), element(r), element(r)))
}

pub fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    let zero = Scalar::zero();
    let one = Scalar::one();
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &zero, a.clone());
    prop_assert_eq!(a * &one, a.clone());
    prop_assert_eq!(a + &(-a.clone()), zero);
    prop_assert_eq!(&(a - b) + b, a.clone());
    if a.is_zero() {
        prop_assert!(a.inverse().is_err());
    } else {
        prop_assert_eq!(a * &a.inverse().unwrap(), one);
        prop_assert_eq!(&(b / a) * a, b.clone());
    }
    Ok(())
}

pub fn root_identities(r: u32, k: u32) -> Result<(), TestCaseError> {
    let z = Scalar::zeta(r);
    prop_assert!(z.pow(u64::from(r)).is_one());
    let phi = cyclotomic_polynomial(r);
    let at_zeta: Scalar = phi
        .coefficients()
        .iter()
        .enumerate()
        .map(|(i, c)| z.pow(i as u64) * Scalar::from(c.clone()))
        .sum();
    prop_assert!(at_zeta.is_zero());
    if r > 1 {
        let all: Scalar = (0..r).map(|j| z.pow(u64::from(j))).sum();
        prop_assert!(all.is_zero());
    }
    let w = Scalar::zeta_pow(r, u64::from(k));
    prop_assert_eq!(w.multiplicative_order(r), Some(r / r.gcd(&k)));
    prop_assert!(w.is_root_of_unity(r));
    prop_assert_eq!(
        &w * &Scalar::zeta_pow(r, u64::from(r - k % r)),
        Scalar::one()
    );
    Ok(())
}

pub fn small_rational() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| Scalar::from_rational(rational(p, q)))
}

pub fn polynomial(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0u32..=2, n), small_rational()),
        0..=4,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial::new(e), c))).unwrap()
    })
}

pub fn int_matrix(n: usize) -> impl Strategy<Value = SquareMatrix> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| SquareMatrix::from_fn(n, |i, j| Scalar::from_integer(v[i * n + j])))
}

pub fn functoriality_case() -> impl Strategy<Value = (Polynomial, SquareMatrix, SquareMatrix)> {
    (1usize..=3).prop_flat_map(|n| (polynomial(n), int_matrix(n), int_matrix(n)))
}

/// `p o (g h) = (p o g) o h`.
pub fn functoriality(
    p: &Polynomial,
    g: &SquareMatrix,
    h: &SquareMatrix,
) -> Result<(), TestCaseError> {
    let lhs = p.compose_linear(&g.checked_mul(h).unwrap()).unwrap();
    let rhs = p.compose_linear(g).unwrap().compose_linear(h).unwrap();
    prop_assert_eq!(lhs, rhs);
    prop_assert_eq!(
        p.compose_linear(&SquareMatrix::identity(p.nvars()))
            .unwrap(),
        p.clone()
    );
    Ok(())
}

pub fn dominant(n: usize) -> impl Strategy<Value = DominantWeight> {
    prop::collection::vec(-20i64..=20, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        DominantWeight::new(v).unwrap()
    })
}

pub fn weight_pair() -> impl Strategy<Value = (DominantWeight, DominantWeight, usize)> {
    (1usize..=6).prop_flat_map(|n| (dominant(n), dominant(n), 1usize..=8))
}

pub fn dual_properties(
    l: &DominantWeight,
    m: &DominantWeight,
    r: usize,
) -> Result<(), TestCaseError> {
    let d = dual_weight(l);
    prop_assert!(DominantWeight::new(d.entries().to_vec()).is_ok());
    prop_assert_eq!(&dual_weight(&d), l);
    prop_assert_eq!(d.sum(), -l.sum());
    prop_assert_eq!(in_lambda_r(l, r), in_lambda_r(&d, r));
    let sum = DominantWeight::new(
        l.entries()
            .iter()
            .zip(m.entries())
            .map(|(a, b)| a + b)
            .collect(),
    )
    .unwrap();
    let dual_sum: Vec<i64> = d
        .entries()
        .iter()
        .zip(dual_weight(m).entries())
        .map(|(a, b)| a + b)
        .collect();
    prop_assert_eq!(Vec::from(dual_weight(&sum)), dual_sum);
    Ok(())
}

pub fn lattice_case() -> impl Strategy<Value = (usize, Vec<Vec<i64>>, Vec<i64>)> {
    (1usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(prop::collection::vec(-6i64..=6, n), 0..=5),
            prop::collection::vec(-8i64..=8, n),
        )
    })
}

pub fn hnf_properties(n: usize, gens: &[Vec<i64>], v: &[i64]) -> Result<(), TestCaseError> {
    let l = IntegerLattice::from_i64(n, gens).unwrap();
    let again = IntegerLattice::new(n, l.hnf_columns().to_vec()).unwrap();
    prop_assert_eq!(again.hnf_columns(), l.hnf_columns());
    for g in gens {
        let z = l.membership_i64(g).unwrap();
        prop_assert!(z.is_some(), "generator {:?} not in its own span", g);
        let big: Vec<BigInt> = g.iter().map(|&x| x.into()).collect();
        prop_assert_eq!(l.combine(&z.unwrap()), big);
    }
    if let Some(z) = l.membership_i64(v).unwrap() {
        let big: Vec<BigInt> = v.iter().map(|&x| x.into()).collect();
        prop_assert_eq!(l.combine(&z), big);
    }
    Ok(())
}

pub fn parser_roundtrip(p: &Polynomial) -> Result<(), TestCaseError> {
    let text = p.to_string();
    let back = parse_polynomial_in(&text, p.nvars()).unwrap();
    prop_assert_eq!(&back, p, "rendered as {}", text);
    Ok(())
}

pub fn cyclotomic_polynomial_case() -> impl Strategy<Value = Polynomial> {
    (1u32..=12, 1usize..=3).prop_flat_map(|(r, n)| {
        prop::collection::vec((prop::collection::vec(0u32..=3, n), element(r)), 0..=4).prop_map(
            move |terms| {
                Polynomial::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial::new(e), c)))
                    .unwrap()
            },
        )
    })
}

pub fn root_case() -> impl Strategy<Value = (u32, u32)> {
    (1u32..=12).prop_flat_map(|r| (Just(r), 0..r))
}
