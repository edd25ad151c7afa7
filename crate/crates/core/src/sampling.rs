//! Seeded candidate generators for the randomized checks.
//!
//! Candidate `i` of a run with seed `s` always draws from
//! `ChaCha8Rng::seed_from_u64(s)` on stream `i`, so results do not depend on
//! how candidates are spread across threads.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{rational, Scalar};
use crate::groups::{MonomialMatrix, Permutation, StabElement};
use crate::multipoly::SquareMatrix;

pub fn candidate_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform integer in `[-3, 3]`.
pub fn small_int<R: Rng>(rng: &mut R) -> i64 {
    rng.random_range(-3..=3)
}

/// `p / q` with `p` in `[-3, 3]` and `q` in `[1, 3]`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Scalar {
    let p = rng.random_range(-3..=3);
    let q = rng.random_range(1..=3);
    Scalar::from_rational(rational(p, q))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let x = small_rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Rational vector whose entries are zero with probability `zero_prob`.
pub fn sparse_rational_vector<R: Rng>(rng: &mut R, n: usize, zero_prob: f64) -> Vec<Scalar> {
    (0..n)
        .map(|_| {
            if rng.random_bool(zero_prob) {
                Scalar::zero()
            } else {
                nonzero_rational(rng)
            }
        })
        .collect()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffle of 0..n")
}

pub fn random_stab_element<R: Rng>(rng: &mut R, n: usize, r: u32) -> StabElement {
    let perm = random_permutation(rng, n);
    StabElement::new(perm, rng.random_range(0..r), r)
}

/// Matrix with entries uniform in `[-3, 3]`.
pub fn random_int_matrix<R: Rng>(rng: &mut R, n: usize) -> SquareMatrix {
    SquareMatrix::from_fn(n, |_, _| Scalar::from_integer(small_int(rng)))
}

/// Rejection-sampled invertible matrix with entries in `[-3, 3]`.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> SquareMatrix {
    loop {
        let m = random_int_matrix(rng, n);
        if m.is_invertible().expect("integer entries") {
            return m;
        }
    }
}

pub fn random_rational_matrix<R: Rng>(rng: &mut R, n: usize) -> SquareMatrix {
    SquareMatrix::from_fn(n, |_, _| small_rational(rng))
}

pub fn is_monomial_pattern(m: &SquareMatrix) -> bool {
    m.column_support_sizes().iter().all(|&c| c == 1)
}

/// Identity plus one nonzero rational entry off the diagonal.
pub fn random_shear<R: Rng>(rng: &mut R, n: usize) -> SquareMatrix {
    assert!(n >= 2);
    let i = rng.random_range(0..n);
    let j = (i + rng.random_range(1..n)) % n;
    let mut m = SquareMatrix::identity(n);
    m.set(i, j, nonzero_rational(rng));
    m
}

/// Invertible, not monomial, entries in `[-3, 3]`.
pub fn random_dense_nonmonomial<R: Rng>(rng: &mut R, n: usize) -> SquareMatrix {
    loop {
        let m = random_invertible(rng, n);
        if !is_monomial_pattern(&m) {
            return m;
        }
    }
}

/// A monomial matrix that is not in the stabilizer of `e_r`: its diagonal
/// is either non-constant or a constant that is not an `r`-th root of unity.
pub fn random_bad_monomial<R: Rng>(rng: &mut R, n: usize, r: u32) -> MonomialMatrix {
    let perm = random_permutation(rng, n);
    let diagonal = if rng.random_bool(0.5) {
        // non-constant: roots of unity with occasional rational factors
        loop {
            let d: Vec<Scalar> = (0..n)
                .map(|_| {
                    let root = Scalar::zeta_pow(r, rng.random_range(0..r).into());
                    if rng.random_bool(0.3) {
                        root * nonzero_rational(rng)
                    } else {
                        root
                    }
                })
                .collect();
            if d.iter().any(|x| x != &d[0]) {
                break d;
            }
        }
    } else {
        let c = loop {
            let root = Scalar::zeta_pow(r, rng.random_range(0..r).into());
            let c = root * nonzero_rational(rng);
            if !c.is_root_of_unity(r) {
                break c;
            }
        };
        vec![c; n]
    };
    MonomialMatrix::new(perm, diagonal).expect("nonzero diagonal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<i64> = (0..8)
            .map(|_| small_int(&mut candidate_rng(7, 3)))
            .collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let mut r1 = candidate_rng(7, 3);
        let mut r2 = candidate_rng(7, 4);
        let s1: Vec<i64> = (0..16).map(|_| small_int(&mut r1)).collect();
        let s2: Vec<i64> = (0..16).map(|_| small_int(&mut r2)).collect();
        assert_ne!(s1, s2);
    }

    #[test]
    fn generators_honor_their_contracts() {
        for i in 0..30 {
            let mut rng = candidate_rng(1, i);
            let m = random_dense_nonmonomial(&mut rng, 4);
            assert!(m.is_invertible().unwrap() && !is_monomial_pattern(&m));
            let s = random_shear(&mut rng, 4);
            assert!(!is_monomial_pattern(&s));
            let b = random_bad_monomial(&mut rng, 5, 3);
            if let Some(c) = b.scalar_part() {
                assert!(!c.is_root_of_unity(3));
            }
        }
    }
}
