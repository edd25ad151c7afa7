//! Exact scalars: arbitrary-precision rationals and cyclotomic fields.
//!
//! `Q(zeta_r)` is realized as `Q[x] / Phi_r(x)`. Every value is kept in a
//! canonical form, so `==` is exact field equality. Values that happen to be
//! rational are always stored with order 1; this is what lets integer
//! polynomials such as `e_r` mix freely with entries from any single
//! cyclotomic field.

mod cyclotomic;
mod dense;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic, CyclotomicPoly};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// The scalar ring every polynomial and matrix in this crate is defined over.
pub type Scalar = Cyclotomic;

/// Returns the primitive `r`-th root of unity `zeta_r`.
pub fn zeta(r: u32) -> Cyclotomic {
    Cyclotomic::zeta(r)
}

/// `true` iff `a^k = 1`.
pub fn is_root_of_unity(a: &Cyclotomic, k: u32) -> bool {
    a.is_root_of_unity(k)
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}
