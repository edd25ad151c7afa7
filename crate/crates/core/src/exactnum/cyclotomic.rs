use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{dense, Rational};
use crate::error::{Error, Result};

/// The `r`-th cyclotomic polynomial `Phi_r`, integer coefficients in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicPoly {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicPoly {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients, constant term first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Equals Euler's totient of the order.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl fmt::Display for CyclotomicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one();
            if !unit || power == 0 {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn euler_phi(r: u32) -> usize {
    assert!(r >= 1, "order must be positive");
    let mut n = r;
    let mut result = r;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Computes `Phi_r` as `(x^r - 1) / prod_{d | r, d < r} Phi_d` by exact division.
///
/// # Panics
///
/// Panics if `r == 0`.
pub fn cyclotomic_polynomial(r: u32) -> CyclotomicPoly {
    field(r).poly.clone()
}

fn compute_cyclotomic(r: u32) -> CyclotomicPoly {
    assert!(r >= 1, "order must be positive");
    // x^r - 1
    let mut num = vec![BigInt::zero(); r as usize + 1];
    num[0] = BigInt::from(-1);
    num[r as usize] = BigInt::one();
    for d in (1..r).filter(|d| r.is_multiple_of(*d)) {
        let divisor = &field(d).poly.coeffs;
        num = exact_monic_div(&num, divisor);
    }
    CyclotomicPoly {
        order: r,
        coeffs: num,
    }
}

// `divisor` is monic; the division is exact for cyclotomic factors.
fn exact_monic_div(num: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let d = divisor.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - d];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + d].clone();
        if c.is_zero() {
            continue;
        }
        for (i, y) in divisor.iter().enumerate() {
            rem[shift + i] -= &c * y;
        }
        quot[shift] = c;
    }
    debug_assert!(
        rem.iter().all(Zero::is_zero),
        "cyclotomic division not exact"
    );
    quot
}

#[derive(Debug)]
struct Field {
    poly: CyclotomicPoly,
    modulus: Vec<Rational>,
}

impl Field {
    fn degree(&self) -> usize {
        self.poly.degree()
    }

    fn order(&self) -> u32 {
        self.poly.order
    }
}

fn field(r: u32) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&r) {
        return Arc::clone(f);
    }
    // computed outside the lock: the recursion re-enters `field` for divisors
    let poly = compute_cyclotomic(r);
    let modulus = poly
        .coeffs
        .iter()
        .cloned()
        .map(Rational::from_integer)
        .collect();
    let built = Arc::new(Field { poly, modulus });
    Arc::clone(cache.lock().unwrap().entry(r).or_insert(built))
}

/// An element of `Q(zeta_r) = Q[x] / Phi_r(x)`.
///
/// Coefficients are stored in the power basis `1, zeta, ..., zeta^(phi(r)-1)`.
/// Rational values always carry order 1, so two values are equal exactly
/// when their orders and coefficient sequences coincide.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<Field>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    fn from_parts(field: Arc<Field>, mut coeffs: Vec<Rational>) -> Self {
        debug_assert!(coeffs.len() <= field.degree());
        coeffs.resize(field.degree(), Rational::zero());
        if field.order() != 1 && coeffs[1..].iter().all(Zero::is_zero) {
            let c = coeffs.swap_remove(0);
            return Self::from_rational(c);
        }
        Cyclotomic { field, coeffs }
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            field: field(1),
            coeffs: vec![q],
        }
    }

    pub fn from_integer(i: i64) -> Self {
        Self::from_rational(Rational::from_integer(i.into()))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// Builds `sum_i coeffs[i] * zeta_r^i`, reducing modulo `Phi_r`.
    pub fn from_power_basis(r: u32, coeffs: Vec<Rational>) -> Self {
        let f = field(r);
        let reduced = reduce(&f, coeffs);
        Self::from_parts(f, reduced)
    }

    /// The primitive root `zeta_r`.
    pub fn zeta(r: u32) -> Self {
        Self::zeta_pow(r, 1)
    }

    /// `zeta_r^k`.
    pub fn zeta_pow(r: u32, k: u64) -> Self {
        let k = (k % u64::from(r)) as usize;
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self::from_power_basis(r, coeffs)
    }

    /// Field order `r`; 1 for rational values.
    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `(power, coefficient)` pairs with nonzero coefficient.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.field.order() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.field.order() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.field.order() == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    fn lifted(&self, target: &Arc<Field>) -> Vec<Rational> {
        let mut v = self.coeffs.clone();
        v.resize(target.degree(), Rational::zero());
        v
    }

    fn common_field(&self, other: &Self) -> Result<Arc<Field>> {
        let (a, b) = (self.order(), other.order());
        if a == b || b == 1 {
            Ok(Arc::clone(&self.field))
        } else if a == 1 {
            Ok(Arc::clone(&other.field))
        } else {
            Err(Error::OrderMismatch { left: a, right: b })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let f = self.common_field(other)?;
        let (mut a, b) = (self.lifted(&f), other.lifted(&f));
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        Ok(Self::from_parts(f, a))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_rational() || other.is_rational() {
            let (q, v) = match self.as_rational() {
                Some(q) => (q, other),
                None => (other.as_rational().unwrap(), self),
            };
            if q.is_zero() {
                return Ok(Self::zero());
            }
            let coeffs = v.coeffs.iter().map(|c| c * q).collect();
            return Ok(Self::from_parts(Arc::clone(&v.field), coeffs));
        }
        let f = self.common_field(other)?;
        let prod = dense::mul(&self.coeffs, &other.coeffs);
        let reduced = reduce(&f, prod);
        Ok(Self::from_parts(f, reduced))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.common_field(other)?;
        self.checked_mul(&other.inverse()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Phi_r`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        let mut a = self.coeffs.clone();
        dense::trim(&mut a);
        let inv = dense::inverse_mod(&a, &self.field.modulus).ok_or(Error::DivisionByZero)?;
        Ok(Self::from_parts(Arc::clone(&self.field), inv))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inverse()?.pow(exp.unsigned_abs()))
        }
    }

    /// `true` iff `self^k = 1`.
    pub fn is_root_of_unity(&self, k: u32) -> bool {
        self.pow(u64::from(k)).is_one()
    }

    /// Smallest `k >= 1` with `self^k = 1`, searched up to `bound`.
    pub fn multiplicative_order(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }
}

fn reduce(f: &Field, mut v: Vec<Rational>) -> Vec<Rational> {
    let d = f.degree();
    while v.len() > d {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = v.len() - d;
        // Phi is monic: x^d = -(lower terms)
        for (i, m) in f.modulus[..d].iter().enumerate() {
            v[shift + i] -= &top * m;
        }
    }
    v
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(i: i64) -> Self {
        Self::from_integer(i)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<BigInt> for Cyclotomic {
    fn from(i: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(i))
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;

            /// Panics on mismatched orders (or division by zero); use the
            /// `checked_*` methods to get an error instead.
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;

            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;

            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }

        impl $trait<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;

            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl Product for Cyclotomic {
    fn product<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Cyclotomic> for Cyclotomic {
    fn product<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |acc, x| acc * x)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Renders in the scalar grammar, e.g. `1 - 1/2*zeta(5)^3`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write_rational(f, q);
        }
        let r = self.order();
        for (idx, (power, c)) in self.nonzero_terms().enumerate() {
            let negative = c.is_negative();
            match (idx == 0, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if power == 0 {
                write_rational(f, &mag)?;
                continue;
            }
            if !mag.is_one() {
                write_rational(f, &mag)?;
                write!(f, "*")?;
            }
            if power == 1 {
                write!(f, "zeta({r})")?;
            } else {
                write!(f, "zeta({r})^{power}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // Independent oracle: long division of x^r - 1 by the product of the
    // given factors, all done with plain i64 vectors.
    fn oracle_divide(r: usize, factors: &[Vec<i64>]) -> Vec<i64> {
        let mut num = vec![0i64; r + 1];
        num[0] = -1;
        num[r] = 1;
        for fac in factors {
            let d = fac.len() - 1;
            let mut quot = vec![0i64; num.len() - d];
            for shift in (0..quot.len()).rev() {
                let c = num[shift + d] / fac[d];
                quot[shift] = c;
                for (i, y) in fac.iter().enumerate() {
                    num[shift + i] -= c * y;
                }
            }
            assert!(num.iter().all(|&x| x == 0));
            num = quot;
        }
        num
    }

    #[test]
    fn cyclotomic_polynomial_examples() {
        assert_eq!(
            cyclotomic_polynomial(1).coefficients(),
            ints(&[-1, 1]).as_slice()
        );
        assert_eq!(
            cyclotomic_polynomial(3).coefficients(),
            ints(&[1, 1, 1]).as_slice()
        );
        let phi6 = oracle_divide(6, &[vec![-1, 1], vec![1, 1], vec![1, 1, 1]]);
        assert_eq!(phi6, vec![1, -1, 1]);
        assert_eq!(
            cyclotomic_polynomial(6).coefficients(),
            ints(&phi6).as_slice()
        );
        assert_eq!(cyclotomic_polynomial(6).to_string(), "x^2 - x + 1");
        assert_eq!(cyclotomic_polynomial(1).to_string(), "x - 1");
    }

    #[test]
    fn degrees_are_totients_and_monic() {
        for r in 1..=30 {
            let p = cyclotomic_polynomial(r);
            assert_eq!(p.degree(), euler_phi(r), "r={r}");
            assert!(p.coefficients().last().unwrap().is_one());
        }
        assert_eq!(
            cyclotomic_polynomial(12).coefficients(),
            ints(&[1, 0, -1, 0, 1]).as_slice()
        );
    }

    #[test]
    fn zeta_examples() {
        assert!(Cyclotomic::zeta(1).is_one());
        let z = Cyclotomic::zeta(3);
        assert!(z.pow(3).is_one());
        let s = Cyclotomic::one() + &z + z.pow(2);
        assert!(s.is_zero());
    }

    #[test]
    fn arithmetic_examples() {
        let z = Cyclotomic::zeta(3);
        let one = Cyclotomic::one();
        assert!(((&one + &z) * (&one + z.pow(2))).is_one());
        assert_eq!(Cyclotomic::zeta(4).pow(2), Cyclotomic::from_integer(-1));
        let two = Cyclotomic::from_integer(2);
        let a = &two + &z;
        assert!((&a * a.inverse().unwrap()).is_one());
    }

    #[test]
    fn errors() {
        assert_eq!(Cyclotomic::zero().inverse(), Err(Error::DivisionByZero));
        assert_eq!(
            Cyclotomic::one().checked_div(&Cyclotomic::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            Cyclotomic::zeta(3).checked_add(&Cyclotomic::zeta(4)),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        );
        assert!(Cyclotomic::zeta(5)
            .checked_mul(&Cyclotomic::zeta(7))
            .is_err());
    }

    #[test]
    fn roots_of_unity() {
        assert!(Cyclotomic::zeta(3).is_root_of_unity(3));
        assert!(!Cyclotomic::from_integer(2).is_root_of_unity(3));
        // oracle: repeated multiplication with explicit Phi_6 reduction,
        // zeta_6 = x, x^2 = x - 1
        let mut pair = (q(0, 1), q(1, 1)); // a + b x with a=0, b=1 -> x
        let x2 = (q(-1, 1), q(1, 1));
        let mul = |(a, b): (Rational, Rational), (c, d): (Rational, Rational)| {
            // (a + bx)(c + dx) = ac + (ad + bc)x + bd x^2, x^2 = x - 1
            let bd = &b * &d;
            (&a * &c - &bd, &a * &d + &b * &c + bd)
        };
        pair = mul(pair.clone(), pair);
        assert_eq!(pair, x2);
        let cube = mul(mul(pair.clone(), pair.clone()), pair);
        assert_eq!(cube, (q(1, 1), q(0, 1)));
        assert!(Cyclotomic::zeta(6).pow(2).is_root_of_unity(3));
    }

    #[test]
    fn rationals_collapse_to_order_one() {
        let z = Cyclotomic::zeta(5);
        let v = &z - &z + Cyclotomic::from_integer(7);
        assert_eq!(v.order(), 1);
        assert_eq!(v, Cyclotomic::from_integer(7));
        assert_eq!(Cyclotomic::zeta(2), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn display() {
        let z = Cyclotomic::zeta(5);
        let v = Cyclotomic::one() - Cyclotomic::from_rational(q(1, 2)) * z.pow(3);
        assert_eq!(v.to_string(), "1 - 1/2*zeta(5)^3");
        assert_eq!(z.to_string(), "zeta(5)");
        assert_eq!((-z.pow(2)).to_string(), "-zeta(5)^2");
        assert_eq!(Cyclotomic::from_rational(q(-3, 4)).to_string(), "-3/4");
    }
}
