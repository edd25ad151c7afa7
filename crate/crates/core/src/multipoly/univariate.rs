use std::fmt;

use crate::error::Result;
use crate::exactnum::Scalar;

/// Dense univariate polynomial in `T`; `coeffs[k]` multiplies `T^k`.
///
/// The leading stored coefficient is nonzero; the zero polynomial has no
/// coefficients and degree `None` (below every natural degree).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UnivariatePoly {
    coeffs: Vec<Scalar>,
}

impl UnivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `slope * T + intercept`.
    pub fn linear(slope: Scalar, intercept: Scalar) -> Self {
        Self::from_coeffs(vec![intercept, slope])
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.coefficient(k).checked_add(&other.coefficient(k)))
            .collect::<Result<_>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].checked_add(&a.checked_mul(b)?)?;
            }
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn checked_scale(&self, c: &Scalar) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(c))
            .collect::<Result<_>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    /// Horner evaluation at `t`.
    pub fn evaluate(&self, t: &Scalar) -> Result<Scalar> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(Scalar::zero(), |acc, c| acc.checked_mul(t)?.checked_add(c))
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*T")?,
                _ => write!(f, "({c})*T^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sentinel_is_below_zero() {
        assert_eq!(UnivariatePoly::zero().degree(), None);
        assert!(UnivariatePoly::zero().degree() < Some(0));
        assert_eq!(
            UnivariatePoly::constant(Scalar::from_integer(3)).degree(),
            Some(0)
        );
        assert_eq!(UnivariatePoly::constant(Scalar::zero()).degree(), None);
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let s = |i| Scalar::from_integer(i);
        let p = UnivariatePoly::linear(s(1), s(2)); // T + 2
        let q = UnivariatePoly::linear(s(1), s(-2)); // T - 2
        let pq = p.checked_mul(&q).unwrap();
        assert_eq!(pq.coefficients(), &[s(-4), s(0), s(1)]);
        assert_eq!(pq.evaluate(&s(3)).unwrap(), s(5));
        let sum = p.checked_add(&q).unwrap();
        assert_eq!(sum.coefficients(), &[s(0), s(2)]);
    }
}
