use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, SquareMatrix, UnivariatePoly};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Sparse polynomial in `X1..Xn` with nonzero [`Scalar`] coefficients.
///
/// Terms are kept in graded reverse-lexicographic order, so equality is
/// structural and iteration/printing is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

fn arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch { expected, found })
    }
}

fn add_term(terms: &mut BTreeMap<Monomial, Scalar>, mono: Monomial, coeff: Scalar) -> Result<()> {
    if coeff.is_zero() {
        return Ok(());
    }
    match terms.entry(mono) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().checked_add(&coeff)?;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
    Ok(())
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    /// The variable `X_{i+1}` (0-based `i`).
    ///
    /// # Panics
    ///
    /// Panics if `i >= nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        Self::monomial(Monomial::var(nvars, i, 1), Scalar::one())
    }

    pub fn monomial(mono: Monomial, coeff: Scalar) -> Self {
        let mut p = Self::zero(mono.nvars());
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    /// Sums the given terms; duplicate monomials are combined.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            arity(nvars, m.nvars())?;
            add_term(&mut p.terms, m, c)?;
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Scalar {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, if there is one and the polynomial is nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.terms.keys().all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Re-embeds into `nvars >= self.nvars()` variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        if nvars < self.nvars {
            // shrinking is only allowed if the dropped variables are unused
            if self
                .terms
                .keys()
                .any(|m| m.exponents()[nvars..].iter().any(|&e| e != 0))
            {
                return Err(Error::ArityMismatch {
                    expected: self.nvars,
                    found: nvars,
                });
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.resize(nvars, 0);
                (Monomial::new(e), c.clone())
            })
            .collect();
        Ok(Polynomial { nvars, terms })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        arity(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        arity(self.nvars, other.nvars)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                add_term(&mut out.terms, ma.mul(mb), ca.checked_mul(cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn checked_scale(&self, c: &Scalar) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (m, a) in &self.terms {
            add_term(&mut out.terms, m.clone(), a.checked_mul(c)?)?;
        }
        Ok(out)
    }

    pub fn checked_pow(&self, exp: u32) -> Result<Self> {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Replaces `X_i` by `images[i]`; all images share one variable count,
    /// which becomes the variable count of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Self> {
        arity(self.nvars, images.len())?;
        let target = images.first().map_or(0, Polynomial::nvars);
        for img in images {
            arity(target, img.nvars)?;
        }
        // powers[i][e] = images[i]^e, built on demand up to the largest exponent used
        let mut max_exp = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (slot, &e) in max_exp.iter_mut().zip(m.exponents()) {
                *slot = (*slot).max(e);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(self.nvars);
        for (img, &top) in images.iter().zip(&max_exp) {
            let mut row = vec![Polynomial::one(target)];
            for e in 1..=top as usize {
                row.push(row[e - 1].checked_mul(img)?);
            }
            powers.push(row);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.checked_mul(&powers[i][e as usize])?;
                }
            }
            for (tm, tc) in term.terms {
                add_term(&mut out.terms, tm, tc)?;
            }
        }
        Ok(out)
    }

    /// `p o g`: substitutes `X_i -> sum_j g_ij X_j`, so `(p o g)(x) = p(g x)`.
    pub fn compose_linear(&self, g: &SquareMatrix) -> Result<Self> {
        arity(self.nvars, g.dim())?;
        let n = self.nvars;
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                let terms = (0..n).map(|j| (Monomial::var(n, j, 1), g.get(i, j).clone()));
                Polynomial::from_terms(n, terms)
            })
            .collect::<Result<_>>()?;
        self.substitute(&images)
    }

    /// Restriction to the line `t -> t*a + b`, as a polynomial in `T`.
    pub fn specialize_line(&self, a: &[Scalar], b: &[Scalar]) -> Result<UnivariatePoly> {
        arity(self.nvars, a.len())?;
        arity(self.nvars, b.len())?;
        let lines: Vec<UnivariatePoly> = a
            .iter()
            .zip(b)
            .map(|(ai, bi)| UnivariatePoly::linear(ai.clone(), bi.clone()))
            .collect();
        let mut out = UnivariatePoly::zero();
        for (m, c) in &self.terms {
            let mut term = UnivariatePoly::constant(c.clone());
            for (line, &e) in lines.iter().zip(m.exponents()) {
                for _ in 0..e {
                    term = term.checked_mul(line)?;
                }
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    pub fn evaluate(&self, x: &[Scalar]) -> Result<Scalar> {
        arity(self.nvars, x.len())?;
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(m.exponents()) {
                if e > 0 {
                    t = t.checked_mul(&xi.pow(u64::from(e)))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics on arity or scalar-order mismatch.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

/// Canonical text form, largest monomial first, e.g. `X1^2 - 1/2*X2 + (1 + zeta(3))`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let first = idx == 0;
            let constant = m.is_one();
            // (negative, coefficient text without the sign)
            let (negative, body) = match c.as_rational() {
                Some(q) => {
                    let mag = Scalar::from_rational(num_traits::Signed::abs(q));
                    let neg = num_traits::Signed::is_negative(q);
                    if mag.is_one() && !constant {
                        (neg, String::new())
                    } else {
                        (neg, mag.to_string())
                    }
                }
                None if c.nonzero_terms().count() == 1 => {
                    let (_, q) = c.nonzero_terms().next().unwrap();
                    let neg = num_traits::Signed::is_negative(q);
                    let text = if neg { (-c).to_string() } else { c.to_string() };
                    (neg, text)
                }
                None => (false, format!("({c})")),
            };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            write!(f, "{body}")?;
            if !constant {
                if !body.is_empty() {
                    write!(f, "*")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}
