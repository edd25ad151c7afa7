//! Elementary symmetric polynomials in their vector and matrix forms.

use crate::combinat::colex_subsets;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::multipoly::{Monomial, Polynomial, SquareMatrix, UnivariatePoly};

/// Degree `r` elementary symmetric polynomial in `n` variables, `1 <= r <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EsymSpec {
    n: usize,
    r: usize,
}

impl EsymSpec {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r < 1 || r > n {
            return Err(Error::DegreeOutOfRange { n, r });
        }
        Ok(EsymSpec { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Fails unless `2 < r < n`, the range in which the stabilizer is `S_n x Z_r`.
    pub fn require_strict_range(&self) -> Result<()> {
        require_strict_range(self.n, self.r)
    }
}

pub(crate) fn require_strict_range(n: usize, r: usize) -> Result<()> {
    if 2 < r && r < n {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange {
            n,
            r,
            requirement: "2 < r < n",
        })
    }
}

/// `e_r(X_1, ..., X_n)`: the sum over all `r`-subsets of the product of the subset.
pub fn elementary(spec: EsymSpec) -> Polynomial {
    let terms =
        colex_subsets(spec.n, spec.r).map(|s| (Monomial::product_of(spec.n, &s), Scalar::one()));
    Polynomial::from_terms(spec.n, terms).expect("integer coefficients never mismatch")
}

/// Number of nonzero entries.
pub fn rho(a: &[Scalar]) -> usize {
    a.iter().filter(|x| !x.is_zero()).count()
}

/// `e_k` evaluated at `values`, via the recurrence on `prod (1 + v_i t)`.
///
/// `k = 0` gives 1 and `k > values.len()` gives 0.
pub fn elementary_value(values: &[Scalar], k: usize) -> Result<Scalar> {
    // e[j] = e_j of the prefix seen so far
    let mut e = vec![Scalar::zero(); k + 1];
    e[0] = Scalar::one();
    for (seen, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        for j in (1..=k.min(seen + 1)).rev() {
            if e[j - 1].is_zero() {
                continue;
            }
            e[j] = e[j].checked_add(&e[j - 1].checked_mul(v)?)?;
        }
    }
    Ok(e.swap_remove(k))
}

/// `f_{a,b}(T) = e_r(T a + b)`.
pub fn f_ab(spec: EsymSpec, a: &[Scalar], b: &[Scalar]) -> Result<UnivariatePoly> {
    elementary(spec).specialize_line(a, b)
}

/// Sum of all principal `r x r` minors of `x`, i.e. `e_r` of its eigenvalues.
pub fn minor_esym(x: &SquareMatrix, r: usize) -> Result<Scalar> {
    let n = x.dim();
    if r < 1 || r > n {
        return Err(Error::DegreeOutOfRange { n, r });
    }
    colex_subsets(n, r).try_fold(Scalar::zero(), |acc, idx| {
        acc.checked_add(&x.principal_submatrix(&idx).determinant()?)
    })
}
