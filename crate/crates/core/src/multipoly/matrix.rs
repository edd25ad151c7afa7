use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Dense `n x n` matrix over [`Scalar`], row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { n, entries })
    }

    /// Convenience for integer fixtures.
    ///
    /// # Panics
    ///
    /// Panics if the rows do not form a square.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .iter()
                    .map(|&x| Scalar::from_integer(x))
                    .collect()
            })
            .collect();
        Self::from_rows(rows).expect("rows must form a square matrix")
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        SquareMatrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| Scalar::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    /// `c * I`.
    pub fn scalar(n: usize, c: Scalar) -> Self {
        Self::from_fn(n, |i, j| if i == j { c.clone() } else { Scalar::zero() })
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        Self::from_fn(
            d.len(),
            |i, j| if i == j { d[i].clone() } else { Scalar::zero() },
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn checked_scale(&self, c: &Scalar) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|x| x.checked_mul(c))
            .collect::<Result<_>>()?;
        Ok(SquareMatrix { n: self.n, entries })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Scalar::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(&a.checked_mul(other.get(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(SquareMatrix { n, entries })
    }

    /// `self * v`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .try_fold(Scalar::zero(), |acc, (a, x)| {
                        if a.is_zero() || x.is_zero() {
                            Ok(acc)
                        } else {
                            acc.checked_add(&a.checked_mul(x)?)
                        }
                    })
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Scalar> {
        let n = self.n;
        if n == 0 {
            return Ok(Scalar::one());
        }
        let mut m = self.rows();
        let mut sign_flip = false;
        let mut prev = Scalar::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(p) => {
                        m.swap(k, p);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(Scalar::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m[i][j]
                        .checked_mul(&m[k][k])?
                        .checked_sub(&m[i][k].checked_mul(&m[k][j])?)?;
                    m[i][j] = t.checked_div(&prev)?;
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign_flip { -det } else { det })
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(!self.determinant()?.is_zero())
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.rows();
        let mut inv = SquareMatrix::identity(n).rows();
        for col in 0..n {
            let p = (col..n)
                .find(|&i| !a[i][col].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(col, p);
            inv.swap(col, p);
            let pivot_inv = a[col][col].inverse()?;
            for j in 0..n {
                a[col][j] = a[col][j].checked_mul(&pivot_inv)?;
                inv[col][j] = inv[col][j].checked_mul(&pivot_inv)?;
            }
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let factor = a[i][col].clone();
                for j in 0..n {
                    a[i][j] = a[i][j].checked_sub(&factor.checked_mul(&a[col][j])?)?;
                    inv[i][j] = inv[i][j].checked_sub(&factor.checked_mul(&inv[col][j])?)?;
                }
            }
        }
        Self::from_rows(inv)
    }

    /// Submatrix on the rows and columns listed in `indices`.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |i, j| {
            self.get(indices[i], indices[j]).clone()
        })
    }

    pub fn trace(&self) -> Result<Scalar> {
        (0..self.n).try_fold(Scalar::zero(), |acc, i| acc.checked_add(self.get(i, i)))
    }

    /// Number of nonzero entries in each column.
    pub fn column_support_sizes(&self) -> Vec<usize> {
        (0..self.n)
            .map(|j| (0..self.n).filter(|&i| !self.get(i, j).is_zero()).count())
            .collect()
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;

    /// Panics on dimension or scalar-order mismatch.
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

/// `[[a, b], [c, d]]` with entries in the scalar grammar.
impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
