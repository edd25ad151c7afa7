use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Subgroup of `Z^n` spanned by a list of column vectors, kept in Hermite
/// normal form.
///
/// The form is column-style echelon: the lowest nonzero entry of each column
/// is its pivot, pivot rows strictly increase from left to right, pivots are
/// positive, and every entry to the right of a pivot in the pivot's row lies
/// in `[0, pivot)`. Two generator lists span the same lattice iff their forms
/// are equal.
#[derive(Debug, Clone)]
pub struct IntegerLattice {
    n: usize,
    generators: Vec<Vec<BigInt>>,
    hnf: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    // column j of hnf = generators * transform[j]
    transform: Vec<Vec<BigInt>>,
}

impl PartialEq for IntegerLattice {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.hnf == other.hnf
    }
}

impl Eq for IntegerLattice {}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// JSON number when it fits in `i64`, decimal string otherwise.
pub fn bigint_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

fn axpy(target: &mut [BigInt], q: &BigInt, source: &[BigInt]) {
    for (t, s) in target.iter_mut().zip(source) {
        *t -= q * s;
    }
}

impl IntegerLattice {
    pub fn new(n: usize, generators: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let m = generators.len();
        let mut cols = generators.clone();
        let mut trans: Vec<Vec<BigInt>> = (0..m)
            .map(|j| {
                (0..m)
                    .map(|k| {
                        if j == k {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();

        // Bottom-up echelon: for each row, gcd-combine the unused columns so
        // that at most one keeps a nonzero entry there.
        let mut active: Vec<usize> = (0..m).collect();
        let mut pivot_cols: Vec<(usize, usize)> = Vec::new();
        for row in (0..n).rev() {
            loop {
                let nonzero: Vec<usize> = active
                    .iter()
                    .copied()
                    .filter(|&c| !cols[c][row].is_zero())
                    .collect();
                if nonzero.len() <= 1 {
                    if let Some(&c) = nonzero.first() {
                        if cols[c][row].is_negative() {
                            cols[c].iter_mut().for_each(|x| *x = -&*x);
                            trans[c].iter_mut().for_each(|x| *x = -&*x);
                        }
                        pivot_cols.push((row, c));
                        active.retain(|&a| a != c);
                    }
                    break;
                }
                let &best = nonzero
                    .iter()
                    .min_by_key(|&&c| cols[c][row].magnitude().clone())
                    .expect("nonempty");
                for &c in &nonzero {
                    if c == best {
                        continue;
                    }
                    let q = cols[c][row].div_floor(&cols[best][row]);
                    let (src, src_t) = (cols[best].clone(), trans[best].clone());
                    axpy(&mut cols[c], &q, &src);
                    axpy(&mut trans[c], &q, &src_t);
                }
            }
        }
        pivot_cols.sort_unstable();
        let pivots: Vec<usize> = pivot_cols.iter().map(|&(row, _)| row).collect();
        let mut hnf: Vec<Vec<BigInt>> = pivot_cols.iter().map(|&(_, c)| cols[c].clone()).collect();
        let mut transform: Vec<Vec<BigInt>> =
            pivot_cols.iter().map(|&(_, c)| trans[c].clone()).collect();

        // Reduce entries right of each pivot, highest pivot row first so that
        // later subtractions only touch rows above those already reduced.
        for k in 0..hnf.len() {
            for j in (0..k).rev() {
                let p = pivots[j];
                let q = hnf[k][p].div_floor(&hnf[j][p]);
                if !q.is_zero() {
                    let (src, src_t) = (hnf[j].clone(), transform[j].clone());
                    axpy(&mut hnf[k], &q, &src);
                    axpy(&mut transform[k], &q, &src_t);
                }
            }
        }
        Ok(IntegerLattice {
            n,
            generators,
            hnf,
            pivots,
            transform,
        })
    }

    pub fn from_i64(n: usize, generators: &[Vec<i64>]) -> Result<Self> {
        IntegerLattice::new(n, generators.iter().map(|g| to_big(g)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.hnf.len()
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// Columns of the normal form.
    pub fn hnf_columns(&self) -> &[Vec<BigInt>] {
        &self.hnf
    }

    /// The normal form as an `n x rank` matrix, listed by rows.
    pub fn hnf_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| self.hnf.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    pub fn hnf_json(&self) -> Value {
        Value::Array(
            self.hnf_rows()
                .iter()
                .map(|row| Value::Array(row.iter().map(bigint_json).collect()))
                .collect(),
        )
    }

    /// Index of the lattice in `Z^n` (product of pivots); zero below full rank.
    pub fn determinant(&self) -> BigInt {
        if self.rank() < self.n {
            return BigInt::zero();
        }
        self.hnf
            .iter()
            .zip(&self.pivots)
            .map(|(c, &p)| c[p].clone())
            .product()
    }

    /// `sum_j z_j * generator_j`.
    pub fn combine(&self, z: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.n];
        for (g, zj) in self.generators.iter().zip(z) {
            for (o, x) in out.iter_mut().zip(g) {
                *o += zj * x;
            }
        }
        out
    }

    /// Integer coordinates of `v` with respect to the generators, or `None`
    /// when `v` is not in the lattice.
    pub fn membership(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        let mut residual = v.to_vec();
        let mut y = vec![BigInt::zero(); self.hnf.len()];
        let mut j = self.hnf.len();
        for row in (0..self.n).rev() {
            if j > 0 && self.pivots[j - 1] == row {
                j -= 1;
                let (q, rem) = residual[row].div_rem(&self.hnf[j][row]);
                if !rem.is_zero() {
                    return Ok(None);
                }
                axpy(&mut residual, &q, &self.hnf[j]);
                y[j] = q;
            } else if !residual[row].is_zero() {
                return Ok(None);
            }
        }
        let mut z = vec![BigInt::zero(); self.generators.len()];
        for (yj, t) in y.iter().zip(&self.transform) {
            for (zk, tk) in z.iter_mut().zip(t) {
                *zk += yj * tk;
            }
        }
        Ok(Some(z))
    }

    pub fn membership_i64(&self, v: &[i64]) -> Result<Option<Vec<BigInt>>> {
        self.membership(&to_big(v))
    }
}

/// Normal form of the span of `generators` in `Z^n`.
pub fn hnf(n: usize, generators: &[Vec<i64>]) -> Result<IntegerLattice> {
    IntegerLattice::from_i64(n, generators)
}

pub fn lattice_membership(lattice: &IntegerLattice, v: &[i64]) -> Result<Option<Vec<BigInt>>> {
    lattice.membership_i64(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| to_big(r)).collect()
    }

    #[test]
    fn hnf_examples() {
        let l = hnf(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(l.hnf_rows(), big_rows(&[&[2, 0], &[0, 2]]));
        let l = hnf(2, &[vec![1, 0], vec![0, 1], vec![5, 7]]).unwrap();
        assert_eq!(l.hnf_rows(), big_rows(&[&[1, 0], &[0, 1]]));
        let l = hnf(3, &[vec![3, 0, 0], vec![-1, 1, 0], vec![-1, 0, 1]]).unwrap();
        assert_eq!(l.determinant(), BigInt::from(3));
        assert!(matches!(
            hnf(2, &[vec![1, 2, 3]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn entries_right_of_pivots_are_reduced() {
        let l = hnf(3, &[vec![4, 0, 0], vec![7, 3, 0], vec![-5, 11, 2]]).unwrap();
        let rows = l.hnf_rows();
        for (j, &p) in l.pivots.iter().enumerate() {
            assert!(rows[p][j].is_positive());
            for k in j + 1..l.rank() {
                assert!(!rows[p][k].is_negative() && rows[p][k] < rows[p][j]);
            }
            assert!(rows[p + 1..].iter().all(|r| r[j].is_zero()));
        }
        assert_eq!(l.determinant(), BigInt::from(24));
    }

    #[test]
    fn rank_deficient_lattices() {
        let l = hnf(3, &[vec![2, 4, 0], vec![1, 2, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(l.rank(), 1);
        assert_eq!(l.hnf_columns(), big_rows(&[&[1, 2, 0]]).as_slice());
        assert!(l.determinant().is_zero());
        assert!(hnf(2, &[])
            .unwrap()
            .membership_i64(&[1, 0])
            .unwrap()
            .is_none());
    }

    #[test]
    fn membership_examples() {
        let l = hnf(2, &[vec![3, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            lattice_membership(&l, &[0, 0]).unwrap(),
            Some(to_big(&[0, 0]))
        );
        assert_eq!(
            lattice_membership(&l, &[6, 5]).unwrap(),
            Some(to_big(&[2, 5]))
        );
        assert_eq!(lattice_membership(&l, &[1, 0]).unwrap(), None);
        assert!(lattice_membership(&l, &[1]).is_err());
    }

    #[test]
    fn membership_certificates_reconstruct_the_vector() {
        let l = hnf(
            3,
            &[vec![3, 0, 0], vec![29, 1, 0], vec![28, 1, 1], vec![5, 5, 5]],
        )
        .unwrap();
        for v in [vec![1, -1, 0], vec![0, 1, 2], vec![-7, 4, 6]] {
            let z = l.membership_i64(&v).unwrap().expect("sum divisible by 3");
            assert_eq!(l.combine(&z), to_big(&v));
        }
        assert!(l.membership_i64(&[1, 0, 0]).unwrap().is_none());
    }
}
