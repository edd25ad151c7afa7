//! Permutations, monomial matrices, and the group `S_n x Z_r` realized as
//! the matrices `zeta_r^k * P_pi`.
//!
//! Permutations act on 0-based indices internally and are rendered 1-based.
//! The permutation matrix of `pi` sends `e_j` to `e_{pi(j)}`, so
//! `P_{sigma o tau} = P_sigma P_tau`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::permutations;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::multipoly::SquareMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 0-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(images));
            }
        }
        Ok(Permutation { images })
    }

    /// From 1-based images, as written in one-line notation.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(images.to_vec()));
        }
        Self::new(images.iter().map(|&i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Cycle `(0 1 ... n-1)`.
    pub fn cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// Swaps 0-based `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self o other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Permutation { images }
    }

    pub fn matrix(&self) -> SquareMatrix {
        SquareMatrix::from_fn(self.len(), |i, j| {
            if self.images[j] == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    /// All permutations of `n` points, lexicographic in their image sequences.
    pub fn all(n: usize) -> Vec<Permutation> {
        permutations(n)
            .into_iter()
            .map(|images| Permutation { images })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, "]")
    }
}

/// `P_pi * diag(d)`: column `j` holds `d_j` in row `pi(j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    perm: Permutation,
    diagonal: Vec<Scalar>,
}

impl MonomialMatrix {
    pub fn new(perm: Permutation, diagonal: Vec<Scalar>) -> Result<Self> {
        if perm.len() != diagonal.len() {
            return Err(Error::DimensionMismatch {
                expected: perm.len(),
                found: diagonal.len(),
            });
        }
        if diagonal.iter().any(Scalar::is_zero) {
            return Err(Error::Singular);
        }
        Ok(MonomialMatrix { perm, diagonal })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn diagonal(&self) -> &[Scalar] {
        &self.diagonal
    }

    pub fn to_matrix(&self) -> SquareMatrix {
        SquareMatrix::from_fn(self.perm.len(), |i, j| {
            if self.perm.apply(j) == i {
                self.diagonal[j].clone()
            } else {
                Scalar::zero()
            }
        })
    }

    /// The common diagonal entry, if the diagonal part is scalar.
    pub fn scalar_part(&self) -> Option<&Scalar> {
        let first = self.diagonal.first()?;
        self.diagonal.iter().all(|d| d == first).then_some(first)
    }
}

/// Factors a matrix with exactly one nonzero entry per row and column.
pub fn decompose_monomial(m: &SquareMatrix) -> Result<MonomialMatrix> {
    let n = m.dim();
    let mut images = Vec::with_capacity(n);
    let mut diagonal = Vec::with_capacity(n);
    for j in 0..n {
        let mut support = (0..n).filter(|&i| !m.get(i, j).is_zero());
        let (Some(i), None) = (support.next(), support.next()) else {
            let count = (0..n).filter(|&i| !m.get(i, j).is_zero()).count();
            return Err(Error::NotMonomial(format!(
                "column {} has {count} nonzero entries",
                j + 1
            )));
        };
        images.push(i);
        diagonal.push(m.get(i, j).clone());
    }
    let perm = Permutation::new(images)
        .map_err(|_| Error::NotMonomial("two columns share a nonzero row".into()))?;
    MonomialMatrix::new(perm, diagonal)
}

/// The pair `(pi, zeta_r^k)`, standing for the matrix `zeta_r^k * P_pi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StabElement {
    #[serde(rename = "perm", with = "one_based")]
    perm: Permutation,
    k: u32,
    r: u32,
}

mod one_based {
    use super::Permutation;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(p: &Permutation, s: S) -> Result<S::Ok, S::Error> {
        p.one_based().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Permutation, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&v).map_err(D::Error::custom)
    }
}

impl StabElement {
    /// `k` is reduced modulo `r`.
    ///
    /// # Panics
    ///
    /// Panics if `r == 0`.
    pub fn new(perm: Permutation, k: u32, r: u32) -> Self {
        assert!(r >= 1, "r must be positive");
        StabElement { perm, k: k % r, r }
    }

    pub fn identity(n: usize, r: u32) -> Self {
        Self::new(Permutation::identity(n), 0, r)
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn omega(&self) -> Scalar {
        Scalar::zeta_pow(self.r, u64::from(self.k))
    }

    /// Componentwise product: scalar matrices are central.
    pub fn product(&self, other: &StabElement) -> Result<StabElement> {
        if self.r != other.r || self.n() != other.n() {
            return Err(Error::ParameterMismatch(format!(
                "(n={}, r={}) vs (n={}, r={})",
                self.n(),
                self.r,
                other.n(),
                other.r
            )));
        }
        Ok(StabElement::new(
            self.perm.compose(&other.perm),
            (self.k + other.k) % self.r,
            self.r,
        ))
    }

    pub fn inverse(&self) -> StabElement {
        StabElement::new(self.perm.inverse(), (self.r - self.k) % self.r, self.r)
    }

    pub fn to_monomial(&self) -> MonomialMatrix {
        MonomialMatrix::new(self.perm.clone(), vec![self.omega(); self.n()])
            .expect("roots of unity are nonzero")
    }

    pub fn to_matrix(&self) -> SquareMatrix {
        self.to_monomial().to_matrix()
    }
}

impl fmt::Display for StabElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * zeta({})^{}", self.perm, self.r, self.k)
    }
}

/// All `n! * r` elements, lexicographic in the permutation, then by `k`.
pub fn enumerate_group(n: usize, r: u32) -> Vec<StabElement> {
    Permutation::all(n)
        .into_iter()
        .flat_map(|p| (0..r).map(move |k| StabElement::new(p.clone(), k, r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use std::collections::{HashSet, VecDeque};

    use super::*;

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert_eq!(
            Permutation::from_one_based(&[2, 1]).unwrap().to_string(),
            "[2 1]"
        );
    }

    #[test]
    fn matrix_is_a_homomorphism() {
        let a = Permutation::cycle(4);
        let b = Permutation::transposition(4, 0, 2);
        assert_eq!(a.compose(&b).matrix(), &a.matrix() * &b.matrix());
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn group_product_examples() {
        let r = 3;
        let pi = Permutation::cycle(4);
        let g = StabElement::new(pi.clone(), 1, r);
        let id = StabElement::identity(4, r);
        assert_eq!(id.product(&g).unwrap(), g);
        let inv = StabElement::new(pi.inverse(), r - 1, r);
        assert_eq!(g.product(&inv).unwrap(), id);
        assert!(matches!(
            g.product(&StabElement::identity(4, 4)),
            Err(Error::ParameterMismatch(_))
        ));
    }

    #[test]
    fn closure_of_generators_has_order_72() {
        // breadth-first closure under right multiplication by generators
        let gens = [
            StabElement::new(Permutation::transposition(4, 0, 1), 0, 3),
            StabElement::new(Permutation::cycle(4), 0, 3),
            StabElement::new(Permutation::identity(4), 1, 3),
        ];
        let start = StabElement::identity(4, 3);
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(g) = queue.pop_front() {
            for h in &gens {
                let p = g.product(h).unwrap();
                if seen.insert(p.clone()) {
                    queue.push_back(p);
                }
            }
        }
        assert_eq!(seen.len(), 72);
        let listed: HashSet<_> = enumerate_group(4, 3).into_iter().collect();
        assert_eq!(seen, listed);
    }

    #[test]
    fn enumerate_counts_and_order() {
        assert_eq!(enumerate_group(2, 1).len(), 2);
        assert_eq!(enumerate_group(4, 3).len(), 72);
        assert_eq!(enumerate_group(5, 4).len(), 480);
        let g = enumerate_group(3, 2);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn to_matrix_examples() {
        assert_eq!(
            StabElement::identity(3, 4).to_matrix(),
            SquareMatrix::identity(3)
        );
        let g = StabElement::new(Permutation::identity(3), 1, 4);
        assert_eq!(g.to_matrix(), SquareMatrix::scalar(3, Scalar::zeta(4)));
    }

    #[test]
    fn decompose_examples() {
        let id = decompose_monomial(&SquareMatrix::identity(3)).unwrap();
        assert!(id.perm().is_identity());
        assert_eq!(
            id.diagonal(),
            &[Scalar::one(), Scalar::one(), Scalar::one()]
        );

        let anti = SquareMatrix::from_i64_rows(&[[0, 0, 2], [0, 2, 0], [2, 0, 0]]);
        let m = decompose_monomial(&anti).unwrap();
        assert_eq!(m.perm().one_based(), vec![3, 2, 1]);
        assert_eq!(m.scalar_part(), Some(&Scalar::from_integer(2)));
        assert_eq!(m.to_matrix(), anti);

        let shear = SquareMatrix::from_i64_rows(&[[1, 1], [0, 1]]);
        assert!(matches!(
            decompose_monomial(&shear),
            Err(Error::NotMonomial(_))
        ));
        let zero_col = SquareMatrix::from_i64_rows(&[[1, 0], [0, 0]]);
        assert!(matches!(
            decompose_monomial(&zero_col),
            Err(Error::NotMonomial(_))
        ));
        let shared_row = SquareMatrix::from_i64_rows(&[[1, 1], [0, 0]]);
        assert!(matches!(
            decompose_monomial(&shared_row),
            Err(Error::NotMonomial(_))
        ));
        assert_eq!(
            MonomialMatrix::new(
                Permutation::identity(2),
                vec![Scalar::one(), Scalar::zero()]
            ),
            Err(Error::Singular)
        );
    }

    #[test]
    fn serde_uses_one_based_perms() {
        let g = StabElement::new(Permutation::cycle(3), 2, 3);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"perm":[2,3,1],"k":2,"r":3}"#);
        let back: StabElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }
}
