use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial `X_1^e_1 * ... * X_n^e_n`.
///
/// Ordered by graded reverse-lexicographic order: higher total degree first
/// compares greater; ties are broken at the last differing variable, where
/// the smaller exponent wins.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// `X_{var+1}^exp` (0-based `var`).
    pub fn var(n: usize, var: usize, exp: u32) -> Self {
        let mut e = vec![0; n];
        e[var] = exp;
        Monomial(e)
    }

    /// Product of the variables in `vars` (0-based, repeats allowed).
    pub fn product_of(n: usize, vars: &[usize]) -> Self {
        let mut e = vec![0; n];
        for &v in vars {
            e[v] += 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `X1^2*X3`; the empty product renders as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "X{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_order() {
        let m = |v: &[u32]| Monomial::new(v.to_vec());
        // degree dominates
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        // x1^2 > x1 x2 > x2^2 > x1 x3 > x2 x3 > x3^2
        let chain = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        assert!(chain.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(vec![2, 0, 1]).to_string(), "X1^2*X3");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }
}
