//! Sparse multivariate polynomials over [`Scalar`](crate::Scalar), square
//! matrices acting on them by linear substitution, and univariate
//! restrictions to affine lines.

mod matrix;
mod monomial;
mod polynomial;
mod univariate;

pub use matrix::SquareMatrix;
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use univariate::UnivariatePoly;
