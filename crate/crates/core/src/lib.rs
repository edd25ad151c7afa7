//! Exact computational algebra around the elementary symmetric polynomials.
//!
//! The crate builds everything needed to check, in exact arithmetic, which
//! invertible linear substitutions leave `e_r(X_1, ..., X_n)` unchanged:
//!
//! * [`exactnum`]: rationals and the cyclotomic fields `Q(zeta_r)`.
//! * [`multipoly`]: sparse multivariate polynomials, square matrices and
//!   univariate restrictions to affine lines.
//! * [`esym`]: elementary symmetric polynomials, `rho`, `f_{a,b}` and sums of
//!   principal minors.
//! * [`groups`]: permutations, monomial matrices and the group
//!   `S_n x Z_r` with its matrix realization.
//! * [`stabilizer`]: membership tests, the rank criterion on lines, the
//!   stabilizer decomposition and the randomized verification drivers.
//! * [`weights`]: dominant weights, semistandard tableaux and integer
//!   lattices in Hermite normal form.
//! * [`parse`] and [`cli`]: the text grammar and the `esym` command line.
//!
//! Heavy verification sweeps run on rayon when the `parallel` feature is
//! enabled (the default); see [`exec::Exec`].

pub mod cli;
pub mod combinat;
pub mod error;
pub mod esym;
pub mod exactnum;
pub mod exec;
pub mod groups;
pub mod multipoly;
pub mod parse;
pub mod report;
pub mod sampling;
pub mod stabilizer;
pub mod weights;

pub use error::{Error, Result};
pub use exactnum::{Cyclotomic, CyclotomicPoly, Rational, Scalar};
pub use exec::Exec;
pub use multipoly::{Monomial, Polynomial, SquareMatrix, UnivariatePoly};
pub use report::Report;
