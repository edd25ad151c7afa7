//! Dominant weights, semistandard tableaux and the weight lattice of `e_r`.
//!
//! The lattice check compares two sublattices of `Z^n` through their Hermite
//! normal forms: the span of `(r, 0, ..., 0)` and the weights
//! `lambda_i = (l_i, 1^i, 0^{n-1-i})` with `l_i = r n(n+1)/2 - i`, against
//! `{v : sum(v) = 0 mod r}` with basis `r e_1, e_j - e_1`.

mod lattice;
mod tableau;

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::esym::require_strict_range;
use crate::report::Report;

pub use lattice::{bigint_json, hnf, lattice_membership, IntegerLattice};
pub use tableau::{enumerate_ssyt, is_semistandard, weight_of_tableau, Tableau, WeightVector};

/// Weakly decreasing integer vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(DominantWeight(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        DominantWeight::new(v)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Self {
        w.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `(-lambda_n, ..., -lambda_1)`.
pub fn dual_weight(lambda: &DominantWeight) -> DominantWeight {
    DominantWeight(lambda.0.iter().rev().map(|x| -x).collect())
}

/// Whether the entry sum is divisible by `r`.
pub fn in_lambda_r(lambda: &DominantWeight, r: usize) -> bool {
    lambda.sum().rem_euclid(r as i64) == 0
}

/// `l_i = r n(n+1)/2 - i`.
pub fn leading_entry(n: usize, r: usize, i: usize) -> i64 {
    (r * n * (n + 1) / 2) as i64 - i as i64
}

/// `(l_i, 1 repeated i times, 0 repeated n-1-i times)` for `1 <= i <= n-1`.
pub fn build_lambda_i(n: usize, r: usize, i: usize) -> Result<DominantWeight> {
    if i < 1 || i + 1 > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let mut v = vec![0i64; n];
    v[0] = leading_entry(n, r, i);
    v[1..=i].fill(1);
    DominantWeight::new(v)
}

/// Shape of `lambda_i` as a partition.
fn lambda_i_shape(n: usize, r: usize, i: usize) -> Result<Vec<usize>> {
    let lambda = build_lambda_i(n, r, i)?;
    Ok(lambda
        .entries()
        .iter()
        .filter(|&&x| x > 0)
        .map(|&x| x as usize)
        .collect())
}

/// The multiset `k` repeated `k r` times, `k = 1..n`, in increasing order.
fn filling_values(n: usize, r: usize) -> impl Iterator<Item = u32> {
    (1..=n as u32).flat_map(move |k| std::iter::repeat_n(k, k as usize * r))
}

/// Row-major filling of `lambda_i`: the sorted values `k^(k r)` written
/// left to right along each row, rows taken top to bottom. Semistandard
/// only for `i = 1`; the hanging column otherwise repeats `n`.
pub fn row_major_filling(n: usize, r: usize, i: usize) -> Result<Tableau> {
    let shape = lambda_i_shape(n, r, i)?;
    let mut values = filling_values(n, r);
    Tableau::new(
        shape
            .iter()
            .map(|&len| values.by_ref().take(len).collect())
            .collect(),
    )
}

/// A semistandard tableau of shape `lambda_i` and weight `r (1, 2, ..., n)`:
/// the column under the corner holds `2, ..., i+1` top to bottom and the
/// first row holds the remaining values in increasing order. Both
/// properties are checked before returning.
pub fn canonical_filling(n: usize, r: usize, i: usize) -> Result<Tableau> {
    let shape = lambda_i_shape(n, r, i)?;
    let mut first_row: Vec<u32> = Vec::with_capacity(shape[0]);
    let mut column: Vec<Vec<u32>> = Vec::with_capacity(i);
    let mut next_column_value = 2u32;
    for v in filling_values(n, r) {
        if v == next_column_value && column.len() < i {
            column.push(vec![v]);
            next_column_value += 1;
        } else {
            first_row.push(v);
        }
    }
    let mut rows = vec![first_row];
    rows.extend(column);
    let t = Tableau::new(rows)?;
    let expected: Vec<i64> = (1..=n as i64).map(|k| k * r as i64).collect();
    if t.shape() != shape.as_slice()
        || !is_semistandard(&t)
        || weight_of_tableau(&t, n)?.counts() != expected.as_slice()
    {
        return Err(Error::FillingNotSemistandard(shape));
    }
    Ok(t)
}

/// Whether the `n!` rearrangements of `w` are pairwise distinct, i.e. whether
/// the entries of `w` are.
pub fn orbit_weights_distinct(w: &WeightVector) -> bool {
    let mut sorted = w.counts().to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|p| p[0] != p[1])
}

/// Generators of the lattice spanned by the weights: `(r, 0, ..., 0)` and
/// `lambda_1, ..., lambda_{n-1}`.
pub fn weight_generators(n: usize, r: usize) -> Result<Vec<Vec<i64>>> {
    let mut gens = vec![{
        let mut v = vec![0i64; n];
        v[0] = r as i64;
        v
    }];
    for i in 1..n {
        gens.push(build_lambda_i(n, r, i)?.entries().to_vec());
    }
    Ok(gens)
}

/// `r e_1` and `e_j - e_1` for `2 <= j <= n`: a basis of `{v : sum(v) = 0 mod r}`.
pub fn reference_basis(n: usize, r: usize) -> Vec<Vec<i64>> {
    let mut basis = vec![{
        let mut v = vec![0i64; n];
        v[0] = r as i64;
        v
    }];
    for j in 1..n {
        let mut v = vec![0i64; n];
        v[0] = -1;
        v[j] = 1;
        basis.push(v);
    }
    basis
}

/// Checks that the weight generators span exactly the sum-divisible-by-`r`
/// sublattice of `Z^n`, which has index `r`.
pub fn verify_theorem_group(n: usize, r: usize) -> Result<Report> {
    require_strict_range(n, r)?;
    let gens = weight_generators(n, r)?;
    let generated = IntegerLattice::from_i64(n, &gens)?;
    let reference = IntegerLattice::from_i64(n, &reference_basis(n, r))?;
    let mut report = Report::new("the weight generators span {v in Z^n : sum(v) = 0 mod r}")
        .param("n", n)
        .param("r", r);

    for g in &gens {
        let ok = g.iter().sum::<i64>().rem_euclid(r as i64) == 0;
        report.record(
            ok,
            || json!({"kind": "generator_sum_not_divisible", "generator": g}),
        );
    }
    report.record(generated == reference, || {
        json!({"kind": "hnf_mismatch", "generated": generated.hnf_json(), "reference": reference.hnf_json()})
    });
    let det = generated.determinant();
    report.record(
        det == (r as i64).into(),
        || json!({"kind": "wrong_index", "determinant": bigint_json(&det)}),
    );

    let mut certificates: Vec<Value> = Vec::new();
    for v in reference_basis(n, r) {
        let coords = generated.membership_i64(&v)?;
        let ok = coords
            .as_ref()
            .is_some_and(|z| generated.combine(z) == lattice::to_big(&v));
        report.record(ok, || json!({"kind": "certificate_failed", "vector": v}));
        certificates.push(json!({
            "vector": v,
            "coordinates": coords.map(|z| z.iter().map(bigint_json).collect::<Vec<_>>()),
        }));
    }
    Ok(report.with_details(json!({
        "generators": gens,
        "hnf": generated.hnf_json(),
        "determinant": bigint_json(&det),
        "certificates": certificates,
    })))
}
