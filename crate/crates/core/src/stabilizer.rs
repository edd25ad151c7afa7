//! Stabilizer of `e_r` under invertible linear substitutions.
//!
//! The membership test is exact coefficient comparison of `e_r o g` with
//! `e_r`. Everything else here follows the structure of the classification
//! argument: a line `t -> t*a + b` meets `e_r` in degree at most one for
//! every `b` exactly when `a` has at most one nonzero entry; stabilizers must
//! therefore send basis vectors to multiples of basis vectors, i.e. be
//! monomial; and a monomial stabilizer has a scalar diagonal made of an
//! `r`-th root of unity.
//!
//! The randomized drivers (`verify_theorem1`, `mpb_invariance_check`, ...)
//! seed candidate `i` independently (see [`crate::sampling`]) and may run on
//! rayon; reports list candidates in index order either way.

use rand::Rng;
use serde_json::{json, Value};

use crate::combinat::colex_subsets;
use crate::error::{Error, Result};
use crate::esym::{
    elementary, elementary_value, f_ab, minor_esym, require_strict_range, rho, EsymSpec,
};
use crate::exactnum::Scalar;
use crate::exec::Exec;
use crate::groups::{decompose_monomial, enumerate_group, Permutation, StabElement};
use crate::multipoly::{Polynomial, SquareMatrix};
use crate::parse::{matrix_to_json, vector_to_json};
use crate::report::Report;
use crate::sampling::{
    candidate_rng, nonzero_rational, random_bad_monomial, random_dense_nonmonomial,
    random_invertible, random_permutation, random_rational_matrix, random_shear,
    random_stab_element, sparse_rational_vector,
};

// Stream offsets keep the candidate families of one run independent.
const PHASE_STRIDE: u64 = 1 << 32;

fn stream(phase: u64, index: usize) -> u64 {
    phase * PHASE_STRIDE + index as u64
}

fn arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch { expected, found })
    }
}

/// `true` iff `p o g = p` exactly.
pub fn is_stabilizer(g: &SquareMatrix, p: &Polynomial) -> Result<bool> {
    arity(p.nvars(), g.dim())?;
    Ok(&p.compose_linear(g)? == p)
}

/// Decides "`deg f_{a,b} <= 1` for all `b`" with `b` as fresh indeterminates:
/// expands `e_r(T a + B)` in `Q(zeta)[T, B_1..B_n]` and checks that no term
/// has `T`-degree two or more.
pub fn degree_condition_symbolic(spec: EsymSpec, a: &[Scalar]) -> Result<bool> {
    arity(spec.n(), a.len())?;
    let n = spec.n();
    let m = n + 1;
    let t = Polynomial::var(m, 0);
    let images: Vec<Polynomial> = a
        .iter()
        .enumerate()
        .map(|(i, ai)| t.checked_scale(ai)?.checked_add(&Polynomial::var(m, i + 1)))
        .collect::<Result<_>>()?;
    let expanded = elementary(spec).substitute(&images)?;
    let linear_in_t = expanded.terms().all(|(mono, _)| mono.exponents()[0] <= 1);
    Ok(linear_in_t)
}

/// The same condition in subset form: `e_{r-s}(a_I) = 0` for every
/// `0 <= s <= r-2` and every `I` of size `n - s`.
pub fn degree_condition_combinatorial(spec: EsymSpec, a: &[Scalar]) -> Result<bool> {
    Ok(first_subset_violation(spec, a)?.is_none())
}

/// First `(s, I)` (colex order within each `s`) violating the subset condition.
pub fn first_subset_violation(spec: EsymSpec, a: &[Scalar]) -> Result<Option<(usize, Vec<usize>)>> {
    arity(spec.n(), a.len())?;
    let (n, r) = (spec.n(), spec.r());
    for s in 0..=r.saturating_sub(2) {
        if r < 2 {
            break;
        }
        for idx in colex_subsets(n, n - s) {
            let sub: Vec<Scalar> = idx.iter().map(|&i| a[i].clone()).collect();
            if !elementary_value(&sub, r - s)?.is_zero() {
                return Ok(Some((s, idx)));
            }
        }
    }
    Ok(None)
}

/// Outcome of the rank criterion for a single vector `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankLemmaReport {
    pub a: Vec<Scalar>,
    pub rho_value: usize,
    pub degree_condition: bool,
    /// A `b` with `deg f_{a,b} >= 2`, present only when the condition fails.
    pub witness_b: Option<Vec<Scalar>>,
}

impl RankLemmaReport {
    /// The criterion itself: the condition holds iff `rho(a) <= 1`.
    pub fn consistent(&self) -> bool {
        self.degree_condition == (self.rho_value <= 1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": vector_to_json(&self.a),
            "rho": self.rho_value,
            "degree_condition": self.degree_condition,
            "witness_b": self.witness_b.as_deref().map(vector_to_json),
        })
    }
}

/// Evaluates the rank criterion for `a`, searching 0/1 indicator vectors of
/// subsets of size at most `r - 2` for a witness when the condition fails.
pub fn rank_lemma_check(spec: EsymSpec, a: &[Scalar]) -> Result<RankLemmaReport> {
    spec.require_strict_range()?;
    arity(spec.n(), a.len())?;
    let degree_condition = degree_condition_combinatorial(spec, a)?;
    let witness_b = if degree_condition {
        None
    } else {
        find_indicator_witness(spec, a)?
    };
    Ok(RankLemmaReport {
        a: a.to_vec(),
        rho_value: rho(a),
        degree_condition,
        witness_b,
    })
}

fn find_indicator_witness(spec: EsymSpec, a: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let n = spec.n();
    for size in 0..=spec.r() - 2 {
        for subset in colex_subsets(n, size) {
            let mut b = vec![Scalar::zero(); n];
            for &j in &subset {
                b[j] = Scalar::one();
            }
            if f_ab(spec, a, &b)?.degree().is_some_and(|d| d >= 2) {
                return Ok(Some(b));
            }
        }
    }
    Ok(None)
}

/// Exhaustive check of `condition(a) <=> rho(a) <= 1` over `{-bound..bound}^n`.
pub fn rank_lemma_grid(spec: EsymSpec, bound: u32, exec: Exec) -> Result<Report> {
    spec.require_strict_range()?;
    let n = spec.n();
    let base = 2 * bound as usize + 1;
    let total = base.pow(n as u32);
    let decode = |mut idx: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        for slot in v.iter_mut().rev() {
            *slot = Scalar::from_integer((idx % base) as i64 - i64::from(bound));
            idx /= base;
        }
        v
    };
    let results = exec.map_range(0..total, |idx| -> Result<(bool, bool)> {
        let a = decode(idx);
        Ok((degree_condition_combinatorial(spec, &a)?, rho(&a) <= 1))
    });
    let mut report = Report::new("deg f_{a,b} <= 1 for all b  <=>  rho(a) <= 1")
        .param("n", n)
        .param("r", spec.r())
        .param("grid_bound", bound);
    let mut holds = 0u64;
    for (idx, res) in results.into_iter().enumerate() {
        let (cond, small) = res?;
        holds += u64::from(cond);
        report.record(
            cond == small,
            || json!({"a": vector_to_json(&decode(idx)), "condition": cond, "rho_le_1": small}),
        );
    }
    Ok(report.with_details(json!({"vectors": total, "condition_holds": holds})))
}

/// Agreement of the symbolic and subset forms of the condition on seeded
/// sparse rational vectors.
pub fn oracle_agreement_check(
    spec: EsymSpec,
    samples: usize,
    seed: u64,
    exec: Exec,
) -> Result<Report> {
    let n = spec.n();
    let results = exec.map_range(0..samples, |i| -> Result<(Vec<Scalar>, bool, bool)> {
        let mut rng = candidate_rng(seed, i as u64);
        let zero_prob = [0.3, 0.6, 0.8, 0.95][rng.random_range(0..4)];
        let a = sparse_rational_vector(&mut rng, n, zero_prob);
        let sym = degree_condition_symbolic(spec, &a)?;
        let comb = degree_condition_combinatorial(spec, &a)?;
        Ok((a, sym, comb))
    });
    let mut report = Report::new("symbolic and subset forms of the degree condition agree")
        .param("n", n)
        .param("r", spec.r())
        .param("samples", samples)
        .param("seed", seed);
    let mut holds = 0u64;
    for res in results {
        let (a, sym, comb) = res?;
        holds += u64::from(sym);
        report.record(
            sym == comb,
            || json!({"a": vector_to_json(&a), "symbolic": sym, "combinatorial": comb}),
        );
    }
    Ok(report.with_details(json!({"condition_holds": holds})))
}

/// `true` iff every column of the invertible matrix `g` has exactly one nonzero entry.
pub fn rank1_preservation(g: &SquareMatrix, spec: EsymSpec) -> Result<bool> {
    spec.require_strict_range()?;
    arity(spec.n(), g.dim())?;
    if !g.is_invertible()? {
        return Err(Error::Singular);
    }
    Ok(g.column_support_sizes().iter().all(|&c| c == 1))
}

/// Solves the diagonal constraints `t_{i_1} ... t_{i_r} = 1` over all
/// `r`-subsets. Returns the common value `omega` (an `r`-th root of unity)
/// when they hold and `None` otherwise.
pub fn scalar_constraints_solve(t: &[Scalar], r: usize) -> Result<Option<Scalar>> {
    let n = t.len();
    if let Some(i) = t.iter().position(Scalar::is_zero) {
        return Err(Error::ZeroEntry(i + 1));
    }
    if r < 1 || n <= r {
        return Err(Error::ParameterOutOfRange {
            n,
            r,
            requirement: "1 <= r < n",
        });
    }
    for idx in colex_subsets(n, r) {
        let prod = idx
            .iter()
            .try_fold(Scalar::one(), |acc, &i| acc.checked_mul(&t[i]))?;
        if !prod.is_one() {
            return Ok(None);
        }
    }
    // For distinct i, j pick r-1 further indices K avoiding both; then
    // t_i = prod_K t_k^{-1} = t_j. Here i = 0, j = n-1, K = {1..r-1}.
    let others_inv = t[1..r]
        .iter()
        .try_fold(Scalar::one(), |acc, x| acc.checked_mul(x))?
        .inverse()?;
    let omega = others_inv;
    if t.iter().any(|x| x != &omega) || !omega.is_root_of_unity(r as u32) {
        return Ok(None);
    }
    Ok(Some(omega))
}

/// A stabilizer element written as `omega * P_pi` with `omega^r = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabDecomposition {
    perm: Permutation,
    omega: Scalar,
    r: usize,
}

impl StabDecomposition {
    /// Checks `omega^r = 1` and that the matrix stabilizes `e_r`.
    pub fn new(perm: Permutation, omega: Scalar, r: usize) -> Result<Self> {
        let spec = EsymSpec::new(perm.len(), r)?;
        let d = StabDecomposition { perm, omega, r };
        if !d.omega.is_root_of_unity(r as u32)
            || !is_stabilizer(&d.to_matrix()?, &elementary(spec))?
        {
            return Err(Error::NotStabilizer);
        }
        Ok(d)
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn omega(&self) -> &Scalar {
        &self.omega
    }

    pub fn to_matrix(&self) -> Result<SquareMatrix> {
        self.perm.matrix().checked_scale(&self.omega)
    }

    /// The group element `(pi, k)` with `zeta_r^k = omega`.
    pub fn to_element(&self) -> StabElement {
        let r = self.r as u32;
        let k = (0..r)
            .find(|&k| Scalar::zeta_pow(r, k.into()) == self.omega)
            .expect("omega is an r-th root of unity");
        StabElement::new(self.perm.clone(), k, r)
    }
}

/// Runs the classification pipeline on `g`: stabilizer test, rank-one
/// preservation, monomial factorization and the diagonal constraints.
pub fn decompose_stabilizer(g: &SquareMatrix, spec: EsymSpec) -> Result<StabDecomposition> {
    spec.require_strict_range()?;
    arity(spec.n(), g.dim())?;
    if !g.is_invertible()? || !is_stabilizer(g, &elementary(spec))? {
        return Err(Error::NotStabilizer);
    }
    if !rank1_preservation(g, spec)? {
        return Err(Error::NotMonomial(
            "a stabilizer failed to preserve rank-one vectors".into(),
        ));
    }
    let mono = decompose_monomial(g)?;
    let omega = scalar_constraints_solve(mono.diagonal(), spec.r())?.ok_or(Error::NotStabilizer)?;
    StabDecomposition::new(mono.perm().clone(), omega, spec.r())
}

/// Exhaustive membership of `S_n x Z_r` plus seeded falsification: shears,
/// dense invertible non-monomial matrices and monomial matrices with a bad
/// diagonal must all be rejected.
pub fn verify_theorem1(n: usize, r: usize, trials: usize, seed: u64) -> Result<Report> {
    verify_theorem1_with(n, r, trials, seed, Exec::default())
}

pub fn verify_theorem1_with(
    n: usize,
    r: usize,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<Report> {
    require_strict_range(n, r)?;
    let e = elementary(EsymSpec::new(n, r)?);
    let mut report = Report::new("the stabilizer of e_r is exactly S_n x Z_r")
        .param("n", n)
        .param("r", r)
        .param("trials", trials)
        .param("seed", seed);

    let group = enumerate_group(n, r as u32);
    let members = exec.map(&group, |g| is_stabilizer(&g.to_matrix(), &e));
    let mut members_accepted = 0u64;
    for (g, ok) in group.iter().zip(members) {
        let ok = ok?;
        members_accepted += u64::from(ok);
        report.record(ok, || json!({"kind": "member_rejected", "element": g}));
    }

    let nonmonomial = exec.map_range(0..trials, |i| -> Result<(SquareMatrix, bool)> {
        let mut rng = candidate_rng(seed, stream(0, i));
        let m = if i % 2 == 0 {
            random_shear(&mut rng, n)
        } else {
            random_dense_nonmonomial(&mut rng, n)
        };
        let accepted = is_stabilizer(&m, &e)?;
        Ok((m, accepted))
    });
    let mut false_accepts = 0u64;
    let mut nonmonomial_rejected = 0u64;
    for res in nonmonomial {
        let (m, accepted) = res?;
        false_accepts += u64::from(accepted);
        nonmonomial_rejected += u64::from(!accepted);
        report.record(
            !accepted,
            || json!({"kind": "nonmonomial_accepted", "matrix": matrix_to_json(&m)}),
        );
    }

    let bad_monomial = exec.map_range(0..trials, |i| -> Result<(SquareMatrix, bool)> {
        let mut rng = candidate_rng(seed, stream(1, i));
        let m = random_bad_monomial(&mut rng, n, r as u32).to_matrix();
        let accepted = is_stabilizer(&m, &e)?;
        Ok((m, accepted))
    });
    let mut bad_rejected = 0u64;
    for res in bad_monomial {
        let (m, accepted) = res?;
        false_accepts += u64::from(accepted);
        bad_rejected += u64::from(!accepted);
        report.record(
            !accepted,
            || json!({"kind": "bad_monomial_accepted", "matrix": matrix_to_json(&m)}),
        );
    }

    Ok(report.with_details(json!({
        "group_order": group.len(),
        "members_accepted": members_accepted,
        "nonmonomial_rejected": nonmonomial_rejected,
        "bad_monomial_rejected": bad_rejected,
        "false_accepts": false_accepts,
    })))
}

/// Every element of `S_n x Z_r` keeps `P = e_1 * e_{r-1}` fixed, while
/// `omega * P_pi` with `omega^{r-1} = 1 != omega^r` does not.
pub fn product_stabilizer_check(n: usize, r: usize) -> Result<Report> {
    product_stabilizer_check_with(n, r, Exec::default())
}

pub fn product_stabilizer_check_with(n: usize, r: usize, exec: Exec) -> Result<Report> {
    if !(n > r && r > 3) {
        return Err(Error::ParameterOutOfRange {
            n,
            r,
            requirement: "n > r > 3",
        });
    }
    let p = elementary(EsymSpec::new(n, 1)?).checked_mul(&elementary(EsymSpec::new(n, r - 1)?))?;
    let mut report = Report::new(
        "S_n x Z_r stabilizes e_1 * e_{r-1}; (r-1)-th roots that are not r-th roots do not",
    )
    .param("n", n)
    .param("r", r);

    let group = enumerate_group(n, r as u32);
    let members = exec.map(&group, |g| is_stabilizer(&g.to_matrix(), &p));
    let mut members_accepted = 0u64;
    for (g, ok) in group.iter().zip(members) {
        let ok = ok?;
        members_accepted += u64::from(ok);
        report.record(ok, || json!({"kind": "member_rejected", "element": g}));
    }

    let perms = Permutation::all(n);
    let roots: Vec<Scalar> = (1..r as u64 - 1)
        .map(|k| Scalar::zeta_pow(r as u32 - 1, k))
        .collect();
    let scaled: Vec<(usize, usize)> = (0..perms.len())
        .flat_map(|pi| (0..roots.len()).map(move |k| (pi, k)))
        .collect();
    let outcomes = exec.map(&scaled, |&(pi, k)| -> Result<bool> {
        let omega = &roots[k];
        let valid = omega.is_root_of_unity(r as u32 - 1) && !omega.is_root_of_unity(r as u32);
        let m = perms[pi].matrix().checked_scale(omega)?;
        Ok(valid && !is_stabilizer(&m, &p)?)
    });
    let mut scaled_rejected = 0u64;
    for (&(pi, k), ok) in scaled.iter().zip(outcomes) {
        let ok = ok?;
        scaled_rejected += u64::from(ok);
        report.record(ok, || {
            json!({"kind": "scaled_accepted", "perm": perms[pi].one_based(), "omega": roots[k].to_string()})
        });
    }
    Ok(report.with_details(json!({
        "group_order": group.len(),
        "members_accepted": members_accepted,
        "scaled_candidates": scaled.len(),
        "scaled_rejected": scaled_rejected,
    })))
}

/// `omega * u * x * u^{-1}`, or with `x` transposed.
pub fn mpb_transform(
    x: &SquareMatrix,
    u: &SquareMatrix,
    omega: &Scalar,
    transpose: bool,
) -> Result<SquareMatrix> {
    let inner = if transpose { x.transpose() } else { x.clone() };
    u.checked_mul(&inner)?
        .checked_mul(&u.inverse()?)?
        .checked_scale(omega)
}

/// Spot-check of invariance of `E_r` (sum of principal `r`-minors) under
/// `x -> omega u x u^{-1}` and `x -> omega u x^T u^{-1}` with `omega^r = 1`,
/// followed by `ceil(trials / 5)` counter-trials with `omega^r != 1` and
/// `E_r(x) != 0`, which must change the value.
pub fn mpb_invariance_check(n: usize, r: usize, trials: usize, seed: u64) -> Result<Report> {
    mpb_invariance_check_with(n, r, trials, seed, Exec::default())
}

pub fn mpb_invariance_check_with(
    n: usize,
    r: usize,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<Report> {
    require_strict_range(n, r)?;
    let counter_trials = trials.div_ceil(5);
    let ru = r as u32;
    let mut report =
        Report::new("E_r(omega u x u^-1) = E_r(omega u x^T u^-1) = E_r(x) for omega^r = 1")
            .param("n", n)
            .param("r", r)
            .param("trials", trials)
            .param("seed", seed);

    let positive = exec.map_range(0..trials, |i| -> Result<(bool, Value)> {
        let mut rng = candidate_rng(seed, stream(0, i));
        let x = random_rational_matrix(&mut rng, n);
        let u = random_invertible(&mut rng, n);
        let omega = Scalar::zeta_pow(ru, rng.random_range(0..ru).into());
        let base = minor_esym(&x, r)?;
        let plain = minor_esym(&mpb_transform(&x, &u, &omega, false)?, r)?;
        let transposed = minor_esym(&mpb_transform(&x, &u, &omega, true)?, r)?;
        let ok = plain == base && transposed == base;
        let witness = json!({
            "kind": "invariance_failed",
            "x": matrix_to_json(&x),
            "u": matrix_to_json(&u),
            "omega": omega.to_string(),
        });
        Ok((ok, witness))
    });
    let mut invariant = 0u64;
    for res in positive {
        let (ok, witness) = res?;
        invariant += u64::from(ok);
        report.record(ok, || witness);
    }

    let counter = exec.map_range(0..counter_trials, |i| -> Result<(bool, Value)> {
        let mut rng = candidate_rng(seed, stream(1, i));
        let (x, base) = loop {
            let x = random_rational_matrix(&mut rng, n);
            let base = minor_esym(&x, r)?;
            if !base.is_zero() {
                break (x, base);
            }
        };
        let u = random_invertible(&mut rng, n);
        let omega = loop {
            let c =
                Scalar::zeta_pow(ru, rng.random_range(0..ru).into()) * nonzero_rational(&mut rng);
            if !c.is_root_of_unity(ru) {
                break c;
            }
        };
        let plain = minor_esym(&mpb_transform(&x, &u, &omega, false)?, r)?;
        let transposed = minor_esym(&mpb_transform(&x, &u, &omega, true)?, r)?;
        let ok = plain != base && transposed != base;
        let witness = json!({
            "kind": "counter_trial_unchanged",
            "x": matrix_to_json(&x),
            "omega": omega.to_string(),
        });
        Ok((ok, witness))
    });
    let mut counter_changed = 0u64;
    for res in counter {
        let (ok, witness) = res?;
        counter_changed += u64::from(ok);
        report.record(ok, || witness);
    }
    Ok(report.with_details(json!({
        "invariant_trials": invariant,
        "counter_trials": counter_trials,
        "counter_trials_changed": counter_changed,
    })))
}

/// Every element of `S_n x Z_r` maps each basis vector to a vector with a
/// single nonzero entry.
pub fn rank1_sweep(n: usize, r: usize, exec: Exec) -> Result<Report> {
    require_strict_range(n, r)?;
    let group = enumerate_group(n, r as u32);
    let outcomes = exec.map(&group, |g| -> Result<bool> {
        let m = g.to_matrix();
        let mut ok = true;
        for i in 0..n {
            let mut basis = vec![Scalar::zero(); n];
            basis[i] = Scalar::one();
            ok &= rho(&m.mul_vec(&basis)?) == 1;
        }
        Ok(ok)
    });
    let mut report = Report::new("stabilizer elements map rank-one vectors to rank-one vectors")
        .param("n", n)
        .param("r", r);
    for (g, ok) in group.iter().zip(outcomes) {
        let ok = ok?;
        report.record(ok, || json!({"element": g}));
    }
    Ok(report)
}

/// `f_{g(a), b} = f_{a, g^{-1}(b)}` for seeded random stabilizer elements `g`
/// and rational vectors `a`, `b`.
pub fn line_transport_check(
    n: usize,
    r: usize,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<Report> {
    require_strict_range(n, r)?;
    let spec = EsymSpec::new(n, r)?;
    let outcomes = exec.map_range(0..trials, |i| -> Result<(bool, Value)> {
        let mut rng = candidate_rng(seed, i as u64);
        let g = random_stab_element(&mut rng, n, r as u32);
        let a = sparse_rational_vector(&mut rng, n, 0.3);
        let b = sparse_rational_vector(&mut rng, n, 0.3);
        let m = g.to_matrix();
        let lhs = f_ab(spec, &m.mul_vec(&a)?, &b)?;
        let rhs = f_ab(spec, &a, &m.inverse()?.mul_vec(&b)?)?;
        let witness = json!({"element": g, "a": vector_to_json(&a), "b": vector_to_json(&b)});
        Ok((lhs == rhs, witness))
    });
    let mut report = Report::new("f_{g(a),b} = f_{a,g^-1(b)} for g in the stabilizer")
        .param("n", n)
        .param("r", r)
        .param("trials", trials)
        .param("seed", seed);
    for res in outcomes {
        let (ok, witness) = res?;
        report.record(ok, || witness);
    }
    Ok(report)
}

/// Exercises [`scalar_constraints_solve`]: every constant diagonal `zeta_r^k`
/// is solved with `omega = zeta_r^k`; `trials` non-constant diagonals and
/// `ceil(trials / 5)` constant diagonals that are not `r`-th roots of unity
/// are rejected.
pub fn scalar_constraint_check(n: usize, r: usize, trials: usize, seed: u64) -> Result<Report> {
    let ru = r as u32;
    let mut report = Report::new("diagonal constraints force a constant r-th root of unity")
        .param("n", n)
        .param("r", r)
        .param("trials", trials)
        .param("seed", seed);
    for k in 0..ru {
        let root = Scalar::zeta_pow(ru, k.into());
        let got = scalar_constraints_solve(&vec![root.clone(); n], r)?;
        report.record(
            got.as_ref() == Some(&root),
            || json!({"kind": "root_not_recovered", "k": k}),
        );
    }
    for i in 0..trials {
        let mut rng = candidate_rng(seed, stream(0, i));
        let t = loop {
            let t: Vec<Scalar> = (0..n)
                .map(|_| {
                    let root = Scalar::zeta_pow(ru, rng.random_range(0..ru).into());
                    if rng.random_bool(0.5) {
                        root
                    } else {
                        root * nonzero_rational(&mut rng)
                    }
                })
                .collect();
            if t.iter().any(|x| x != &t[0]) {
                break t;
            }
        };
        let got = scalar_constraints_solve(&t, r)?;
        report.record(
            got.is_none(),
            || json!({"kind": "nonconstant_accepted", "t": vector_to_json(&t)}),
        );
    }
    for i in 0..trials.div_ceil(5) {
        let mut rng = candidate_rng(seed, stream(1, i));
        let c = loop {
            let c =
                Scalar::zeta_pow(ru, rng.random_range(0..ru).into()) * nonzero_rational(&mut rng);
            if !c.is_root_of_unity(ru) {
                break c;
            }
        };
        let got = scalar_constraints_solve(&vec![c.clone(); n], r)?;
        report.record(
            got.is_none(),
            || json!({"kind": "non_root_accepted", "c": c.to_string()}),
        );
    }
    Ok(report)
}

/// Random permutation matrix scaled by `omega`; used by the benches.
pub fn scaled_random_permutation<R: Rng>(
    rng: &mut R,
    n: usize,
    omega: &Scalar,
) -> Result<SquareMatrix> {
    random_permutation(rng, n).matrix().checked_scale(omega)
}
