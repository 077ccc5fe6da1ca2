//! Verification harness: every identity becomes a checkable case producing a
//! machine-readable [`VerificationReport`].
//!
//! Left- and right-hand sides are computed as canonical polynomials and
//! compared exactly; a failing case carries the first differing monomial with
//! both coefficients as a witness.

use std::collections::BTreeMap;
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::matrix::{apply_omega_det, int_determinant, MatrixError, MinorSpec, SymbolicMatrix};
use crate::perm::{
    build_sigma, enumerate_schemes, signsumset, IndexSet, PartitionScheme, PermError, Permutation,
    Sign,
};
use crate::poly::{Monomial, PolyError, Polynomial, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("case would exceed the term budget: {needed} > {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("invalid case: {0}")]
    InvalidCase(String),
    #[error("internal error: divided out the absent edge variable {0}")]
    TermDivision(VarId),
}

/// Upper bound on intermediate polynomial term counts (and enumeration
/// sizes); a case aborts cleanly instead of exhausting memory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermBudget(pub usize);

impl Default for TermBudget {
    fn default() -> Self {
        TermBudget(10_000_000)
    }
}

impl TermBudget {
    fn check(&self, needed: usize) -> Result<(), LabError> {
        if needed > self.0 {
            Err(LabError::BudgetExceeded {
                needed,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

/// Deliberate fault injection, used to confirm that the suite actually fails
/// when a sign factor is wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Drop the ε(J, [n]) factor from the identity's right-hand side.
    DropColumnSignFactor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    pub budget: TermBudget,
    pub mutation: Mutation,
}

/// One instance of the identity: dimension n, power s, and the row/column
/// selections I and J with |I| = |J| = k ≤ n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyCase {
    n: usize,
    s: u32,
    rows: IndexSet,
    cols: IndexSet,
}

impl CayleyCase {
    pub fn new(n: usize, s: u32, rows: IndexSet, cols: IndexSet) -> Result<Self, LabError> {
        if rows.len() != cols.len() {
            return Err(LabError::InvalidCase(format!(
                "|I| = {} but |J| = {}",
                rows.len(),
                cols.len()
            )));
        }
        let ambient = IndexSet::range(n);
        if !rows.is_subset_of(&ambient) || !cols.is_subset_of(&ambient) {
            return Err(LabError::InvalidCase(format!(
                "row/column sets must lie inside 1..={n}"
            )));
        }
        Ok(CayleyCase { n, s, rows, cols })
    }

    /// The specialization I = J = {1, ..., k}.
    pub fn principal(n: usize, k: usize, s: u32) -> Result<Self, LabError> {
        if k > n {
            return Err(LabError::InvalidCase(format!("k = {k} exceeds n = {n}")));
        }
        CayleyCase::new(n, s, IndexSet::range(k), IndexSet::range(k))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &IndexSet {
        &self.rows
    }

    pub fn cols(&self) -> &IndexSet {
        &self.cols
    }

    fn minor_spec(&self) -> MinorSpec {
        MinorSpec::new(self.rows.clone(), self.cols.clone())
    }
}

/// An s-tuple of permutation diagrams of common size; its weight is the
/// product of the member weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleOfDiagrams {
    perms: Vec<Permutation>,
}

impl TupleOfDiagrams {
    pub fn new(perms: Vec<Permutation>) -> Result<Self, LabError> {
        if let Some(first) = perms.first() {
            if perms.iter().any(|p| p.size() != first.size()) {
                return Err(LabError::InvalidCase(
                    "diagrams must all have the same size".into(),
                ));
            }
        }
        Ok(TupleOfDiagrams { perms })
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn copies(&self) -> usize {
        self.perms.len()
    }

    /// The single signed monomial Π sgn(π_i) · Π x[i, π_i(i)].
    pub fn weight(&self) -> Polynomial {
        let mut sign = Sign::Plus;
        let mut exponents: BTreeMap<VarId, u32> = BTreeMap::new();
        for p in &self.perms {
            sign = sign * p.sign();
            for i in 1..=p.size() {
                *exponents.entry(VarId::new(i, p.image(i))).or_insert(0) += 1;
            }
        }
        Polynomial::from_terms([(Monomial::from_exponents(exponents), sign.to_bigint())])
    }
}

/// The number of ordered ways to pick the edge set of `tau` from the diagrams
/// of `m`: the product over i of how many diagrams contain the edge
/// (i, τ(i)).
pub fn c_tau_m(tau: &Permutation, m: &TupleOfDiagrams) -> u64 {
    (1..=tau.size())
        .map(|i| {
            m.perms()
                .iter()
                .filter(|p| p.image(i) == tau.image(i))
                .count() as u64
        })
        .product()
}

/// s(s+1)···(s+k−1), the empty product for k = 0.
pub fn rising_factorial(s: u32, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(u64::from(s) + j as u64);
    }
    acc
}

fn pow_budgeted(base: &Polynomial, exp: u32, budget: TermBudget) -> Result<Polynomial, LabError> {
    let mut acc = Polynomial::one();
    for _ in 0..exp {
        budget.check(acc.term_count().saturating_mul(base.term_count()))?;
        acc = acc.mul(base);
        budget.check(acc.term_count())?;
    }
    Ok(acc)
}

fn apply_sign(p: Polynomial, sign: Sign) -> Polynomial {
    match sign {
        Sign::Plus => p,
        Sign::Minus => p.neg(),
    }
}

/// Left side: the determinant of the selected derivative minor applied to
/// (det X)^s. Right side: s(s+1)···(s+k−1) · (det X)^(s−1) · ε(I) · ε(J) ·
/// det of the cominor. For s = 0 the scalar factor kills the right side
/// unless k = 0, where both sides are the constant 1.
pub fn cayley_sides(
    case: &CayleyCase,
    opts: Options,
) -> Result<(Polynomial, Polynomial), LabError> {
    let x = SymbolicMatrix::generic(case.n());
    let det_x = x.determinant()?;
    let power = pow_budgeted(&det_x, case.s(), opts.budget)?;
    let spec = case.minor_spec();
    let lhs = apply_omega_det(&spec, &power)?;

    let k = case.k();
    let rhs = if case.s() == 0 {
        if k == 0 {
            Polynomial::one()
        } else {
            Polynomial::zero()
        }
    } else {
        let ambient = IndexSet::range(case.n());
        let mut sign = signsumset(case.rows(), &ambient)?;
        if opts.mutation != Mutation::DropColumnSignFactor {
            sign = sign * signsumset(case.cols(), &ambient)?;
        }
        let base = pow_budgeted(&det_x, case.s() - 1, opts.budget)?;
        let cominor_det = x.cominor(&spec)?.determinant()?;
        opts.budget
            .check(base.term_count().saturating_mul(cominor_det.term_count()))?;
        apply_sign(
            base.mul(&cominor_det).scale(&rising_factorial(case.s(), k)),
            sign,
        )
    };
    Ok((lhs, rhs))
}

/// The I = J = {1..k} specialization with the scalar-only right side (no ε
/// factors). Kept as an independent assembly from [`cayley_sides`].
pub fn vivanti_sides(
    n: usize,
    k: usize,
    s: u32,
    opts: Options,
) -> Result<(Polynomial, Polynomial), LabError> {
    let case = CayleyCase::principal(n, k, s)?;
    let x = SymbolicMatrix::generic(n);
    let det_x = x.determinant()?;
    let power = pow_budgeted(&det_x, s, opts.budget)?;
    let spec = case.minor_spec();
    let lhs = apply_omega_det(&spec, &power)?;

    let rhs = if s == 0 {
        if k == 0 {
            Polynomial::one()
        } else {
            Polynomial::zero()
        }
    } else {
        let base = pow_budgeted(&det_x, s - 1, opts.budget)?;
        let cominor_det = x.cominor(&spec)?.determinant()?;
        opts.budget
            .check(base.term_count().saturating_mul(cominor_det.term_count()))?;
        base.mul(&cominor_det).scale(&rising_factorial(s, k))
    };
    Ok((lhs, rhs))
}

/// The operator side on its own: det of the derivative minor applied to
/// (det X)^s.
pub fn operator_side(case: &CayleyCase, opts: Options) -> Result<Polynomial, LabError> {
    let det_x = SymbolicMatrix::generic(case.n()).determinant()?;
    let power = pow_budgeted(&det_x, case.s(), opts.budget)?;
    Ok(apply_omega_det(&case.minor_spec(), &power)?)
}

/// Expands the action of the derivative-minor determinant on (det X)^s by
/// enumerating all (n!)^s diagram tuples m and all τ, accumulating
/// c(τ, m) · sgn(τ) · ω(m) / Π x[i, τ(i)]. Defined for I = J = {1..k}.
pub fn expand_partial_action(case: &CayleyCase, opts: Options) -> Result<Polynomial, LabError> {
    let k = case.k();
    let principal = IndexSet::range(k);
    if *case.rows() != principal || *case.cols() != principal {
        return Err(LabError::InvalidCase(
            "the expansion is defined for I = J = {1..k}".into(),
        ));
    }
    let n = case.n();
    let s = case.s() as usize;
    let all = Permutation::all(n);
    let tuple_count = (all.len() as u128).saturating_pow(case.s());
    opts.budget
        .check(usize::try_from(tuple_count).unwrap_or(usize::MAX))?;
    let taus = Permutation::all(k);

    let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    let mut indices = vec![0usize; s];
    loop {
        let tuple =
            TupleOfDiagrams::new(indices.iter().map(|&i| all[i].clone()).collect())?;
        let weight = tuple.weight();
        let (monomial, coeff) = weight.terms().next().expect("tuple weight is one term");
        for tau in &taus {
            let c = c_tau_m(tau, &tuple);
            if c == 0 {
                continue;
            }
            let mut divided = monomial.clone();
            for i in 1..=k {
                let v = VarId::new(i, tau.image(i));
                divided = divided.div_var(v).ok_or(LabError::TermDivision(v))?;
            }
            let contribution = coeff * BigInt::from(c) * tau.sign().to_bigint();
            let entry = acc.entry(divided).or_default();
            *entry += contribution;
        }
        // odometer over the s diagram slots, last slot fastest
        let mut pos = s;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < all.len() {
                break;
            }
            indices[pos] = 0;
        }
        if s == 0 || (pos == 0 && indices[0] == 0) {
            break;
        }
    }
    Ok(Polynomial::from_terms(acc))
}

/// All ordered partitions of {1..k} into blocks of the given sizes.
fn ordered_partitions(k: usize, sizes: &[usize]) -> Vec<Vec<IndexSet>> {
    fn recurse(
        remaining: &[usize],
        sizes: &[usize],
        acc: &mut Vec<IndexSet>,
        out: &mut Vec<Vec<IndexSet>>,
    ) {
        match sizes.split_first() {
            None => {
                if remaining.is_empty() {
                    out.push(acc.clone());
                }
            }
            Some((&size, rest_sizes)) => {
                for combo in remaining.iter().copied().combinations(size) {
                    let rest: Vec<usize> = remaining
                        .iter()
                        .copied()
                        .filter(|x| !combo.contains(x))
                        .collect();
                    acc.push(IndexSet::new(combo).expect("distinct by construction"));
                    recurse(&rest, rest_sizes, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let universe: Vec<usize> = (1..=k).collect();
    let mut out = Vec::new();
    recurse(&universe, sizes, &mut Vec::new(), &mut out);
    out
}

/// The generating function of the equivalence class indexed by `scheme`,
/// inside the n×n generic matrix with `copies` diagram copies:
/// det(X)^(copies−m) times the sum over compatible ordered domain partitions
/// of sgn(σ) · Π over nonempty parts of sgn(word) · ε(I_l) · ε(J_l) ·
/// det(cominor(I_l|J_l)). Equals (det X)^(copies−1) · det(cominor({1..k}))
/// for every scheme.
pub fn class_generating_function(
    scheme: &PartitionScheme,
    n: usize,
    copies: u32,
    opts: Options,
) -> Result<Polynomial, LabError> {
    let k = scheme.k();
    if k > n {
        return Err(LabError::InvalidCase(format!(
            "scheme over 1..={k} does not fit inside n = {n}"
        )));
    }
    let nonempty: Vec<Vec<usize>> = scheme
        .words()
        .iter()
        .filter(|w| !w.is_empty())
        .cloned()
        .collect();
    let m = nonempty.len();
    if m as u32 > copies {
        return Err(LabError::InvalidCase(format!(
            "{m} nonempty parts exceed {copies} copies"
        )));
    }
    let reduced = PartitionScheme::new(nonempty.clone())?;
    let sizes: Vec<usize> = nonempty.iter().map(Vec::len).collect();
    let image_sets: Vec<IndexSet> = nonempty
        .iter()
        .map(|w| IndexSet::new(w.clone()).expect("scheme letters are distinct"))
        .collect();
    let word_signs: Vec<Sign> = nonempty
        .iter()
        .map(|w| Sign::from_parity(crate::perm::word_inversion_count(w)))
        .collect();

    let x = SymbolicMatrix::generic(n);
    let det_x = x.determinant()?;
    let ambient = IndexSet::range(n);
    let mut sum = Polynomial::zero();
    for domains in ordered_partitions(k, &sizes) {
        let sigma = build_sigma(&reduced, &domains)?;
        let mut sign = sigma.sign();
        let mut product = Polynomial::one();
        for l in 0..m {
            sign = sign
                * word_signs[l]
                * signsumset(&domains[l], &ambient)?
                * signsumset(&image_sets[l], &ambient)?;
            let d = x
                .cominor(&MinorSpec::new(domains[l].clone(), image_sets[l].clone()))?
                .determinant()?;
            opts.budget
                .check(product.term_count().saturating_mul(d.term_count()))?;
            product = product.mul(&d);
        }
        sum = sum.add(&apply_sign(product, sign));
    }
    let tail = pow_budgeted(&det_x, copies - m as u32, opts.budget)?;
    opts.budget
        .check(sum.term_count().saturating_mul(tail.term_count()))?;
    Ok(sum.mul(&tail))
}

/// The reduction identity behind the class generating functions, for a scheme
/// of m nonempty parts over {1..k}: the compatible-partition sum of
/// sgn(σ) · Π sgn(word_l) · det(cominor(I_l|J_l)) against
/// det(X)^(m−1) · det(cominor({1..k}|{1..k})).
pub fn showthis_sides(
    scheme: &PartitionScheme,
    n: usize,
    opts: Options,
) -> Result<(Polynomial, Polynomial), LabError> {
    if scheme.words().iter().any(Vec::is_empty) || scheme.words().is_empty() {
        return Err(LabError::InvalidCase(
            "all parts must be nonempty, with at least one part".into(),
        ));
    }
    let k = scheme.k();
    if k > n {
        return Err(LabError::InvalidCase(format!(
            "scheme over 1..={k} does not fit inside n = {n}"
        )));
    }
    let m = scheme.copies();
    let sizes: Vec<usize> = scheme.words().iter().map(Vec::len).collect();
    let image_sets: Vec<IndexSet> = scheme
        .words()
        .iter()
        .map(|w| IndexSet::new(w.clone()).expect("scheme letters are distinct"))
        .collect();
    let word_signs: Vec<Sign> = scheme
        .words()
        .iter()
        .map(|w| Sign::from_parity(crate::perm::word_inversion_count(w)))
        .collect();

    let x = SymbolicMatrix::generic(n);
    let mut lhs = Polynomial::zero();
    for domains in ordered_partitions(k, &sizes) {
        let sigma = build_sigma(scheme, &domains)?;
        let mut sign = sigma.sign();
        let mut product = Polynomial::one();
        for l in 0..m {
            sign = sign * word_signs[l];
            let d = x
                .cominor(&MinorSpec::new(domains[l].clone(), image_sets[l].clone()))?
                .determinant()?;
            opts.budget
                .check(product.term_count().saturating_mul(d.term_count()))?;
            product = product.mul(&d);
        }
        lhs = lhs.add(&apply_sign(product, sign));
    }

    let det_x = x.determinant()?;
    let principal = MinorSpec::new(IndexSet::range(k), IndexSet::range(k));
    let rhs = pow_budgeted(&det_x, m as u32 - 1, opts.budget)?
        .mul(&x.cominor(&principal)?.determinant()?);
    Ok((lhs, rhs))
}

fn extract_int(a: &[Vec<BigInt>], rows: &IndexSet, cols: &IndexSet) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| cols.iter().map(|c| a[r - 1][c - 1].clone()).collect())
        .collect()
}

fn check_laplace_shapes(
    size: usize,
    rows: &IndexSet,
    cols: &IndexSet,
    fixed: &IndexSet,
) -> Result<(), LabError> {
    let full = IndexSet::range(size);
    if rows.len() != cols.len() {
        return Err(LabError::InvalidCase(format!(
            "|R| = {} but |C| = {}",
            rows.len(),
            cols.len()
        )));
    }
    if !rows.is_subset_of(&full) || !cols.is_subset_of(&full) {
        return Err(LabError::InvalidCase(format!(
            "row/column sets must lie inside 1..={size}"
        )));
    }
    if !fixed.is_subset_of(rows) {
        return Err(LabError::InvalidCase("I must be a subset of R".into()));
    }
    Ok(())
}

/// The two sides of the generalized minor expansion on an integer matrix:
/// det(a) · det(a(R|C)) against the signed sum over column subsets J of
/// det(a[comp(R∖I)|comp(C∖J)]) · det(a[comp(I)|comp(J)]).
pub fn laplace_sides_int(
    a: &[Vec<BigInt>],
    rows: &IndexSet,
    cols: &IndexSet,
    fixed: &IndexSet,
) -> Result<(BigInt, BigInt), LabError> {
    let size = a.len();
    if a.iter().any(|r| r.len() != size) {
        return Err(LabError::Matrix(MatrixError::NotSquare {
            rows: size,
            cols: a.iter().map(Vec::len).max().unwrap_or(0),
        }));
    }
    check_laplace_shapes(size, rows, cols, fixed)?;
    let full = IndexSet::range(size);

    let rows_comp = rows.complement_in(&full)?;
    let cols_comp = cols.complement_in(&full)?;
    let lhs = int_determinant(a)? * int_determinant(&extract_int(a, &rows_comp, &cols_comp))?;

    let fixed_rest = fixed.complement_in(rows)?; // R ∖ I
    let keep_rows_first = fixed_rest.complement_in(&full)?;
    let keep_rows_second = fixed.complement_in(&full)?;
    let mut rhs = BigInt::from(0);
    for j_combo in cols.elements().iter().copied().combinations(fixed.len()) {
        let j = IndexSet::new(j_combo)?;
        let sign = signsumset(fixed, rows)? * signsumset(&j, cols)?;
        let j_rest = j.complement_in(cols)?; // C ∖ J
        let keep_cols_first = j_rest.complement_in(&full)?;
        let keep_cols_second = j.complement_in(&full)?;
        let d1 = int_determinant(&extract_int(a, &keep_rows_first, &keep_cols_first))?;
        let d2 = int_determinant(&extract_int(a, &keep_rows_second, &keep_cols_second))?;
        rhs += sign.to_bigint() * d1 * d2;
    }
    Ok((lhs, rhs))
}

/// Same expansion on the generic matrix of indeterminates, as exact
/// polynomials.
pub fn laplace_sides_symbolic(
    n: usize,
    rows: &IndexSet,
    cols: &IndexSet,
    fixed: &IndexSet,
) -> Result<(Polynomial, Polynomial), LabError> {
    check_laplace_shapes(n, rows, cols, fixed)?;
    let x = SymbolicMatrix::generic(n);
    let full = IndexSet::range(n);

    let lhs = x.determinant()?.mul(
        &x.cominor(&MinorSpec::new(rows.clone(), cols.clone()))?
            .determinant()?,
    );

    let fixed_rest = fixed.complement_in(rows)?;
    let keep_rows_first = fixed_rest.complement_in(&full)?;
    let keep_rows_second = fixed.complement_in(&full)?;
    let mut rhs = Polynomial::zero();
    for j_combo in cols.elements().iter().copied().combinations(fixed.len()) {
        let j = IndexSet::new(j_combo)?;
        let sign = signsumset(fixed, rows)? * signsumset(&j, cols)?;
        let j_rest = j.complement_in(cols)?;
        let keep_cols_first = j_rest.complement_in(&full)?;
        let keep_cols_second = j.complement_in(&full)?;
        let d1 = x
            .minor(&MinorSpec::new(keep_rows_first.clone(), keep_cols_first))?
            .determinant()?;
        let d2 = x
            .minor(&MinorSpec::new(keep_rows_second.clone(), keep_cols_second))?
            .determinant()?;
        rhs = rhs.add(&apply_sign(d1.mul(&d2), sign));
    }
    Ok((lhs, rhs))
}

/// First differing monomial with both coefficients, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

/// Machine-readable outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub case: String,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub equal: bool,
    pub witness: Option<Witness>,
    pub ms: u64,
}

/// The smallest monomial (in the canonical order) whose coefficients differ.
fn first_difference(lhs: &Polynomial, rhs: &Polynomial) -> Option<Witness> {
    let monomials: std::collections::BTreeSet<&Monomial> =
        lhs.terms().map(|(m, _)| m).chain(rhs.terms().map(|(m, _)| m)).collect();
    for m in monomials {
        let cl = lhs.coefficient(m);
        let cr = rhs.coefficient(m);
        if cl != cr {
            return Some(Witness {
                monomial: m.to_string(),
                lhs: cl.to_string(),
                rhs: cr.to_string(),
            });
        }
    }
    None
}

fn make_report(
    case: String,
    lhs: &Polynomial,
    rhs: &Polynomial,
    started: Instant,
) -> VerificationReport {
    let witness = first_difference(lhs, rhs);
    VerificationReport {
        case,
        lhs_terms: lhs.term_count(),
        rhs_terms: rhs.term_count(),
        equal: witness.is_none(),
        witness,
        ms: started.elapsed().as_millis() as u64,
    }
}

fn fmt_set(set: &IndexSet) -> String {
    format!("{{{set}}}")
}

pub fn verify_cayley(case: &CayleyCase, opts: Options) -> Result<VerificationReport, LabError> {
    let started = Instant::now();
    let (lhs, rhs) = cayley_sides(case, opts)?;
    Ok(make_report(
        format!(
            "cayley n={} s={} I={} J={}",
            case.n(),
            case.s(),
            fmt_set(case.rows()),
            fmt_set(case.cols())
        ),
        &lhs,
        &rhs,
        started,
    ))
}

pub fn verify_vivanti(
    n: usize,
    k: usize,
    s: u32,
    opts: Options,
) -> Result<VerificationReport, LabError> {
    let started = Instant::now();
    let (lhs, rhs) = vivanti_sides(n, k, s, opts)?;
    Ok(make_report(
        format!("vivanti n={n} k={k} s={s}"),
        &lhs,
        &rhs,
        started,
    ))
}

/// Cross-check of the tuple expansion against direct operator application.
pub fn verify_partial_action(
    n: usize,
    k: usize,
    s: u32,
    opts: Options,
) -> Result<VerificationReport, LabError> {
    let started = Instant::now();
    let case = CayleyCase::principal(n, k, s)?;
    let expansion = expand_partial_action(&case, opts)?;
    let operator = operator_side(&case, opts)?;
    Ok(make_report(
        format!("partial-action n={n} k={k} s={s}"),
        &expansion,
        &operator,
        started,
    ))
}

/// Per-scheme check that the class generating function equals
/// (det X)^(s−1) · det(cominor({1..k})).
pub fn verify_class_gf(
    scheme: &PartitionScheme,
    n: usize,
    copies: u32,
    opts: Options,
) -> Result<VerificationReport, LabError> {
    let started = Instant::now();
    let k = scheme.k();
    let gf = class_generating_function(scheme, n, copies, opts)?;
    let x = SymbolicMatrix::generic(n);
    let expected = if copies == 0 {
        Polynomial::one()
    } else {
        let principal = MinorSpec::new(IndexSet::range(k), IndexSet::range(k));
        pow_budgeted(&x.determinant()?, copies - 1, opts.budget)?
            .mul(&x.cominor(&principal)?.determinant()?)
    };
    Ok(make_report(
        format!("class-gf n={n} k={k} s={copies} scheme={scheme}"),
        &gf,
        &expected,
        started,
    ))
}

pub fn verify_showthis(
    scheme: &PartitionScheme,
    n: usize,
    opts: Options,
) -> Result<VerificationReport, LabError> {
    let started = Instant::now();
    let (lhs, rhs) = showthis_sides(scheme, n, opts)?;
    Ok(make_report(
        format!(
            "showthis n={n} k={} m={} scheme={scheme}",
            scheme.k(),
            scheme.copies()
        ),
        &lhs,
        &rhs,
        started,
    ))
}

/// Single numeric check of the generalized minor expansion.
pub fn verify_laplace_int(
    a: &[Vec<BigInt>],
    rows: &IndexSet,
    cols: &IndexSet,
    fixed: &IndexSet,
) -> Result<VerificationReport, LabError> {
    let started = Instant::now();
    let (lhs, rhs) = laplace_sides_int(a, rows, cols, fixed)?;
    Ok(make_report(
        format!(
            "laplace size={} R={} C={} I={}",
            a.len(),
            fmt_set(rows),
            fmt_set(cols),
            fmt_set(fixed)
        ),
        &Polynomial::constant(lhs),
        &Polynomial::constant(rhs),
        started,
    ))
}

pub fn verify_laplace_symbolic(
    n: usize,
    rows: &IndexSet,
    cols: &IndexSet,
    fixed: &IndexSet,
) -> Result<VerificationReport, LabError> {
    let started = Instant::now();
    let (lhs, rhs) = laplace_sides_symbolic(n, rows, cols, fixed)?;
    Ok(make_report(
        format!(
            "laplace-sym n={n} R={} C={} I={}",
            fmt_set(rows),
            fmt_set(cols),
            fmt_set(fixed)
        ),
        &lhs,
        &rhs,
        started,
    ))
}

fn random_subset(rng: &mut ChaCha8Rng, universe: &[usize], size: usize) -> IndexSet {
    let mut pool: Vec<usize> = universe.to_vec();
    let mut chosen = Vec::with_capacity(size);
    for _ in 0..size {
        let at = rng.gen_range(0..pool.len());
        chosen.push(pool.swap_remove(at));
    }
    IndexSet::new(chosen).expect("distinct by construction")
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, size: usize) -> Vec<Vec<BigInt>> {
    (0..size)
        .map(|_| {
            (0..size)
                .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                .collect()
        })
        .collect()
}

/// Seeded random numeric trials: one report per matrix, checking one random
/// (R, C, I) selection for every admissible shape (|R|, |I|).
pub fn run_laplace_trials(
    sizes: &[usize],
    trials: usize,
    seed: u64,
) -> Result<Vec<VerificationReport>, LabError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    for &size in sizes {
        let universe: Vec<usize> = (1..=size).collect();
        for trial in 0..trials {
            let started = Instant::now();
            let a = random_int_matrix(&mut rng, size);
            let mut shapes = 0usize;
            let mut failure: Option<(String, BigInt, BigInt)> = None;
            for r_size in 0..=size {
                for i_size in 0..=r_size {
                    let rows = random_subset(&mut rng, &universe, r_size);
                    let cols = random_subset(&mut rng, &universe, r_size);
                    let fixed = random_subset(&mut rng, rows.elements(), i_size);
                    let (lhs, rhs) = laplace_sides_int(&a, &rows, &cols, &fixed)?;
                    shapes += 1;
                    if lhs != rhs && failure.is_none() {
                        failure = Some((
                            format!(
                                "R={} C={} I={}",
                                fmt_set(&rows),
                                fmt_set(&cols),
                                fmt_set(&fixed)
                            ),
                            lhs,
                            rhs,
                        ));
                    }
                }
            }
            let (equal, witness) = match failure {
                None => (true, None),
                Some((shape, lhs, rhs)) => (
                    false,
                    Some(Witness {
                        monomial: shape,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    }),
                ),
            };
            reports.push(VerificationReport {
                case: format!("laplace size={size} trial={trial} shapes={shapes}"),
                lhs_terms: 1,
                rhs_terms: 1,
                equal,
                witness,
                ms: started.elapsed().as_millis() as u64,
            });
        }
    }
    Ok(reports)
}

/// Bounds and switches for [`run_suite`].
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub max_s: u32,
    pub laplace_sizes: Vec<usize>,
    pub laplace_trials: usize,
    pub seed: u64,
    pub budget: TermBudget,
    pub mutation: Mutation,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 3,
            max_s: 3,
            laplace_sizes: vec![2, 3, 4, 5],
            laplace_trials: 50,
            seed: 42,
            budget: TermBudget::default(),
            mutation: Mutation::None,
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<IndexSet> {
    (1..=n)
        .combinations(k)
        .map(|c| IndexSet::new(c).expect("distinct"))
        .collect()
}

/// Runs every case family and aggregates the reports, sorted by case
/// descriptor. The configured mutation applies to the main identity family
/// only.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<VerificationReport>, LabError> {
    let opts = Options {
        budget: config.budget,
        mutation: config.mutation,
    };
    let plain = Options {
        budget: config.budget,
        mutation: Mutation::None,
    };
    let mut reports = Vec::new();

    // the identity over the full (n, I, J, s) grid
    for n in 1..=config.max_n {
        for k in 0..=n {
            for rows in subsets(n, k) {
                for cols in subsets(n, k) {
                    for s in 0..=config.max_s {
                        let case = CayleyCase::new(n, s, rows.clone(), cols.clone())?;
                        reports.push(verify_cayley(&case, opts)?);
                    }
                }
            }
        }
    }

    // the principal specialization, plus agreement of the two assemblies
    for n in 1..=config.max_n {
        for k in 0..=n {
            for s in 0..=config.max_s {
                reports.push(verify_vivanti(n, k, s, plain)?);
                let started = Instant::now();
                let (viv_lhs, viv_rhs) = vivanti_sides(n, k, s, plain)?;
                let case = CayleyCase::principal(n, k, s)?;
                let (cay_lhs, cay_rhs) = cayley_sides(&case, plain)?;
                let lhs_witness = first_difference(&viv_lhs, &cay_lhs);
                let rhs_witness = first_difference(&viv_rhs, &cay_rhs);
                let witness = lhs_witness.or(rhs_witness);
                reports.push(VerificationReport {
                    case: format!("vivanti-vs-cayley n={n} k={k} s={s}"),
                    lhs_terms: viv_rhs.term_count(),
                    rhs_terms: cay_rhs.term_count(),
                    equal: witness.is_none(),
                    witness,
                    ms: started.elapsed().as_millis() as u64,
                });
            }
        }
    }

    // tuple-expansion cross-check
    for n in 1..=config.max_n.min(3) {
        for k in 0..=n {
            for s in 0..=config.max_s.min(2) {
                reports.push(verify_partial_action(n, k, s, plain)?);
            }
        }
    }

    // scheme counts against the rising factorial
    for k in 0..=5usize {
        for s in 1..=5usize {
            let started = Instant::now();
            let count = enumerate_schemes(k, s).len();
            let expected = rising_factorial(s as u32, k);
            let lhs = Polynomial::constant(BigInt::from(count));
            let rhs = Polynomial::constant(expected);
            reports.push(make_report(
                format!("schemes k={k} s={s}"),
                &lhs,
                &rhs,
                started,
            ));
        }
    }

    // distribution counts and their grouping by scheme
    for k in 0..=4usize {
        for s in 1..=4usize {
            let started = Instant::now();
            let mut total = 0usize;
            let mut groups: std::collections::BTreeSet<PartitionScheme> =
                std::collections::BTreeSet::new();
            let mut per_tau_ok = true;
            for tau in Permutation::all(k) {
                let dists = crate::perm::enumerate_distributions(&tau, s);
                if dists.len() != s.pow(k as u32) {
                    per_tau_ok = false;
                }
                total += dists.len();
                for d in &dists {
                    groups.insert(d.scheme());
                }
            }
            let expected_total = factorial(k) * s.pow(k as u32);
            let expected_groups = enumerate_schemes(k, s).len();
            let equal = per_tau_ok && total == expected_total && groups.len() == expected_groups;
            reports.push(VerificationReport {
                case: format!("distributions k={k} s={s}"),
                lhs_terms: 1,
                rhs_terms: 1,
                equal,
                witness: if equal {
                    None
                } else {
                    Some(Witness {
                        monomial: format!("groups={} total={total}", groups.len()),
                        lhs: total.to_string(),
                        rhs: expected_total.to_string(),
                    })
                },
                ms: started.elapsed().as_millis() as u64,
            });
        }
    }

    // class generating functions: per-scheme equality and aggregation
    for n in 1..=config.max_n {
        for k in 0..=n.min(2) {
            for s in 1..=config.max_s {
                let schemes = enumerate_schemes(k, s as usize);
                let mut aggregate = Polynomial::zero();
                for scheme in &schemes {
                    reports.push(verify_class_gf(scheme, n, s, plain)?);
                    aggregate = aggregate.add(&class_generating_function(scheme, n, s, plain)?);
                }
                let started = Instant::now();
                let case = CayleyCase::principal(n, k, s)?;
                let operator = operator_side(&case, plain)?;
                reports.push(make_report(
                    format!("class-gf-sum n={n} k={k} s={s}"),
                    &aggregate,
                    &operator,
                    started,
                ));
            }
        }
    }

    // the per-class reduction identity
    for n in 1..=config.max_n {
        for k in 1..=n.min(3) {
            for m in 1..=k {
                for scheme in enumerate_schemes(k, m) {
                    if scheme.nonempty_count() != m {
                        continue;
                    }
                    reports.push(verify_showthis(&scheme, n, plain)?);
                }
            }
        }
    }

    // generalized minor expansion: numeric trials and symbolic grid
    reports.extend(run_laplace_trials(
        &config.laplace_sizes,
        config.laplace_trials,
        config.seed,
    )?);
    for n in 1..=config.max_n.min(4) {
        for r in 0..=n.min(2) {
            for rows in subsets(n, r) {
                for cols in subsets(n, r) {
                    for i_size in 0..=r {
                        for fixed_combo in rows.elements().iter().copied().combinations(i_size) {
                            let fixed = IndexSet::new(fixed_combo)?;
                            reports.push(verify_laplace_symbolic(n, &rows, &cols, &fixed)?);
                        }
                    }
                }
            }
        }
    }

    reports.sort_by(|a, b| a.case.cmp(&b.case));
    Ok(reports)
}

fn factorial(k: usize) -> usize {
    (1..=k).product::<usize>().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elements: &[usize]) -> IndexSet {
        IndexSet::new(elements.to_vec()).unwrap()
    }

    fn opts() -> Options {
        Options::default()
    }

    #[test]
    fn cayley_single_derivative_case() {
        let case = CayleyCase::new(2, 1, set(&[1]), set(&[1])).unwrap();
        let (lhs, rhs) = cayley_sides(&case, opts()).unwrap();
        let expected = Polynomial::variable(VarId::new(2, 2));
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
    }

    #[test]
    fn cayley_full_minor_squared_case() {
        let case = CayleyCase::new(2, 2, set(&[1, 2]), set(&[1, 2])).unwrap();
        let (lhs, rhs) = cayley_sides(&case, opts()).unwrap();
        let det2 = SymbolicMatrix::generic(2).determinant().unwrap();
        assert_eq!(lhs, det2.scale(&BigInt::from(6)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cayley_s_zero_annihilates_both_sides() {
        let case = CayleyCase::new(2, 0, set(&[1]), set(&[1])).unwrap();
        let (lhs, rhs) = cayley_sides(&case, opts()).unwrap();
        assert!(lhs.is_zero());
        assert!(rhs.is_zero());
    }

    #[test]
    fn cayley_off_diagonal_sign() {
        // d/dx[1,2] det X2 = -x[2,1]; the right side carries ε({1})·ε({2})
        let case = CayleyCase::new(2, 1, set(&[1]), set(&[2])).unwrap();
        let (lhs, rhs) = cayley_sides(&case, opts()).unwrap();
        let expected = Polynomial::variable(VarId::new(2, 1)).neg();
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
    }

    #[test]
    fn cayley_rejects_mismatched_sets() {
        assert!(CayleyCase::new(3, 1, set(&[1, 2]), set(&[1])).is_err());
        assert!(CayleyCase::new(2, 1, set(&[3]), set(&[1])).is_err());
    }

    #[test]
    fn vivanti_full_derivative_is_factorial() {
        let (lhs, rhs) = vivanti_sides(3, 3, 1, opts()).unwrap();
        assert_eq!(lhs, Polynomial::constant(6));
        assert_eq!(rhs, Polynomial::constant(6));
    }

    #[test]
    fn vivanti_single_derivative_is_principal_cominor() {
        let (lhs, rhs) = vivanti_sides(3, 1, 1, opts()).unwrap();
        let x = SymbolicMatrix::generic(3);
        let expected = x
            .cominor(&MinorSpec::new(set(&[1]), set(&[1])))
            .unwrap()
            .determinant()
            .unwrap();
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
    }

    #[test]
    fn vivanti_squared_case() {
        let (lhs, rhs) = vivanti_sides(2, 2, 2, opts()).unwrap();
        let det2 = SymbolicMatrix::generic(2).determinant().unwrap();
        assert_eq!(lhs, det2.scale(&BigInt::from(6)));
        assert_eq!(rhs, lhs);
    }

    #[test]
    fn c_tau_m_counts() {
        let tau = Permutation::new(vec![1, 2]).unwrap();
        let m = TupleOfDiagrams::new(vec![
            Permutation::identity(3),
            Permutation::identity(3),
            Permutation::identity(3),
        ])
        .unwrap();
        assert_eq!(c_tau_m(&tau, &m), 9); // 3 choices per edge

        let m = TupleOfDiagrams::new(vec![Permutation::new(vec![2, 1, 3]).unwrap()]).unwrap();
        assert_eq!(c_tau_m(&tau, &m), 0); // edge (1,1) absent
    }

    #[test]
    fn c_tau_m_figure_configuration() {
        // four ways of erasing the edges of 3,1,2 from this 4-tuple
        let tuple = TupleOfDiagrams::new(vec![
            Permutation::new(vec![3, 1, 2, 5, 4]).unwrap(),
            Permutation::new(vec![5, 1, 3, 2, 4]).unwrap(),
            Permutation::new(vec![1, 4, 2, 5, 3]).unwrap(),
            Permutation::new(vec![2, 3, 4, 1, 5]).unwrap(),
        ])
        .unwrap();
        let tau = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(c_tau_m(&tau, &tuple), 4);
    }

    #[test]
    fn partial_action_tiny_cases() {
        let case = CayleyCase::principal(1, 1, 1).unwrap();
        assert_eq!(
            expand_partial_action(&case, opts()).unwrap(),
            Polynomial::one()
        );

        let case = CayleyCase::principal(2, 1, 1).unwrap();
        assert_eq!(
            expand_partial_action(&case, opts()).unwrap(),
            Polynomial::variable(VarId::new(2, 2))
        );

        let case = CayleyCase::principal(2, 2, 2).unwrap();
        let det2 = SymbolicMatrix::generic(2).determinant().unwrap();
        assert_eq!(
            expand_partial_action(&case, opts()).unwrap(),
            det2.scale(&BigInt::from(6))
        );
    }

    #[test]
    fn partial_action_requires_principal_sets() {
        let case = CayleyCase::new(2, 1, set(&[2]), set(&[2])).unwrap();
        assert!(matches!(
            expand_partial_action(&case, opts()),
            Err(LabError::InvalidCase(_))
        ));
    }

    #[test]
    fn partial_action_matches_operator_on_grid() {
        for n in 1..=3usize {
            for k in 0..=n {
                for s in 0..=2u32 {
                    let case = CayleyCase::principal(n, k, s).unwrap();
                    let expansion = expand_partial_action(&case, opts()).unwrap();
                    let operator = operator_side(&case, opts()).unwrap();
                    assert_eq!(expansion, operator, "n={n} k={k} s={s}");
                }
            }
        }
    }

    #[test]
    fn class_gf_single_word_scheme() {
        let scheme = PartitionScheme::new(vec![vec![1, 2]]).unwrap();
        let gf = class_generating_function(&scheme, 3, 1, opts()).unwrap();
        let x = SymbolicMatrix::generic(3);
        let expected = x
            .cominor(&MinorSpec::new(set(&[1, 2]), set(&[1, 2])))
            .unwrap()
            .determinant()
            .unwrap();
        assert_eq!(gf, expected);
    }

    #[test]
    fn class_gf_two_singleton_words() {
        let scheme = PartitionScheme::new(vec![vec![1], vec![2]]).unwrap();
        let gf = class_generating_function(&scheme, 2, 2, opts()).unwrap();
        let det2 = SymbolicMatrix::generic(2).determinant().unwrap();
        assert_eq!(gf, det2);
    }

    #[test]
    fn class_gf_is_scheme_independent() {
        let x = SymbolicMatrix::generic(3);
        let det3 = x.determinant().unwrap();
        let expected = det3.mul(
            &x.cominor(&MinorSpec::new(set(&[1, 2]), set(&[1, 2])))
                .unwrap()
                .determinant()
                .unwrap(),
        );
        let schemes = enumerate_schemes(2, 2);
        assert_eq!(schemes.len(), 6);
        for scheme in &schemes {
            let gf = class_generating_function(scheme, 3, 2, opts()).unwrap();
            assert_eq!(gf, expected, "scheme {scheme}");
        }
    }

    #[test]
    fn showthis_base_case() {
        let scheme = PartitionScheme::new(vec![vec![2, 1]]).unwrap();
        let (lhs, rhs) = showthis_sides(&scheme, 3, opts()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn showthis_two_parts() {
        let scheme = PartitionScheme::new(vec![vec![1], vec![2]]).unwrap();
        let (lhs, rhs) = showthis_sides(&scheme, 3, opts()).unwrap();
        assert_eq!(lhs, rhs);
        let scheme = PartitionScheme::new(vec![vec![1, 3], vec![2]]).unwrap();
        let (lhs, rhs) = showthis_sides(&scheme, 4, opts()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn showthis_rejects_empty_parts() {
        let scheme = PartitionScheme::new(vec![vec![1], vec![]]).unwrap();
        assert!(matches!(
            showthis_sides(&scheme, 2, opts()),
            Err(LabError::InvalidCase(_))
        ));
    }

    #[test]
    fn laplace_two_by_two_hand_case() {
        // R = C = {1}, I = {1}: both sides equal det(a) * a[2][2]
        let a: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(3), BigInt::from(-2)],
            vec![BigInt::from(5), BigInt::from(7)],
        ];
        let (lhs, rhs) = laplace_sides_int(&a, &set(&[1]), &set(&[1]), &set(&[1])).unwrap();
        let det = BigInt::from(3 * 7 - (-2) * 5);
        assert_eq!(lhs, &det * BigInt::from(7));
        assert_eq!(rhs, lhs);
    }

    #[test]
    fn laplace_symbolic_small() {
        let (lhs, rhs) =
            laplace_sides_symbolic(2, &IndexSet::range(2), &IndexSet::range(2), &set(&[1]))
                .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn laplace_shape_validation() {
        let a = vec![vec![BigInt::from(1)]];
        assert!(laplace_sides_int(&a, &set(&[1]), &IndexSet::empty(), &IndexSet::empty()).is_err());
        assert!(laplace_sides_int(&a, &set(&[1]), &set(&[1]), &set(&[2])).is_err());
        assert!(laplace_sides_int(&a, &set(&[2]), &set(&[2]), &IndexSet::empty()).is_err());
    }

    #[test]
    fn laplace_trials_are_reproducible() {
        let a = run_laplace_trials(&[2, 3], 3, 42).unwrap();
        let b = run_laplace_trials(&[2, 3], 3, 42).unwrap();
        let strip = |r: &VerificationReport| {
            (
                r.case.clone(),
                r.lhs_terms,
                r.rhs_terms,
                r.equal,
                r.witness.clone(),
            )
        };
        assert_eq!(
            a.iter().map(strip).collect::<Vec<_>>(),
            b.iter().map(strip).collect::<Vec<_>>()
        );
        assert!(a.iter().all(|r| r.equal));
    }

    #[test]
    fn budget_aborts_oversized_cases() {
        let tight = Options {
            budget: TermBudget(10),
            mutation: Mutation::None,
        };
        let case = CayleyCase::principal(3, 1, 3).unwrap();
        assert!(matches!(
            cayley_sides(&case, tight),
            Err(LabError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn mutation_flips_a_sign_sensitive_case() {
        let case = CayleyCase::new(2, 1, set(&[1]), set(&[1])).unwrap();
        let mutated = Options {
            budget: TermBudget::default(),
            mutation: Mutation::DropColumnSignFactor,
        };
        let report = verify_cayley(&case, mutated).unwrap();
        assert!(!report.equal);
        let witness = report.witness.unwrap();
        assert_eq!(witness.monomial, "x[2,2]");
        assert_eq!(witness.lhs, "1");
        assert_eq!(witness.rhs, "-1");
    }

    #[test]
    fn report_serializes_with_stable_field_order() {
        let report = VerificationReport {
            case: "demo".into(),
            lhs_terms: 1,
            rhs_terms: 1,
            equal: true,
            witness: None,
            ms: 0,
        };
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"case":"demo","lhs_terms":1,"rhs_terms":1,"equal":true,"witness":null,"ms":0}"#
        );
    }

    #[test]
    fn suite_with_tiny_config_is_all_equal() {
        let config = SuiteConfig {
            max_n: 2,
            max_s: 1,
            laplace_sizes: vec![2],
            laplace_trials: 2,
            ..SuiteConfig::default()
        };
        let reports = run_suite(&config).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.equal));
        // sorted by case descriptor
        let cases: Vec<&str> = reports.iter().map(|r| r.case.as_str()).collect();
        let mut sorted = cases.clone();
        sorted.sort();
        assert_eq!(cases, sorted);
    }

    #[test]
    fn suite_mutation_produces_a_witnessed_failure() {
        let config = SuiteConfig {
            max_n: 2,
            max_s: 1,
            laplace_sizes: vec![2],
            laplace_trials: 1,
            mutation: Mutation::DropColumnSignFactor,
            ..SuiteConfig::default()
        };
        let reports = run_suite(&config).unwrap();
        let failing: Vec<_> = reports.iter().filter(|r| !r.equal).collect();
        assert!(!failing.is_empty());
        assert!(failing.iter().all(|r| r.witness.is_some()));
        assert!(failing.iter().all(|r| r.case.starts_with("cayley")));
    }

    #[test]
    fn rising_factorial_values() {
        assert_eq!(rising_factorial(4, 3), BigInt::from(120));
        assert_eq!(rising_factorial(0, 3), BigInt::from(0));
        assert_eq!(rising_factorial(0, 0), BigInt::from(1));
        assert_eq!(rising_factorial(7, 0), BigInt::from(1));
    }
}
