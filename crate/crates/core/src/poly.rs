//! Sparse multivariate polynomial arithmetic over arbitrary-precision
//! integers.
//!
//! The indeterminates are the entries `x[i,j]` of a generic matrix, indexed
//! 1-based. Everything is kept canonical: monomials store no zero exponents,
//! polynomials store no zero coefficients, and terms are ordered by a fixed
//! monomial order. Structural equality is therefore mathematical equality,
//! and the textual form is reproducible byte for byte.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors from polynomial evaluation and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("no value assigned for {0}")]
    MissingVariable(VarId),
    #[error("malformed polynomial: {0}")]
    Parse(String),
}

/// A matrix indeterminate `x[row,col]`, 1-based in both indices.
///
/// The derived total order is lexicographic by `(row, col)`; it is the
/// canonical variable order used for monomial comparison and printing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    row: usize,
    col: usize,
}

impl VarId {
    /// Both indices must be at least 1.
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "variable indices are 1-based");
        VarId { row, col }
    }

    pub fn row(&self) -> usize {
        self.row
    }

    pub fn col(&self) -> usize {
        self.col
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// A product of variables with positive exponents, kept sorted by variable.
///
/// The empty monomial is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(VarId, u32)>,
}

impl Monomial {
    /// The constant monomial 1.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// A single variable to the first power.
    pub fn var(v: VarId) -> Self {
        Monomial {
            factors: vec![(v, 1)],
        }
    }

    /// Builds a monomial from (variable, exponent) pairs. Duplicate variables
    /// have their exponents added; zero exponents are dropped.
    pub fn from_exponents<I: IntoIterator<Item = (VarId, u32)>>(iter: I) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in iter {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            factors: map.into_iter().collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// Exponent of `v`, zero if absent.
    pub fn exponent(&self, v: VarId) -> u32 {
        self.factors
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.factors
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.factors
                .iter()
                .copied()
                .chain(other.factors.iter().copied()),
        )
    }

    /// Divides by one power of `v`; `None` if `v` does not occur.
    pub fn div_var(&self, v: VarId) -> Option<Monomial> {
        let i = self.factors.binary_search_by_key(&v, |&(w, _)| w).ok()?;
        let mut factors = self.factors.clone();
        if factors[i].1 > 1 {
            factors[i].1 -= 1;
        } else {
            factors.remove(i);
        }
        Some(Monomial { factors })
    }
}

impl Ord for Monomial {
    /// Lexicographic order on exponent vectors under the variable order: the
    /// monomial with the larger exponent on the earliest differing variable
    /// is the larger one.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut lhs = self.factors.iter().peekable();
        let mut rhs = other.factors.iter().peekable();
        loop {
            match (lhs.peek(), rhs.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        lhs.next();
                        rhs.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A canonical sparse polynomial: a map from monomials to nonzero
/// arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn variable(v: VarId) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), BigInt::one());
        Polynomial { terms }
    }

    /// Collects terms, merging duplicates and dropping zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.accumulate(m, c);
        }
        p
    }

    fn accumulate(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; the zero polynomial reports -1.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Terms in ascending canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.accumulate(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative: `x^e` maps to `e * x^(e-1)` in `v`.
    pub fn partial_derivative(&self, v: VarId) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let reduced = m.div_var(v).expect("positive exponent implies divisibility");
            out.accumulate(reduced, c * BigInt::from(e));
        }
        out
    }

    /// Exact integer value at `point`; every variable occurring in the
    /// polynomial must be assigned.
    pub fn evaluate(&self, point: &BTreeMap<VarId, BigInt>) -> Result<BigInt, PolyError> {
        let mut sum = BigInt::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for &(v, e) in m.factors() {
                let value = point.get(&v).ok_or(PolyError::MissingVariable(v))?;
                prod *= value.pow(e);
            }
            sum += prod;
        }
        Ok(sum)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

/// Textual format: terms in descending canonical order joined by ` + `, each
/// term `c*x[i,j]^e*...` with the coefficient omitted when it is ±1 (the sign
/// stays) and `^e` omitted when the exponent is 1. The zero polynomial prints
/// as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else if (-c).is_one() {
                write!(f, "-{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        let mut p = Polynomial::zero();
        for term in s.split('+') {
            let (m, c) = parse_term(term)?;
            p.accumulate(m, c);
        }
        Ok(p)
    }
}

fn parse_term(term: &str) -> Result<(Monomial, BigInt), PolyError> {
    let term = term.trim();
    if term.is_empty() {
        return Err(PolyError::Parse("empty term".into()));
    }
    let mut coeff = BigInt::one();
    let mut exponents: Vec<(VarId, u32)> = Vec::new();
    for raw in term.split('*') {
        let mut factor = raw.trim();
        if factor.is_empty() {
            return Err(PolyError::Parse(format!("empty factor in `{term}`")));
        }
        let mut negate = false;
        while let Some(rest) = factor.strip_prefix(['-', '+']) {
            if factor.starts_with('-') {
                negate = !negate;
            }
            factor = rest.trim_start();
        }
        if factor.starts_with('x') {
            let (v, e) = parse_var_factor(factor)?;
            if e > 0 {
                exponents.push((v, e));
            }
        } else {
            let n: BigInt = factor
                .parse()
                .map_err(|_| PolyError::Parse(format!("bad factor `{raw}`")))?;
            coeff *= n;
        }
        if negate {
            coeff = -coeff;
        }
    }
    Ok((Monomial::from_exponents(exponents), coeff))
}

fn parse_var_factor(factor: &str) -> Result<(VarId, u32), PolyError> {
    let err = || PolyError::Parse(format!("bad variable `{factor}`"));
    let body = factor.strip_prefix("x[").ok_or_else(err)?;
    let (inside, tail) = body.split_once(']').ok_or_else(err)?;
    let (row, col) = inside.split_once(',').ok_or_else(err)?;
    let row: usize = row.trim().parse().map_err(|_| err())?;
    let col: usize = col.trim().parse().map_err(|_| err())?;
    if row == 0 || col == 0 {
        return Err(err());
    }
    let exponent = match tail.trim() {
        "" => 1,
        e => {
            let e = e.strip_prefix('^').ok_or_else(err)?;
            e.trim().parse().map_err(|_| err())?
        }
    };
    Ok((VarId::new(row, col), exponent))
}
