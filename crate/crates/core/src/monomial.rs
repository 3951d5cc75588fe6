//! Monomials, weighted gradings, matrix monomial orders, and polynomials
//! with exact rational coefficients.
//!
//! A monomial x_1^{a_1} ... x_n^{a_n} is stored as its exponent vector
//! (a_1, ..., a_n) in N^n. Orders are matrices of integer weight rows: to
//! compare two monomials, the rows are applied to the difference of the
//! exponent vectors until one row gives a nonzero sign. Lex tie-break rows
//! are appended on construction so every order is total.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient type used throughout the crate.
pub type Coeff = BigRational;

/// Build a coefficient from a numerator/denominator pair of machine ints.
pub fn coeff(numer: i64, denom: i64) -> Coeff {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A point of N^n: the exponent vector of a monomial.
///
/// The ambient dimension is the vector length and is fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    exps: Vec<u32>,
}

impl ExponentVector {
    /// Monomial with the given exponents.
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable x_i (0-based) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self { exps }
    }

    /// Ambient variable count.
    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    /// Exponent of variable `i`.
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    /// The exponents as a slice.
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// True for the monomial 1.
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Componentwise sum, i.e. the product of the two monomials.
    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Componentwise difference, if `other` divides `self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.dim() != other.dim() {
            return None;
        }
        let mut exps = Vec::with_capacity(self.dim());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Self { exps })
    }

    /// Total degree (all weights 1).
    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Weighted degree sum w_i * a_i.
    pub fn weighted_degree(&self, w: &WeightVector) -> Result<u64> {
        check_dim(w.dim(), self.dim())?;
        Ok(self
            .exps
            .iter()
            .zip(w.weights())
            .map(|(&a, &wi)| u64::from(a) * u64::from(wi))
            .sum())
    }
}

/// One positive integer weight per variable.
///
/// Positivity keeps every weighted-degree component finite: only finitely
/// many monomials have a given weighted degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<u32>,
}

impl WeightVector {
    /// Validate that every weight is >= 1.
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::ZeroWeight { index: i });
        }
        Ok(Self { weights })
    }

    /// The standard grading: every variable has weight 1.
    pub fn ones(n: usize) -> Self {
        Self {
            weights: vec![1; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }
}

/// A matrix monomial order on n variables.
///
/// Comparison applies the rows top-down to the difference of two exponent
/// vectors; the first nonzero dot product decides. Construction appends the
/// identity (lex) rows after the user rows, so ties can only happen for
/// equal monomials and the order is total. Validity is the column
/// criterion: for each variable, the first row with a nonzero entry in its
/// column must be positive there, which guarantees 1 < x_i for all i.
/// Multiplicativity (u < v implies uw < vw) holds for every matrix order
/// because comparison only sees the difference of exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    vars: usize,
    rows: Vec<Vec<i64>>,
    user_rows: usize,
}

impl MonomialOrder {
    /// Order with the given weight rows, refined by lex.
    pub fn from_rows(vars: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        for row in &rows {
            if row.len() != vars {
                return Err(Error::DimensionMismatch {
                    expected: vars,
                    got: row.len(),
                });
            }
        }
        let user_rows = rows.len();
        let mut all = rows;
        for i in 0..vars {
            let mut unit = vec![0i64; vars];
            unit[i] = 1;
            all.push(unit);
        }
        let order = Self {
            vars,
            rows: all,
            user_rows,
        };
        order.check_columns()?;
        Ok(order)
    }

    /// Pure lexicographic order (x_1 > x_2 > ... > x_n).
    pub fn lex(vars: usize) -> Self {
        Self::from_rows(vars, Vec::new()).expect("lex is always valid")
    }

    /// Graded lexicographic order: total degree first, then lex.
    pub fn grlex(vars: usize) -> Self {
        Self::from_rows(vars, vec![vec![1; vars]]).expect("grlex is always valid")
    }

    /// The first row with a nonzero entry in each column must be positive.
    fn check_columns(&self) -> Result<()> {
        for col in 0..self.vars {
            for row in &self.rows {
                if row[col] != 0 {
                    if row[col] < 0 {
                        return Err(Error::InvalidOrder { column: col });
                    }
                    break;
                }
            }
        }
        Ok(())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// The full row matrix, including the appended lex rows.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// The rows supplied at construction, before the lex refinement.
    pub fn user_rows(&self) -> &[Vec<i64>] {
        &self.rows[..self.user_rows]
    }

    /// Compare two monomials. `Equal` only for identical exponent vectors.
    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
        check_dim(self.vars, a.dim())?;
        check_dim(self.vars, b.dim())?;
        Ok(self.cmp_vectors(a, b))
    }

    /// Comparison with dimensions assumed valid (hot path for sorting).
    pub(crate) fn cmp_vectors(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        for row in &self.rows {
            let mut acc: i128 = 0;
            for ((&ra, &ea), &eb) in row.iter().zip(a.exps()).zip(b.exps()) {
                acc += i128::from(ra) * (i128::from(ea) - i128::from(eb));
            }
            match acc.cmp(&0) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }
}

/// A polynomial with exact rational coefficients, stored as a map from
/// exponent vector to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<ExponentVector, Coeff>,
}

impl Polynomial {
    /// The zero polynomial in `n` variables.
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(vars: usize) -> Self {
        Self::term(vars, ExponentVector::one(vars), Coeff::one())
    }

    /// The variable x_i.
    pub fn var(vars: usize, i: usize) -> Self {
        Self::term(vars, ExponentVector::var(vars, i), Coeff::one())
    }

    /// A single term c * m (zero coefficients are pruned).
    pub fn term(vars: usize, m: ExponentVector, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { vars, terms }
    }

    /// Build from (monomial, coefficient) pairs, summing duplicates.
    pub fn from_terms<I>(vars: usize, it: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Coeff)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in it {
            check_dim(vars, m.dim())?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: ExponentVector, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in storage order (lexicographic on exponent vectors, which is
    /// unrelated to any monomial order).
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Coeff)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff_of(&self, m: &ExponentVector) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.vars, other.vars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.vars, other.vars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        Self {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Exact product; zero coefficients are pruned.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.vars, other.vars)?;
        let mut out = Self::zero(self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.add(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut out = Self::one(self.vars);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// The order-maximal monomial of the polynomial with its coefficient.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(ExponentVector, Coeff)> {
        check_dim(ord.vars(), self.vars)?;
        let mut best: Option<(&ExponentVector, &Coeff)> = None;
        for (m, c) in &self.terms {
            match best {
                None => best = Some((m, c)),
                Some((bm, _)) => {
                    if ord.cmp_vectors(m, bm) == Ordering::Greater {
                        best = Some((m, c));
                    }
                }
            }
        }
        best.map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Weighted degree if all terms agree on it, `None` for mixed degrees.
    /// Errors on the zero polynomial, which has no well-defined degree.
    pub fn homogeneous_degree(&self, w: &WeightVector) -> Result<Option<u64>> {
        check_dim(w.dim(), self.vars)?;
        let mut it = self.terms.keys();
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        let d = first.weighted_degree(w)?;
        for m in it {
            if m.weighted_degree(w)? != d {
                return Ok(None);
            }
        }
        Ok(Some(d))
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}
