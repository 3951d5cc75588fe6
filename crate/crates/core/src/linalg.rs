//! Exact linear algebra: reduced row echelon form over the rationals,
//! fraction-free (Bareiss) rank for integer matrices, and integer lattice
//! rank via Hermite normal form.
//!
//! These are the substrate for counting graded-component dimensions and for
//! the rank of the group generated by a monoid inside Z^n.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A dense rows x cols matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Build from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::MalformedMatrix(format!(
                    "row length {} differs from {}",
                    row.len(),
                    c
                )));
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Reduced row echelon form with pivots chosen left-to-right along
/// `pivot_order`, a permutation of the column indices.
///
/// Returns the echelon matrix and the pivot columns in the order they were
/// used; the rank is the number of pivots.
pub fn row_echelon(m: &RationalMatrix, pivot_order: &[usize]) -> Result<(RationalMatrix, Vec<usize>)> {
    let cols = m.cols();
    if pivot_order.len() != cols {
        return Err(Error::BadPivotOrder { cols });
    }
    let mut seen = vec![false; cols];
    for &c in pivot_order {
        if c >= cols || seen[c] {
            return Err(Error::BadPivotOrder { cols });
        }
        seen[c] = true;
    }

    let mut mat = m.clone();
    let mut pivots = Vec::new();
    let mut next_row = 0usize;
    for &col in pivot_order {
        let Some(pivot_row) = (next_row..mat.rows()).find(|&r| !mat.get(r, col).is_zero()) else {
            continue;
        };
        mat.swap_rows(next_row, pivot_row);

        let inv = mat.get(next_row, col).recip();
        for c in 0..cols {
            let v = mat.get(next_row, c) * &inv;
            mat.set(next_row, c, v);
        }
        for r in 0..mat.rows() {
            if r == next_row || mat.get(r, col).is_zero() {
                continue;
            }
            let factor = mat.get(r, col).clone();
            for c in 0..cols {
                let v = mat.get(r, c) - mat.get(next_row, c) * &factor;
                mat.set(r, c, v);
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == mat.rows() {
            break;
        }
    }
    Ok((mat, pivots))
}

/// Rank via reduced row echelon form with natural column order.
pub fn rational_rank(m: &RationalMatrix) -> usize {
    let order: Vec<usize> = (0..m.cols()).collect();
    row_echelon(m, &order)
        .expect("identity pivot order is valid")
        .1
        .len()
}

/// Rank of an integer matrix by fraction-free Bareiss elimination.
///
/// Intermediate entries stay integral, which bounds coefficient growth
/// compared to naive integer elimination.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    if r == 0 || c == 0 {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..c {
        let Some(p) = (row..r).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for i in (row + 1)..r {
            for j in (col + 1)..c {
                let v = (&m[row][col] * &m[i][j] - &m[i][col] * &m[row][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        rank += 1;
        row += 1;
        if row == r {
            break;
        }
    }
    rank
}

/// A finite list of generators of a subgroup of Z^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    dim: usize,
    generators: Vec<Vec<BigInt>>,
}

impl IntegerLattice {
    pub fn new(dim: usize, generators: Vec<Vec<BigInt>>) -> Result<Self> {
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.len(),
                });
            }
        }
        Ok(Self { dim, generators })
    }

    pub fn from_i64_rows(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            dim,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// Rank of the generated subgroup, i.e. the number of nonzero rows of
    /// the Hermite normal form.
    pub fn rank(&self) -> usize {
        hermite_normal_form(&self.generators).len()
    }
}

/// Row-style Hermite normal form over Z, reducing column by column with
/// Euclidean steps. Returns only the nonzero rows.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| !r.iter().all(Zero::is_zero)).cloned().collect();
    if m.is_empty() {
        return m;
    }
    let cols = m[0].len();
    let mut row = 0usize;
    for col in 0..cols {
        if row >= m.len() {
            break;
        }
        // gcd-eliminate everything below (row, col)
        loop {
            let Some(p) = (row..m.len())
                .filter(|&i| !m[i][col].is_zero())
                .min_by_key(|&i| m[i][col].abs().clone())
            else {
                break;
            };
            m.swap(row, p);
            let mut any_left = false;
            let pivot = m[row][col].clone();
            for i in (row + 1)..m.len() {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = div_floor_big(&m[i][col], &pivot);
                for j in 0..cols {
                    let v = &m[i][j] - &q * &m[row][j];
                    m[i][j] = v;
                }
                if !m[i][col].is_zero() {
                    any_left = true;
                }
            }
            if !any_left {
                break;
            }
        }
        if !m[row][col].is_zero() {
            if m[row][col].is_negative() {
                for j in 0..cols {
                    m[row][j] = -m[row][j].clone();
                }
            }
            row += 1;
        }
        // drop rows that became zero
        m.retain(|r| !r.iter().all(Zero::is_zero));
        row = row.min(m.len());
    }
    m.retain(|r| !r.iter().all(Zero::is_zero));
    m
}

fn div_floor_big(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.div_floor(b)
}
