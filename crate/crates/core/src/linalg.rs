//! Exact rational arithmetic and dense linear algebra.
//!
//! Everything downstream (similarity matrices, weightings, Euler
//! characteristics) is computed over `Rational`, an arbitrary-precision
//! fraction kept in lowest terms. There is no floating point anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always normalized with a positive denominator.
pub type Rational = BigRational;

/// Column (or row) vector of rationals, indexed like the owning matrix.
pub type RationalVector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from nested rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        Ok(Self {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for integer matrices, mostly used in tests.
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<RationalVector, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `v · self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[Rational]) -> Result<RationalVector, LinalgError> {
        if v.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "row vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        Ok((0..self.cols)
            .map(|j| (0..self.rows).map(|i| &v[i] * self.get(i, j)).sum())
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Sum of every entry.
    pub fn entry_sum(&self) -> Rational {
        self.entries.iter().sum()
    }

    /// Reorders rows and columns simultaneously: `out[i][j] = self[p[i]][p[j]]`.
    pub fn permuted(&self, p: &[usize]) -> Result<Self, LinalgError> {
        if !self.is_square() || p.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(
                "permutation length must match a square matrix".into(),
            ));
        }
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, &pi) in p.iter().enumerate() {
            for (j, &pj) in p.iter().enumerate() {
                out.set(i, j, self.get(pi, pj).clone());
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub values: RationalVector,
    /// Rank of the coefficient matrix.
    pub rank: usize,
}

impl Solution {
    /// Whether the solution is the only one (full column rank).
    pub fn is_unique(&self) -> bool {
        self.rank == self.values.len()
    }
}

/// Gauss-Jordan elimination on `[m | rhs]` where `rhs` has `k` columns.
///
/// Pivots on the first nonzero entry of each column, scanning rows top to
/// bottom. Returns the reduced augmented matrix and the pivot columns.
fn reduce(m: &RationalMatrix, rhs: &RationalMatrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let n = m.rows;
    let width = m.cols + rhs.cols;
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = Vec::with_capacity(width);
            row.extend_from_slice(m.row(i));
            row.extend_from_slice(rhs.row(i));
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for e in a[r].iter_mut() {
            *e *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (e, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *e -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

fn check_system(m: &RationalMatrix, b: &[Rational]) -> Result<(), LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::DimensionMismatch(format!(
            "expected a square matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    if b.len() != m.rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            m.rows
        )));
    }
    Ok(())
}

/// Solves `m · w = b`, reporting the rank alongside the canonical solution
/// (free variables set to zero).
pub fn solve_right_detailed(m: &RationalMatrix, b: &[Rational]) -> Result<Option<Solution>, LinalgError> {
    check_system(m, b)?;
    let rhs = RationalMatrix {
        rows: b.len(),
        cols: 1,
        entries: b.to_vec(),
    };
    let (a, pivots) = reduce(m, &rhs);
    let rank = pivots.len();
    if a[rank..].iter().any(|row| !row[m.cols].is_zero()) {
        return Ok(None);
    }
    let mut values = vec![Rational::zero(); m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        values[c] = a[r][m.cols].clone();
    }
    Ok(Some(Solution { values, rank }))
}

/// Solves `m · w = b` exactly; `None` when the system is inconsistent.
pub fn solve_right(m: &RationalMatrix, b: &[Rational]) -> Result<Option<RationalVector>, LinalgError> {
    Ok(solve_right_detailed(m, b)?.map(|s| s.values))
}

/// Solves `v · m = b` (a row-vector system), i.e. `mᵀ · vᵀ = bᵀ`.
pub fn solve_left_detailed(m: &RationalMatrix, b: &[Rational]) -> Result<Option<Solution>, LinalgError> {
    check_system(m, b)?;
    solve_right_detailed(&m.transpose(), b)
}

pub fn solve_left(m: &RationalMatrix, b: &[Rational]) -> Result<Option<RationalVector>, LinalgError> {
    Ok(solve_left_detailed(m, b)?.map(|s| s.values))
}

/// Exact inverse, or `None` if `m` is singular or not square.
pub fn invert(m: &RationalMatrix) -> Option<RationalMatrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows;
    let (a, pivots) = reduce(m, &RationalMatrix::identity(n));
    if pivots.len() < n {
        return None;
    }
    let entries = a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
    Some(RationalMatrix {
        rows: n,
        cols: n,
        entries,
    })
}

/// The all-ones vector `u` of length `n`.
pub fn ones(n: usize) -> RationalVector {
    vec![Rational::one(); n]
}
