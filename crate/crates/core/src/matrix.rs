//! Exact rational matrices: rank, unique-solution solving, and nullspace
//! directions.
//!
//! Elimination is fraction-free (Bareiss): each row is first scaled to
//! integers, then eliminated with the two-term integer update, which keeps
//! intermediate entries as minors rather than products of denominators.

use crate::rational::Rational;
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: matrix has {rows} rows, rhs has {rhs_len} entries")]
    DimensionMismatch { rows: usize, rhs_len: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolveOutcome {
    Unique(Vec<Rational>),
    NotUnique,
    Inconsistent,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Exact rank by fraction-free Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = to_integer_rows(self, None);
        echelon(&mut m).pivots.len()
    }

    /// Solves `A x = b`, distinguishing a unique solution from underdetermined
    /// and inconsistent systems.
    pub fn solve_unique(&self, b: &[Rational]) -> Result<SolveOutcome, MatrixError> {
        if b.len() != self.rows {
            return Err(MatrixError::DimensionMismatch {
                rows: self.rows,
                rhs_len: b.len(),
            });
        }
        let mut m = to_integer_rows(self, Some(b));
        let ech = echelon(&mut m);
        // A pivot in the augmented column means no solution.
        if ech.pivots.iter().any(|&(_, c)| c == self.cols) {
            return Ok(SolveOutcome::Inconsistent);
        }
        if ech.pivots.len() < self.cols {
            return Ok(SolveOutcome::NotUnique);
        }
        Ok(SolveOutcome::Unique(back_substitute(
            &m,
            &ech.pivots,
            self.cols,
        )))
    }

    /// Some nonzero rational vector `z` with `A z = 0`, or `None` when the
    /// matrix has full column rank.
    pub fn nullspace_vector(&self) -> Option<Vec<Rational>> {
        let mut m = to_integer_rows(self, None);
        let ech = echelon(&mut m);
        if ech.pivots.len() == self.cols {
            return None;
        }
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let free_col = (0..self.cols).find(|c| !pivot_cols.contains(c)).unwrap();

        // Set the free variable to 1 and back-solve the pivot variables.
        let mut z = vec![Rational::zero(); self.cols];
        z[free_col] = Rational::one();
        for &(pr, pc) in ech.pivots.iter().rev() {
            let mut sum = Rational::zero();
            for c in pc + 1..self.cols {
                if !m[pr][c].is_zero() && !z[c].is_zero() {
                    sum += Rational::from_integer(m[pr][c].clone()) * &z[c];
                }
            }
            z[pc] = -sum / Rational::from_integer(m[pr][pc].clone());
        }
        debug_assert!({
            (0..self.rows).all(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    acc += self.get(r, c) * &z[c];
                }
                acc.is_zero()
            })
        });
        Some(z)
    }
}

/// Incrementally maintained row space over the rationals. `try_add` keeps a
/// reduced copy of each row that enlarges the span and reports whether it did.
#[derive(Clone, Debug, Default)]
pub struct RowBasis {
    /// Reduced rows, each with the column of its leading nonzero entry.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowBasis {
    pub fn new() -> Self {
        RowBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the basis; on a nonzero residual the basis grows
    /// and the call returns true.
    pub fn try_add(&mut self, mut row: Vec<Rational>) -> bool {
        for (lead, basis_row) in &self.rows {
            if !row[*lead].is_zero() {
                let f = row[*lead].clone() / &basis_row[*lead];
                for (r, b) in row.iter_mut().zip(basis_row) {
                    *r -= &f * b;
                }
            }
        }
        match row.iter().position(|v| !v.is_zero()) {
            Some(lead) => {
                self.rows.push((lead, row));
                true
            }
            None => false,
        }
    }

    /// True without modifying the basis.
    pub fn would_add(&self, row: &[Rational]) -> bool {
        let mut row = row.to_vec();
        for (lead, basis_row) in &self.rows {
            if !row[*lead].is_zero() {
                let f = row[*lead].clone() / &basis_row[*lead];
                for (r, b) in row.iter_mut().zip(basis_row) {
                    *r -= &f * b;
                }
            }
        }
        row.iter().any(|v| !v.is_zero())
    }
}

/// Scales each row (and its rhs entry, if given) by the lcm of denominators.
fn to_integer_rows(m: &RationalMatrix, rhs: Option<&[Rational]>) -> Vec<Vec<BigInt>> {
    let extra = usize::from(rhs.is_some());
    (0..m.rows)
        .map(|r| {
            let mut lcm = BigInt::one();
            for c in 0..m.cols {
                lcm = num::integer::lcm(lcm, m.get(r, c).denom().abs());
            }
            if let Some(b) = rhs {
                lcm = num::integer::lcm(lcm, b[r].denom().abs());
            }
            let mut row = Vec::with_capacity(m.cols + extra);
            for c in 0..m.cols {
                let v = m.get(r, c);
                row.push(v.numer() * (&lcm / v.denom()));
            }
            if let Some(b) = rhs {
                row.push(b[r].numer() * (&lcm / b[r].denom()));
            }
            row
        })
        .collect()
}

struct Echelon {
    /// (row, col) of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
}

/// In-place fraction-free row echelon form (Bareiss two-term update). Row
/// swaps pick the first nonzero entry in the current column; the division by
/// the previous pivot is exact.
fn echelon(m: &mut [Vec<BigInt>]) -> Echelon {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot_row);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let numerator = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                let (q, rem) = num::integer::div_rem(numerator, prev.clone());
                debug_assert!(rem.is_zero());
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        pivots.push((row, col));
        row += 1;
    }
    Echelon { pivots }
}

/// Back-substitution on an augmented echelon matrix with one pivot per
/// variable column.
fn back_substitute(m: &[Vec<BigInt>], pivots: &[(usize, usize)], cols: usize) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); cols];
    for &(pr, pc) in pivots.iter().rev() {
        let mut sum = Rational::from_integer(m[pr][cols].clone());
        for c in pc + 1..cols {
            if !m[pr][c].is_zero() {
                sum -= Rational::from_integer(m[pr][c].clone()) * &x[c];
            }
        }
        x[pc] = sum / Rational::from_integer(m[pr][pc].clone());
    }
    x
}
