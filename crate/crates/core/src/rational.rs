//! Exact linear algebra over arbitrary-precision rationals.
//!
//! Everything downstream (rank computations, centralizer dimensions,
//! degeneration limits, ideal-generator evaluation) reduces to arithmetic in
//! this module, so it is kept deliberately small: dense matrices, Gaussian
//! elimination with exact pivots, and inverses.  No floating point anywhere.

use crate::error::Error;
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Dense square matrix over the rationals.
///
/// Entry accessors use 1-based row/column indices so that code reads like the
/// underlying formulas; `rows()` exposes the raw 0-based storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    pub fn zero(n: usize) -> Self {
        RationalMatrix {
            n,
            rows: vec![vec![Rational::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "expected a square {n} x {n} matrix"
            )));
        }
        Ok(RationalMatrix { n, rows })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i - 1][j - 1]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: Rational) {
        self.rows[i - 1][j - 1] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|v| v.is_zero()))
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "cannot multiply {} x {} by {} x {}",
                self.n, self.n, other.n, other.n
            )));
        }
        let n = self.n;
        let mut out = RationalMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if other.rows[k][j].is_zero() {
                        continue;
                    }
                    let prod = &self.rows[i][k] * &other.rows[k][j];
                    out.rows[i][j] += prod;
                }
            }
        }
        Ok(out)
    }

    /// Restriction to the window `[lo, hi]` (1-based, inclusive): all entries
    /// outside the block of rows and columns `lo..=hi` are replaced by zero.
    /// The ambient size is kept, matching how window projections of matrices
    /// are used throughout the crate.
    pub fn window(&self, lo: usize, hi: usize) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.n);
        if lo == 0 || hi > self.n || lo > hi {
            return out;
        }
        for i in (lo - 1)..hi {
            for j in (lo - 1)..hi {
                out.rows[i][j] = self.rows[i][j].clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rank_of(self.rows.clone())
    }

    /// Inverse by Gauss-Jordan elimination; `None` for singular matrices.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        let n = self.n;
        let mut work = self.rows.clone();
        let mut inv = RationalMatrix::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
            work.swap(col, pivot);
            inv.swap(col, pivot);
            let p = work[col][col].clone();
            for j in 0..n {
                work[col][j] /= &p;
                inv[col][j] /= &p;
            }
            for r in 0..n {
                if r == col || work[r][col].is_zero() {
                    continue;
                }
                let factor = work[r][col].clone();
                for j in 0..n {
                    let w = &factor * &work[col][j];
                    work[r][j] -= w;
                    let v = &factor * &inv[col][j];
                    inv[r][j] -= v;
                }
            }
        }
        Some(RationalMatrix { n, rows: inv })
    }
}

/// Rank of an arbitrary (possibly rectangular) rational matrix given by rows.
pub fn rank_of(mut rows: Vec<Vec<Rational>>) -> usize {
    let n_rows = rows.len();
    if n_rows == 0 {
        return 0;
    }
    let n_cols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < n_rows && col < n_cols {
        // Prefer the simplest nonzero pivot to keep intermediate numbers small.
        let pivot = (rank..n_rows)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].numer().abs().bits() + rows[r][col].denom().bits());
        let Some(pivot) = pivot else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col].clone();
        for r in (rank + 1)..n_rows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &p;
            for c in col..n_cols {
                let w = &factor * &rows[rank][c];
                rows[r][c] -= w;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let id = RationalMatrix::identity(4);
        assert_eq!(id.rank(), 4);
        assert_eq!(RationalMatrix::zero(3).rank(), 0);

        // Rows (1,2,3), (2,4,6), (0,0,1): middle row is dependent.
        let m = RationalMatrix::from_integers(&[
            vec![1, 2, 3],
            vec![2, 4, 6],
            vec![0, 0, 1],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let m = RationalMatrix::from_integers(&[
            vec![1, 2, 0],
            vec![0, 1, -3],
            vec![0, 0, 2],
        ])
        .unwrap();
        let inv = m.inverse().expect("triangular with unit-free diagonal");
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(3));
        assert_eq!(inv.mul(&m).unwrap(), RationalMatrix::identity(3));

        let singular =
            RationalMatrix::from_integers(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn window_zeroes_outside_block() {
        let m = RationalMatrix::from_integers(&[
            vec![1, 2, 3],
            vec![4, 5, 6],
            vec![7, 8, 9],
        ])
        .unwrap();
        let w = m.window(2, 3);
        assert!(w.entry(1, 1).is_zero());
        assert!(w.entry(1, 2).is_zero());
        assert_eq!(w.entry(2, 2), &rat(5));
        assert_eq!(w.entry(3, 2), &rat(8));
    }
}
