//! Window rank matrices and the closure order.
//!
//! For an involution the entry `R[i][j]` counts the cycles contained in the
//! window `[i, j]`; equivalently it is the rank of the window projection of
//! the representative matrix.  These integer matrices characterize orbits
//! completely: a simple set of local properties describes exactly which
//! matrices occur, the cycle positions can be read back off the corners, and
//! entrywise comparison of rank matrices is the closure order on orbits.
//!
//! For general nilpotent matrices the analogous invariant records the whole
//! Jordan type of every window (a "shape matrix").  Windowwise dominance of
//! shape matrices is a coarser order than closure containment; the module
//! exposes a documented 6 x 6 pair witnessing the gap.

use crate::error::Error;
use crate::involution::{Involution, NilpotentMatrix};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Result of comparing two matrices entrywise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderRelation {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Integer matrix of window ranks.  Entries on or below the diagonal are
/// zero; accessors treat out-of-range indices as zero so that boundary cases
/// of the local rules read naturally.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct RankMatrix {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<Vec<Vec<u32>>> for RankMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        RankMatrix::from_rows(rows)
    }
}

impl From<RankMatrix> for Vec<Vec<u32>> {
    fn from(r: RankMatrix) -> Self {
        r.rows
    }
}

impl RankMatrix {
    /// Wraps a square grid of integers.  Only squareness is enforced here;
    /// use [`RankMatrix::is_valid`] to test whether the grid is the rank
    /// matrix of an involution.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidRankMatrix(format!(
                "expected a square {n} x {n} grid"
            )));
        }
        Ok(RankMatrix { n, rows })
    }

    /// Rank matrix of an involution: entry `(i, j)` counts cycles inside the
    /// window `[i, j]`.
    pub fn of_involution(sigma: &Involution) -> RankMatrix {
        let n = sigma.n();
        let mut rows = vec![vec![0u32; n]; n];
        for i in 1..=n {
            for j in (i + 1)..=n {
                rows[i - 1][j - 1] = sigma
                    .cycles()
                    .iter()
                    .filter(|&&(a, b)| i <= a && b <= j)
                    .count() as u32;
            }
        }
        RankMatrix { n, rows }
    }

    /// Rank matrix of an arbitrary matrix: entry `(i, j)` is the exact rank
    /// of the window projection to `[i, j]`.
    pub fn of_matrix(u: &NilpotentMatrix) -> RankMatrix {
        let n = u.n();
        let full = u.to_rational();
        let mut rows = vec![vec![0u32; n]; n];
        for i in 1..=n {
            for j in (i + 1)..=n {
                rows[i - 1][j - 1] = full.window(i, j).rank() as u32;
            }
        }
        RankMatrix { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at 1-based `(i, j)`; any out-of-range index reads as zero.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            0
        } else {
            self.rows[i - 1][j - 1]
        }
    }

    /// Tests the three defining properties of involution rank matrices:
    /// (i) zero on and below the diagonal, (ii) adjacent entries step by at
    /// most one when the window grows by one row or column, (iii) every
    /// corner increment propagates along its row and column, and the row of a
    /// cycle end / column of a cycle start contribute nothing.  A grid passes
    /// exactly when it is the rank matrix of some involution.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        // (i) zero on and below the diagonal.
        for i in 1..=n {
            for j in 1..=i {
                if self.entry(i, j) != 0 {
                    return false;
                }
            }
        }
        // (ii) growing the window by one row or column adds 0 or 1.
        for i in 1..=n {
            for j in 1..=n {
                let r = self.entry(i, j);
                for smaller in [self.entry(i + 1, j), self.entry(i, j.wrapping_sub(1))] {
                    if !(smaller <= r && r <= smaller + 1) {
                        return false;
                    }
                }
            }
        }
        // (iii) corner increments propagate.
        for i in 1..=n {
            for j in (i + 1)..=n {
                if !self.has_corner(i, j) {
                    continue;
                }
                for k in 1..=n {
                    let step_a = u32::from(k >= j);
                    if self.entry(i, k) != self.entry(i + 1, k) + step_a {
                        return false;
                    }
                    let step_b = u32::from(k <= i);
                    if self.entry(k, j) != self.entry(k, j - 1) + step_b {
                        return false;
                    }
                    if self.entry(j, k) != self.entry(j + 1, k) {
                        return false;
                    }
                    if self.entry(k, i) != self.entry(k, i - 1) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Corner test: the four entries at `(i, j)` force a one of the
    /// representative matrix exactly there.
    fn has_corner(&self, i: usize, j: usize) -> bool {
        let r = self.entry(i, j);
        r == self.entry(i + 1, j) + 1
            && r == self.entry(i, j - 1) + 1
            && r == self.entry(i + 1, j - 1) + 1
    }

    /// Reconstructs the involution from a valid rank matrix by reading the
    /// cycle positions off the corner increments.
    pub fn to_involution(&self) -> Result<Involution, Error> {
        if !self.is_valid() {
            return Err(Error::InvalidRankMatrix(
                "grid fails the window rank-matrix characterization".to_string(),
            ));
        }
        let mut cycles = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if self.has_corner(i, j) {
                    cycles.push((i, j));
                }
            }
        }
        let sigma = Involution::new(self.n, cycles)?;
        debug_assert_eq!(RankMatrix::of_involution(&sigma), *self);
        Ok(sigma)
    }

    /// Entrywise comparison; the closure order on orbits.
    pub fn compare(&self, other: &RankMatrix) -> Result<OrderRelation, Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "comparing rank matrices of sizes {} and {}",
                self.n, other.n
            )));
        }
        let (mut any_less, mut any_greater) = (false, false);
        for i in 0..self.n {
            for j in 0..self.n {
                match self.rows[i][j].cmp(&other.rows[i][j]) {
                    std::cmp::Ordering::Less => any_less = true,
                    std::cmp::Ordering::Greater => any_greater = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        Ok(match (any_less, any_greater) {
            (false, false) => OrderRelation::Equal,
            (true, false) => OrderRelation::Less,
            (false, true) => OrderRelation::Greater,
            (true, true) => OrderRelation::Incomparable,
        })
    }

    /// `self <= other` entrywise.
    pub fn leq(&self, other: &RankMatrix) -> Result<bool, Error> {
        Ok(matches!(
            self.compare(other)?,
            OrderRelation::Less | OrderRelation::Equal
        ))
    }

    /// Classifies the 2 x 2 corner at `(i, j)` into one of the five local
    /// patterns that can occur in a valid rank matrix.
    pub fn classify_local(&self, i: usize, j: usize) -> Result<LocalPattern, Error> {
        let ne = self.entry(i, j);
        let nw = self.entry(i, j.wrapping_sub(1));
        let sw = self.entry(i + 1, j.wrapping_sub(1));
        let se = self.entry(i + 1, j);
        let delta =
            |v: u32| -> Option<u32> { v.checked_sub(sw).filter(|d| *d <= 2) };
        let pattern = match (delta(ne), delta(nw), delta(se)) {
            (Some(0), Some(0), Some(0)) => Some(LocalPattern::AllEqual),
            (Some(2), Some(1), Some(1)) => Some(LocalPattern::RowAndColumn),
            (Some(1), Some(0), Some(0)) => Some(LocalPattern::CornerCycle),
            (Some(1), Some(0), Some(1)) => Some(LocalPattern::ColumnOnly),
            (Some(1), Some(1), Some(0)) => Some(LocalPattern::RowOnly),
            _ => None,
        };
        pattern.ok_or_else(|| {
            Error::InvalidRankMatrix(format!(
                "corner at ({i}, {j}) matches no local pattern: \
                 [{nw}, {ne}; {sw}, {se}]"
            ))
        })
    }
}

impl fmt::Display for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let mut first = true;
            for v in row {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The five ways a 2 x 2 corner of a valid rank matrix can look, named after
/// where the forced ones of the representative matrix sit relative to the
/// corner `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LocalPattern {
    /// No one in row `i` up to column `j`, none in column `j` from row `i`
    /// down: all four entries agree.
    AllEqual,
    /// A one in row `i` strictly left of `j` and a one in column `j`
    /// strictly below `i`: the corner entry jumps by two.
    RowAndColumn,
    /// A one exactly at `(i, j)`: only the corner entry jumps.
    CornerCycle,
    /// A one in column `j` strictly below row `i`: both rows jump at `j`.
    ColumnOnly,
    /// A one in row `i` strictly left of column `j`: row `i` is ahead of row
    /// `i + 1` on both sides.
    RowOnly,
}

/// Partition (non-increasing, positive parts).
pub type Partition = Vec<usize>;

/// Dominance: `lhs <= rhs` when every prefix sum of `lhs` is at most the
/// corresponding prefix sum of `rhs`, over the common number of parts.
pub fn dominance_leq(lhs: &[usize], rhs: &[usize]) -> bool {
    let (mut acc_l, mut acc_r) = (0usize, 0usize);
    for s in 0..lhs.len().min(rhs.len()) {
        acc_l += lhs[s];
        acc_r += rhs[s];
        if acc_l > acc_r {
            return false;
        }
    }
    true
}

/// Jordan type of every window of a nilpotent matrix, as column partitions:
/// part `p` of cell `(i, j)` is `rank(w^(p-1)) - rank(w^p)` for the window
/// projection `w`.  Cells below the diagonal are empty; diagonal cells are
/// the trivial partition `[1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Partition>>", into = "Vec<Vec<Partition>>")]
pub struct ShapeMatrix {
    n: usize,
    cells: Vec<Vec<Partition>>,
}

impl TryFrom<Vec<Vec<Partition>>> for ShapeMatrix {
    type Error = Error;
    fn try_from(cells: Vec<Vec<Partition>>) -> Result<Self, Error> {
        let n = cells.len();
        if cells.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "expected a square {n} x {n} grid of partitions"
            )));
        }
        Ok(ShapeMatrix { n, cells })
    }
}

impl From<ShapeMatrix> for Vec<Vec<Partition>> {
    fn from(d: ShapeMatrix) -> Self {
        d.cells
    }
}

impl ShapeMatrix {
    pub fn of_matrix(u: &NilpotentMatrix) -> ShapeMatrix {
        let n = u.n();
        let full = u.to_rational();
        let mut cells = vec![vec![Vec::new(); n]; n];
        for i in 1..=n {
            for j in i..=n {
                let window = full.window(i, j);
                let size = j + 1 - i;
                let mut ranks = vec![size];
                let mut power = window.clone();
                loop {
                    let r = power.rank();
                    ranks.push(r);
                    if r == 0 {
                        break;
                    }
                    power = power.mul(&window).expect("same ambient size");
                }
                cells[i - 1][j - 1] = ranks.windows(2).map(|w| w[0] - w[1]).collect();
            }
        }
        ShapeMatrix { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partition at 1-based `(i, j)`; empty below the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> &[usize] {
        &self.cells[i - 1][j - 1]
    }
}

/// Closure-order comparison as far as window Jordan types can see it:
/// true when the orbit of `a` lies weakly below the orbit of `b`, i.e. every
/// window of `a` is at least as degenerate as the same window of `b`.
///
/// Degenerating a matrix merges and shortens Jordan blocks, which makes the
/// *column* partition of each window larger in dominance, so "a below b" is
/// the windowwise test `b`-partition `<=` `a`-partition.  For rank matrices
/// of square-zero matrices this agrees with entrywise `<=`; in general it is
/// a strictly coarser relation than closure containment, see
/// [`shape_order_gap_example`].
pub fn shape_dominance_leq(a: &ShapeMatrix, b: &ShapeMatrix) -> Result<bool, Error> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(format!(
            "comparing shape matrices of sizes {} and {}",
            a.n, b.n
        )));
    }
    for i in 1..=a.n {
        for j in i..=a.n {
            if !dominance_leq(b.entry(i, j), a.entry(i, j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A pair `(m, n)` of nilpotent 6 x 6 matrices with the same Jordan type and
/// the same orbit dimension under the triangular group, whose shape matrices
/// are comparable (`shape_dominance_leq(D_n, D_m)` holds) even though
/// neither orbit closure contains the other.  Windowwise Jordan data
/// therefore cannot detect closure containment beyond the square-zero case.
pub fn shape_order_gap_example() -> (NilpotentMatrix, NilpotentMatrix) {
    let m = NilpotentMatrix::from_integers(&[
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 0],
        vec![0, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0],
    ])
    .expect("strictly upper triangular");
    let n = NilpotentMatrix::from_integers(&[
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 1],
        vec![0, 0, 0, 0, 0, 1],
        vec![0, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0],
    ])
    .expect("strictly upper triangular");
    (m, n)
}
