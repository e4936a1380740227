//! Involutions as orbit labels.
//!
//! Each orbit of the upper-triangular group acting on square-zero strictly
//! upper-triangular matrices contains exactly one 0/1 matrix whose ones form a
//! partial matching: a set of disjoint cycles `(i_s, j_s)` with `i_s < j_s`.
//! This module implements those labels and the operations on them that the
//! rest of the crate builds on: enumeration, window projection, cycle drops,
//! the set of droppable cycles, and the closed orbit-dimension formula.

use crate::error::Error;
use crate::rational::{rat, Rational, RationalMatrix};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A product of disjoint two-cycles `(i_1, j_1) .. (i_k, j_k)` in the
/// symmetric group on `{1, .., n}`, i.e. an involution.
///
/// Canonical storage: `i_s < j_s` within each cycle and cycles sorted by
/// increasing first entry.  The identity has an empty cycle list.  The derived
/// ordering (ambient size, then lexicographic on the canonical cycle list) is
/// the deterministic enumeration order used throughout.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawInvolution", into = "RawInvolution")]
pub struct Involution {
    n: usize,
    cycles: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawInvolution {
    n: usize,
    cycles: Vec<(usize, usize)>,
}

impl TryFrom<RawInvolution> for Involution {
    type Error = Error;
    fn try_from(raw: RawInvolution) -> Result<Self, Error> {
        Involution::new(raw.n, raw.cycles)
    }
}

impl From<Involution> for RawInvolution {
    fn from(sigma: Involution) -> Self {
        RawInvolution {
            n: sigma.n,
            cycles: sigma.cycles,
        }
    }
}

impl Involution {
    /// Builds an involution from an arbitrary list of cycles, normalizing the
    /// entry order inside each cycle and the cycle order.  Rejects repeated
    /// letters, fixed pairs `(a, a)` and letters outside `1..=n`.
    pub fn new(n: usize, cycles: Vec<(usize, usize)>) -> Result<Self, Error> {
        let mut seen = vec![false; n + 1];
        let mut canonical = Vec::with_capacity(cycles.len());
        for (a, b) in cycles {
            if a == b {
                return Err(Error::InvalidInvolution(format!(
                    "cycle ({a}, {b}) pairs a letter with itself"
                )));
            }
            for letter in [a, b] {
                if letter == 0 || letter > n {
                    return Err(Error::InvalidInvolution(format!(
                        "letter {letter} is outside 1..={n}"
                    )));
                }
                if seen[letter] {
                    return Err(Error::InvalidInvolution(format!(
                        "letter {letter} appears in more than one cycle"
                    )));
                }
                seen[letter] = true;
            }
            canonical.push((a.min(b), a.max(b)));
        }
        canonical.sort_unstable();
        Ok(Involution {
            n,
            cycles: canonical,
        })
    }

    pub fn identity(n: usize) -> Self {
        Involution { n, cycles: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical cycle list, sorted by first entry, each with `i < j`.
    pub fn cycles(&self) -> &[(usize, usize)] {
        &self.cycles
    }

    /// Number of cycles; equals the rank of the representative matrix.
    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_identity(&self) -> bool {
        self.cycles.is_empty()
    }

    /// The partner of `letter` under the involution, if it is not fixed.
    pub fn partner(&self, letter: usize) -> Option<usize> {
        self.cycles.iter().find_map(|&(i, j)| {
            if i == letter {
                Some(j)
            } else if j == letter {
                Some(i)
            } else {
                None
            }
        })
    }

    /// True when `letter` occurs in some cycle.
    pub fn moves(&self, letter: usize) -> bool {
        self.partner(letter).is_some()
    }

    /// First entries `i_1 < i_2 < ..` of the canonical cycle list.
    pub fn first_entries(&self) -> Vec<usize> {
        self.cycles.iter().map(|&(i, _)| i).collect()
    }

    /// Second entries `j_1, j_2, ..` in canonical (first-entry) order.
    pub fn second_entries(&self) -> Vec<usize> {
        self.cycles.iter().map(|&(_, j)| j).collect()
    }

    /// The representative 0/1 matrix with ones exactly at the cycle
    /// positions.  It is strictly upper triangular and squares to zero.
    pub fn matrix(&self) -> NilpotentMatrix {
        let mut m = NilpotentMatrix::zero(self.n);
        for &(i, j) in &self.cycles {
            m.rows[i - 1][j - 1] = rat(1);
        }
        m
    }

    /// Window projection: keeps exactly the cycles contained in `[a, b]`,
    /// letters unchanged, ambient size unchanged.
    pub fn project(&self, a: usize, b: usize) -> Involution {
        let cycles = self
            .cycles
            .iter()
            .copied()
            .filter(|&(i, j)| a <= i && j <= b)
            .collect();
        Involution { n: self.n, cycles }
    }

    /// Removes the `s`-th cycle (1-based, canonical order).
    pub fn drop_cycle(&self, s: usize) -> Involution {
        assert!(
            s >= 1 && s <= self.cycles.len(),
            "cycle index {s} out of range 1..={}",
            self.cycles.len()
        );
        let mut cycles = self.cycles.clone();
        cycles.remove(s - 1);
        Involution { n: self.n, cycles }
    }

    /// Cycles whose removal is a cover in the closure order: `(i, j)` is
    /// droppable when no other cycle `(i', j')` has `i' < i` and `j' > j`.
    /// Equivalently, in first-entry order, those whose second entry exceeds
    /// all earlier second entries.
    pub fn droppable_cycles(&self) -> Vec<(usize, usize)> {
        self.droppable_cycle_indices()
            .into_iter()
            .map(|s| self.cycles[s - 1])
            .collect()
    }

    /// 1-based canonical indices of the droppable cycles.
    pub fn droppable_cycle_indices(&self) -> Vec<usize> {
        (1..=self.cycles.len())
            .filter(|&s| {
                let (i, j) = self.cycles[s - 1];
                !self
                    .cycles
                    .iter()
                    .any(|&(ip, jp)| ip < i && jp > j)
            })
            .collect()
    }

    /// The correction terms `r_2, .., r_k` of the orbit-dimension formula:
    /// `r_s` counts earlier cycles whose second entry is below `j_s`, plus all
    /// cycles whose second entry is below `i_s`.
    pub fn r_values(&self) -> Vec<usize> {
        let k = self.cycles.len();
        (2..=k)
            .map(|s| {
                let (i_s, j_s) = self.cycles[s - 1];
                let earlier_below = self.cycles[..s - 1]
                    .iter()
                    .filter(|&&(_, j_p)| j_p < j_s)
                    .count();
                let ends_below_start = self
                    .cycles
                    .iter()
                    .filter(|&&(_, j_p)| j_p < i_s)
                    .count();
                earlier_below + ends_below_start
            })
            .collect()
    }

    /// Dimension of the orbit through the representative matrix, by the
    /// closed formula `k n + sum_s (i_s - j_s) - sum_{s >= 2} r_s`.
    pub fn orbit_dimension(&self) -> usize {
        let k = self.cycles.len() as i64;
        let spread: i64 = self
            .cycles
            .iter()
            .map(|&(i, j)| i as i64 - j as i64)
            .sum();
        let correction: i64 = self.r_values().iter().map(|&r| r as i64).sum();
        let dim = k * self.n as i64 + spread - correction;
        debug_assert!(dim >= 0);
        dim as usize
    }

    /// Jordan type of the representative matrix as a column partition:
    /// `(n - k, k)` for `k` cycles, with the zero part suppressed.
    pub fn orbit_shape(&self) -> Vec<usize> {
        let k = self.cycles.len();
        if k == 0 {
            vec![self.n]
        } else {
            vec![self.n - k, k]
        }
    }

    /// All involutions of `{1, .., n}` in the deterministic canonical order
    /// (identity first, then lexicographic on cycle lists).
    pub fn enumerate(n: usize) -> Vec<Involution> {
        let mut out = Vec::new();
        let mut cycles = Vec::new();
        let letters: Vec<usize> = (1..=n).collect();
        enumerate_matchings(&letters, &mut cycles, &mut |cycles| {
            out.push(Involution {
                n,
                cycles: cycles.to_vec(),
            });
        });
        out.sort();
        out
    }

    /// Number of involutions of `{1, .., n}`, by the recurrence
    /// `a(n) = a(n-1) + (n-1) a(n-2)`.
    pub fn count(n: usize) -> u128 {
        let (mut prev, mut cur) = (1u128, 1u128);
        for m in 2..=n {
            let next = cur + (m as u128 - 1) * prev;
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// Enumerates partial matchings of `letters` (sorted ascending): the smallest
/// letter is either left fixed or paired with each larger letter in turn.
/// Cycle lists are produced with increasing first entries, so no re-sorting of
/// the cycles themselves is needed.
fn enumerate_matchings(
    letters: &[usize],
    cycles: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    match letters.split_first() {
        None => emit(cycles),
        Some((&first, rest)) => {
            enumerate_matchings(rest, cycles, emit);
            for (idx, &j) in rest.iter().enumerate() {
                let mut remaining = rest.to_vec();
                remaining.remove(idx);
                cycles.push((first, j));
                enumerate_matchings(&remaining, cycles, emit);
                cycles.pop();
            }
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "id");
        }
        for &(i, j) in &self.cycles {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

/// Parses the display form `"(1,7)(2,3)(4,6)"`; `"id"` and `"()"` denote
/// the identity.  The ambient size must be supplied separately.
pub fn parse_cycles(text: &str) -> Result<Vec<(usize, usize)>, Error> {
    let trimmed: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if trimmed.is_empty() || trimmed == "id" || trimmed == "()" {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = trimmed.as_str();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::parse(format!("expected '(' in cycle list at \"{rest}\"")))?;
        let (body, tail) = inner
            .split_once(')')
            .ok_or_else(|| Error::parse("unclosed '(' in cycle list"))?;
        let (a, b) = body
            .split_once(',')
            .ok_or_else(|| Error::parse(format!("cycle \"({body})\" needs two letters")))?;
        let a: usize = a
            .parse()
            .map_err(|_| Error::parse(format!("bad letter \"{a}\"")))?;
        let b: usize = b
            .parse()
            .map_err(|_| Error::parse(format!("bad letter \"{b}\"")))?;
        cycles.push((a, b));
        rest = tail;
    }
    Ok(cycles)
}

impl Involution {
    /// Parses either the display form (needs `n`) or the JSON object form
    /// `{"n": 8, "cycles": [[1,7],[2,3]]}` (carries its own `n`, which must
    /// agree with the argument when one is given).
    pub fn parse(text: &str, n: Option<usize>) -> Result<Involution, Error> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            let sigma: Involution = serde_json::from_str(trimmed)
                .map_err(|e| Error::parse(format!("bad involution JSON: {e}")))?;
            if let Some(n) = n {
                if n != sigma.n {
                    return Err(Error::SizeMismatch(format!(
                        "JSON says n = {}, argument says n = {n}",
                        sigma.n
                    )));
                }
            }
            Ok(sigma)
        } else {
            let n = n.ok_or_else(|| {
                Error::parse("cycle-list form needs the ambient size n".to_string())
            })?;
            Involution::new(n, parse_cycles(trimmed)?)
        }
    }
}

impl FromStr for Involution {
    type Err = Error;

    /// Parses only the JSON object form, which is self-contained.
    fn from_str(s: &str) -> Result<Self, Error> {
        Involution::parse(s, None)
    }
}

/// Strictly upper-triangular matrix with rational entries; the ambient space
/// the orbits live in.  Entry accessors are 1-based like everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentMatrix {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl NilpotentMatrix {
    pub fn zero(n: usize) -> Self {
        NilpotentMatrix {
            n,
            rows: vec![vec![Rational::zero(); n]; n],
        }
    }

    /// Validates strict upper-triangularity.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "expected a square {n} x {n} matrix"
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if j <= i && !v.is_zero() {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({}, {}) below or on the diagonal is nonzero",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(NilpotentMatrix { n, rows })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self, Error> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    /// Reinterprets a square rational matrix, rejecting it unless strictly
    /// upper triangular.
    pub fn from_rational(m: &RationalMatrix) -> Result<Self, Error> {
        Self::new(m.rows().to_vec())
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

    pub fn set_entry(&mut self, i: usize, j: usize, value: Rational) -> Result<(), Error> {
        if j <= i {
            return Err(Error::InvalidMatrix(format!(
                "entry ({i}, {j}) is not above the diagonal"
            )));
        }
        self.rows[i - 1][j - 1] = value;
        Ok(())
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.rows.clone()).expect("rows are square by construction")
    }

    /// Window projection `[a, b]`: entries outside the block are zeroed,
    /// ambient size kept.
    pub fn window(&self, a: usize, b: usize) -> NilpotentMatrix {
        NilpotentMatrix::from_rational(&self.to_rational().window(a, b))
            .expect("windowing preserves strict upper-triangularity")
    }

    pub fn is_square_zero(&self) -> bool {
        let m = self.to_rational();
        m.mul(&m).expect("same size").is_zero()
    }
}
