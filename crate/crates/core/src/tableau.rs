//! Two-column standard Young tableaux as orbital-variety labels.
//!
//! A standard tableau `T` with columns `col1`, `col2` determines an
//! involution: pair each second-column entry `j`, in increasing order, with
//! the largest not-yet-used first-column entry below it.  The induced order
//! on tableaux is the closure order of the associated involutions, read so
//! that *larger* tableaux label *smaller* orbits: `S >= T`
//! exactly when the rank matrix of `sigma_S` is entrywise at most that of
//! `sigma_T`, and the closure of the orbital variety of `T` is the union of
//! the varieties of all such `S`.  [`tableau_leq`] follows that convention.
//!
//! Moving a second-column entry into the first column produces a tableau one
//! step deeper ([`TwoColumnTableau::move_row`]); the moves that drop exactly
//! one cycle of the involution are the covers of `T` ([`tableau_covers`]).

use crate::error::Error;
use crate::involution::Involution;
use crate::poset::{closure, Guard};
use crate::rank::RankMatrix;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct TwoColumnTableau {
    col1: Vec<usize>,
    col2: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    col1: Vec<usize>,
    col2: Vec<usize>,
}

impl TryFrom<RawTableau> for TwoColumnTableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self, Error> {
        TwoColumnTableau::new(raw.col1, raw.col2)
    }
}

impl From<TwoColumnTableau> for RawTableau {
    fn from(t: TwoColumnTableau) -> RawTableau {
        RawTableau {
            col1: t.col1,
            col2: t.col2,
        }
    }
}

impl TwoColumnTableau {
    pub fn new(col1: Vec<usize>, col2: Vec<usize>) -> Result<Self, Error> {
        let n = col1.len() + col2.len();
        for col in [&col1, &col2] {
            if !col.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidTableau(
                    "columns must be strictly increasing".into(),
                ));
            }
        }
        let mut seen = vec![false; n + 1];
        for &v in col1.iter().chain(col2.iter()) {
            if v < 1 || v > n {
                return Err(Error::InvalidTableau(format!(
                    "entry {v} outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidTableau(format!("entry {v} repeated")));
            }
            seen[v] = true;
        }
        if col2.len() > col1.len() {
            return Err(Error::InvalidTableau(format!(
                "second column longer than first ({} > {})",
                col2.len(),
                col1.len()
            )));
        }
        for (s, &j) in col2.iter().enumerate() {
            if col1[s] >= j {
                return Err(Error::InvalidTableau(format!(
                    "row {} does not increase: {} >= {j}",
                    s + 1,
                    col1[s]
                )));
            }
        }
        Ok(TwoColumnTableau { col1, col2 })
    }

    pub fn single_column(n: usize) -> Self {
        TwoColumnTableau {
            col1: (1..=n).collect(),
            col2: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.col1.len() + self.col2.len()
    }

    pub fn col1(&self) -> &[usize] {
        &self.col1
    }

    pub fn col2(&self) -> &[usize] {
        &self.col2
    }

    /// Column lengths as a partition: `[|col1|, |col2|]`, or `[|col1|]` when
    /// the second column is empty.
    pub fn shape(&self) -> Vec<usize> {
        if self.col2.is_empty() {
            vec![self.col1.len()]
        } else {
            vec![self.col1.len(), self.col2.len()]
        }
    }

    /// The greedy pairing in second-column order: row `s` pairs `col2[s]`
    /// with the largest unused first-column entry below it.  The
    /// row-increase invariant guarantees a partner exists.
    pub fn greedy_pairs(&self) -> Vec<(usize, usize)> {
        let mut used = vec![false; self.col1.len()];
        let mut pairs = Vec::with_capacity(self.col2.len());
        for &j in &self.col2 {
            let pos = self
                .col1
                .iter()
                .enumerate()
                .filter(|&(idx, &d)| !used[idx] && d < j)
                .map(|(idx, _)| idx)
                .last()
                .expect("row-increase guarantees an unused smaller entry");
            used[pos] = true;
            pairs.push((self.col1[pos], j));
        }
        pairs
    }

    /// The involution `sigma_T`, re-canonicalized to first-entry order.
    pub fn involution(&self) -> Involution {
        Involution::new(self.n(), self.greedy_pairs())
            .expect("greedy pairs are disjoint by construction")
    }

    /// Moves the entry in row `s` (1-based) of the second column to its
    /// sorted place in the first column.  The result is always a valid
    /// tableau, one step deeper in the order.
    pub fn move_row(&self, s: usize) -> Result<TwoColumnTableau, Error> {
        if s < 1 || s > self.col2.len() {
            return Err(Error::InvalidTableau(format!(
                "no row {s} in the second column (length {})",
                self.col2.len()
            )));
        }
        let e = self.col2[s - 1];
        let mut col1 = self.col1.clone();
        let mut col2 = self.col2.clone();
        col2.remove(s - 1);
        let pos = col1.partition_point(|&d| d < e);
        col1.insert(pos, e);
        TwoColumnTableau::new(col1, col2)
    }

    /// Moves a second-column entry given by value rather than row.
    pub fn move_entry(&self, e: usize) -> Result<TwoColumnTableau, Error> {
        match self.col2.iter().position(|&v| v == e) {
            Some(idx) => self.move_row(idx + 1),
            None => Err(Error::InvalidTableau(format!(
                "{e} is not in the second column"
            ))),
        }
    }

    /// Every two-column standard tableau on `{1, .., n}`, ordered by the
    /// subset of letters placed in the second column (as an ascending
    /// bitmask).
    pub fn enumerate(n: usize) -> Vec<TwoColumnTableau> {
        assert!(n <= 25, "tableau enumeration is exponential in n");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let mut col1 = Vec::new();
            let mut col2 = Vec::new();
            let mut balanced = true;
            for v in 1..=n {
                if mask & (1 << (v - 1)) != 0 {
                    col2.push(v);
                } else {
                    col1.push(v);
                }
                if col2.len() > col1.len() {
                    balanced = false;
                    break;
                }
            }
            if !balanced {
                continue;
            }
            if let Ok(t) = TwoColumnTableau::new(col1, col2) {
                out.push(t);
            }
        }
        out
    }

    /// Aligned two-column rendering, one row per line.
    pub fn render_columns(&self) -> String {
        let width = self.n().to_string().len();
        let mut lines = Vec::new();
        for (idx, &d) in self.col1.iter().enumerate() {
            match self.col2.get(idx) {
                Some(&j) => lines.push(format!("{d:>width$} {j:>width$}")),
                None => lines.push(format!("{d:>width$}")),
            }
        }
        lines.join("\n")
    }

    /// Parses either the JSON form or the compact `"1,2,3,6/4,5,7,8"` form
    /// (single-column tableaux may omit the slash).
    pub fn parse(text: &str) -> Result<TwoColumnTableau, Error> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            return serde_json::from_str(trimmed)
                .map_err(|e| Error::parse(format!("bad tableau JSON: {e}")));
        }
        let (first, second) = match trimmed.split_once('/') {
            Some((a, b)) => (a, b),
            None => (trimmed, ""),
        };
        let parse_col = |part: &str| -> Result<Vec<usize>, Error> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|piece| {
                    piece
                        .trim()
                        .parse::<usize>()
                        .map_err(|e| Error::parse(format!("bad tableau entry '{piece}': {e}")))
                })
                .collect()
        };
        TwoColumnTableau::new(parse_col(first)?, parse_col(second)?)
    }
}

impl fmt::Display for TwoColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |col: &[usize]| {
            col.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.col2.is_empty() {
            write!(f, "{}", join(&self.col1))
        } else {
            write!(f, "{}/{}", join(&self.col1), join(&self.col2))
        }
    }
}

fn binomial(n: usize, k: isize) -> u128 {
    if k < 0 || k as usize > n {
        return 0;
    }
    let k = k as usize;
    let mut acc: u128 = 1;
    for idx in 0..k {
        acc = acc * (n - idx) as u128 / (idx + 1) as u128;
    }
    acc
}

/// Number of two-column standard tableaux with column lengths `(a, b)` by
/// the ballot count `C(a+b, b) - C(a+b, b-1)`.
pub fn shape_count_by_ballot(a: usize, b: usize) -> u128 {
    let n = a + b;
    binomial(n, b as isize) - binomial(n, b as isize - 1)
}

/// The same count by the hook length formula on the two-column diagram.
pub fn shape_count_by_hooks(a: usize, b: usize) -> u128 {
    assert!(a >= b, "first column cannot be shorter");
    let n = a + b;
    let mut count: u128 = (1..=n as u128).product();
    for r in 1..=a {
        let arm = usize::from(r <= b);
        count /= (1 + arm + (a - r)) as u128;
    }
    for r in 1..=b {
        count /= (1 + (b - r)) as u128;
    }
    count
}

/// True when `s` lies in the orbital closure of `t`: the rank matrix of
/// `sigma_S` is entrywise at most that of `sigma_T`.  In the usual
/// convention this is written `S >= T` — larger tableaux, smaller orbits.
pub fn tableau_leq(s: &TwoColumnTableau, t: &TwoColumnTableau) -> Result<bool, Error> {
    if s.n() != t.n() {
        return Err(Error::SizeMismatch(format!(
            "tableaux on {} and {} letters",
            s.n(),
            t.n()
        )));
    }
    RankMatrix::of_involution(&s.involution()).leq(&RankMatrix::of_involution(&t.involution()))
}

/// The covers of `t`: moved tableaux `T<e>` whose involution drops exactly
/// one cycle of `sigma_T`.  Membership is decided by the letter condition —
/// with cycles in second-column order, row `s` qualifies when every later
/// row's partner exceeds `col2[s]` — and each emitted move is checked
/// against the dropped-cycle involution directly.
pub fn tableau_covers(t: &TwoColumnTableau) -> Vec<TwoColumnTableau> {
    let pairs = t.greedy_pairs();
    let mut out = Vec::new();
    for s in 0..pairs.len() {
        let e = pairs[s].1;
        if pairs[s + 1..].iter().all(|&(i, _)| i > e) {
            let moved = t.move_row(s + 1).expect("row index in range");
            let mut cycles = pairs.clone();
            cycles.remove(s);
            let dropped = Involution::new(t.n(), cycles).expect("still a matching");
            debug_assert_eq!(moved.involution(), dropped);
            out.push(moved);
        }
    }
    out
}

/// The orbits whose union is the orbital variety of `t`: involutions weakly
/// below `sigma_T` with the same number of cycles.
pub fn orbital_variety_orbits(
    t: &TwoColumnTableau,
    guard: Guard,
) -> Result<Vec<Involution>, Error> {
    let sigma = t.involution();
    Ok(closure(&sigma, guard)?
        .into_iter()
        .filter(|other| other.num_cycles() == sigma.num_cycles())
        .collect())
}

/// All tableaux whose orbital varieties appear in the closure of the
/// orbital variety of `t`: every `S` with `tableau_leq(S, t)`.
pub fn orbital_closure(
    t: &TwoColumnTableau,
    guard: Guard,
) -> Result<Vec<TwoColumnTableau>, Error> {
    guard.check("orbital_closure", t.n())?;
    Ok(TwoColumnTableau::enumerate(t.n())
        .into_iter()
        .filter(|s| tableau_leq(s, t).expect("same n"))
        .collect())
}
