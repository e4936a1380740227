//! Determinantal generators of the ideals cutting out orbit closures.
//!
//! Work in the coordinate ring of strictly lower-triangular matrices, with
//! variable `x(i, j)` paired against entry `(j, i)` of an upper-triangular
//! point.  For a square-zero orbit labelled by an involution, the closure is
//! cut out by the quadratic generators of the square-zero locus together
//! with, per window `[i, j]`, the minors one larger than the window rank.
//! For a general nilpotent orbit with window Jordan types recorded in a
//! [`ShapeMatrix`], each window contributes minors of every power of the
//! generic matrix, with sizes read off the window partition.
//!
//! Both constructions support a `Pruned` mode that drops windows whose
//! conditions follow from a neighbor's: square-zero windows are skipped
//! unless the rank stalls
//! (`R(i,j) = R(i+1,j-1)`), and shape windows whose partition merely appends
//! a 1 to a predecessor window's partition are skipped entirely, while an
//! increment of part `l` emits only powers `>= l`.

use crate::involution::Involution;
use crate::poly::{determinant, SymPolynomial};
use crate::rank::{Partition, RankMatrix, ShapeMatrix};
use crate::rational::RationalMatrix;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Whether to emit every window/power or apply the reduction lemmas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pruning {
    Full,
    Pruned,
}

/// What a generator set was computed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorSource {
    Involution(Involution),
    Shape(ShapeMatrix),
}

/// A single minor generator with its provenance: the window it came from,
/// the power of the generic matrix it is a minor of, and the minor size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorGenerator {
    pub window: (usize, usize),
    pub power: usize,
    pub size: usize,
    pub poly: SymPolynomial,
}

/// A generating set: the quadratic square-zero part (empty for shape-derived
/// ideals, whose power conditions subsume it) and the windowed minors.
/// Minors are integer-normalized, deduplicated, and never repeat a quadratic
/// generator verbatim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub n: usize,
    pub source: GeneratorSource,
    pub pruning: Pruning,
    pub quadratic: Vec<SymPolynomial>,
    pub minors: Vec<MinorGenerator>,
}

impl GeneratorSet {
    pub fn all_generators(&self) -> impl Iterator<Item = &SymPolynomial> {
        self.quadratic
            .iter()
            .chain(self.minors.iter().map(|m| &m.poly))
    }

    pub fn len(&self) -> usize {
        self.quadratic.len() + self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// True when every generator evaluates to zero at the point.
    pub fn vanishes_at(&self, point: &RationalMatrix) -> bool {
        use num::Zero;
        self.all_generators()
            .all(|g| g.evaluate(point).is_zero())
    }
}

/// The square-zero quadratics: one generator per entry `(i, j)` with
/// `i - j >= 2` of the square of the generic strictly lower-triangular
/// matrix, `sum over j < k < i of x(i,k) * x(k,j)`.
pub fn i2_generators(n: usize) -> Vec<SymPolynomial> {
    let mut out = Vec::new();
    for i in 3..=n {
        for j in 1..=(i - 2) {
            let mut g = SymPolynomial::zero();
            for k in (j + 1)..i {
                g = &g + &(&SymPolynomial::var(i, k) * &SymPolynomial::var(k, j));
            }
            out.push(g);
        }
    }
    out
}

/// Powers of the generic strictly lower-triangular matrix, memoized.
struct GenericPowers {
    n: usize,
    cache: Vec<Vec<Vec<SymPolynomial>>>,
}

impl GenericPowers {
    fn new(n: usize) -> Self {
        let first: Vec<Vec<SymPolynomial>> = (1..=n)
            .map(|r| {
                (1..=n)
                    .map(|c| {
                        if r > c {
                            SymPolynomial::var(r, c)
                        } else {
                            SymPolynomial::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        GenericPowers {
            n,
            cache: vec![first],
        }
    }

    fn power(&mut self, p: usize) -> &Vec<Vec<SymPolynomial>> {
        assert!(p >= 1);
        while self.cache.len() < p {
            let last = self.cache.last().unwrap();
            let first = &self.cache[0];
            let next: Vec<Vec<SymPolynomial>> = (0..self.n)
                .map(|r| {
                    (0..self.n)
                        .map(|c| {
                            let mut entry = SymPolynomial::zero();
                            for k in 0..self.n {
                                if !last[r][k].is_zero() && !first[k][c].is_zero() {
                                    entry = &entry + &(&last[r][k] * &first[k][c]);
                                }
                            }
                            entry
                        })
                        .collect()
                })
                .collect();
            self.cache.push(next);
        }
        &self.cache[p - 1]
    }
}

fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > pool.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (idx, &first) in pool.iter().enumerate() {
        for mut rest in combinations(&pool[idx + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All nonzero minors of the given size of `matrix` restricted to rows and
/// columns `lo..=hi`, normalized, skipping anything already in `seen`.
fn emit_minors(
    matrix: &[Vec<SymPolynomial>],
    lo: usize,
    hi: usize,
    power: usize,
    size: usize,
    seen: &mut BTreeSet<String>,
    minors: &mut Vec<MinorGenerator>,
) {
    let pool: Vec<usize> = (lo..=hi).collect();
    for rows in combinations(&pool, size) {
        for cols in combinations(&pool, size) {
            let sub: Vec<Vec<SymPolynomial>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| matrix[r - 1][c - 1].clone()).collect())
                .collect();
            let det = determinant(&sub);
            if det.is_zero() {
                continue;
            }
            let det = det.normalized();
            if seen.insert(det.to_string()) {
                minors.push(MinorGenerator {
                    window: (lo, hi),
                    power,
                    size,
                    poly: det,
                });
            }
        }
    }
}

/// Generators of the closure ideal of the square-zero orbit labelled by
/// `sigma`: the quadratics plus, per selected window `[i, j]`, all minors of
/// size `R(i,j) + 1` of the windowed generic matrix.  `Pruned` keeps only
/// windows where the rank stalls against the inner window,
/// `R(i,j) = R(i+1,j-1)` (out-of-range entries read 0); the minors of the
/// remaining windows follow from these and the quadratics.
pub fn ideal_generators(sigma: &Involution, pruning: Pruning) -> GeneratorSet {
    let n = sigma.n();
    let r = RankMatrix::of_involution(sigma);
    let quadratic = i2_generators(n);
    let mut seen: BTreeSet<String> = quadratic.iter().map(|g| g.to_string()).collect();
    let mut minors = Vec::new();
    let mut powers = GenericPowers::new(n);
    for width in 2..=n {
        for i in 1..=(n - width + 1) {
            let j = i + width - 1;
            if pruning == Pruning::Pruned && r.entry(i, j) != r.entry(i + 1, j - 1) {
                continue;
            }
            let size = r.entry(i, j) as usize + 1;
            if size > width {
                continue;
            }
            emit_minors(powers.power(1), i, j, 1, size, &mut seen, &mut minors);
        }
    }
    GeneratorSet {
        n,
        source: GeneratorSource::Involution(sigma.clone()),
        pruning,
        quadratic,
        minors,
    }
}

/// If `new` is `old` with exactly one part incremented, or `old` with a part
/// 1 appended, returns the 1-based index of the changed part.
fn incremented_part(old: &[usize], new: &[usize]) -> Option<usize> {
    if new.len() == old.len() + 1 {
        if new[..old.len()] == *old && *new.last().unwrap() == 1 {
            return Some(new.len());
        }
        return None;
    }
    if new.len() != old.len() {
        return None;
    }
    let mut found = None;
    for t in 0..new.len() {
        if new[t] == old[t] + 1 {
            if found.is_some() {
                return None;
            }
            found = Some(t + 1);
        } else if new[t] != old[t] {
            return None;
        }
    }
    found
}

/// Generators of the closure ideal of a general nilpotent orbit from its
/// window Jordan types: window `[i, j]` with partition `lambda` contributes,
/// for each power `p`, the minors of size `1 + lambda_(p+1) + lambda_(p+2)
/// + ...` of the `p`-th power of the windowed generic matrix.
///
/// `Pruned` compares each window against its two one-step-smaller
/// predecessor windows: if either predecessor's partition plus an appended 1
/// equals this window's partition, the window is skipped outright; otherwise
/// the conditions for powers below the incremented part index are implied by
/// the predecessors and only higher powers are emitted.
pub fn shape_ideal_generators(shape: &ShapeMatrix, pruning: Pruning) -> GeneratorSet {
    let n = shape.n();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut minors = Vec::new();
    let mut powers = GenericPowers::new(n);
    for width in 2..=n {
        for i in 1..=(n - width + 1) {
            let j = i + width - 1;
            let lambda: Partition = shape.entry(i, j).to_vec();
            let mut min_power = 1;
            if pruning == Pruning::Pruned {
                let mut skip = false;
                for pred in [shape.entry(i, j - 1), shape.entry(i + 1, j)] {
                    if let Some(l) = incremented_part(pred, &lambda) {
                        if l == lambda.len() && lambda[l - 1] == 1 {
                            skip = true;
                            break;
                        }
                        min_power = min_power.max(l);
                    }
                }
                if skip {
                    continue;
                }
            }
            for p in min_power..=lambda.len() {
                let size = 1 + lambda[p..].iter().sum::<usize>();
                if size > width {
                    continue;
                }
                emit_minors(powers.power(p), i, j, p, size, &mut seen, &mut minors);
            }
        }
    }
    GeneratorSet {
        n,
        source: GeneratorSource::Shape(shape.clone()),
        pruning,
        quadratic: Vec::new(),
        minors,
    }
}
