//! Cover moves of the closure order and the Hasse diagram.
//!
//! The closure order on orbits is the entrywise order on rank matrices.  Its
//! covers come in five constructive families applied to the canonical cycle
//! list of the source involution:
//!
//! * `Drop` — remove a droppable cycle (rank decreases by one);
//! * `MoveUp` — move the start of a cycle up to the nearest free letter;
//! * `MoveRight` — move the end of a cycle right to the nearest free letter;
//! * `Cross` — replace two side-by-side cycles by the crossing pair over the
//!   same four letters;
//! * `Swap` — exchange the ends of a cycle and one nested directly under it.
//!
//! Each move decrements the rank matrix by exactly one on an explicit index
//! rectangle (two rectangles for `Cross`); the tests pin those deltas.  A
//! brute-force oracle recovers covers straight from the definition (maximal
//! elements strictly below) for cross-checking.

use crate::error::Error;
use crate::involution::Involution;
use crate::rank::{OrderRelation, RankMatrix};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Ceiling for operations that enumerate all involutions of `{1, .., n}`.
/// The default keeps enumerations below ten thousand elements; callers may
/// raise it deliberately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub max_n: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { max_n: 10 }
    }
}

impl Guard {
    pub fn new(max_n: usize) -> Self {
        Guard { max_n }
    }

    pub fn check(&self, operation: &'static str, n: usize) -> Result<(), Error> {
        if n > self.max_n {
            Err(Error::GuardExceeded {
                operation,
                requested: n,
                ceiling: self.max_n,
            })
        } else {
            Ok(())
        }
    }
}

/// Which family produced a cover, with its defining data: `s`, `r`, `t` are
/// 1-based cycle indices in the canonical order of the source; `m` is the
/// letter a cycle start or end moves to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CoverKind {
    Drop { s: usize },
    MoveUp { s: usize, m: usize },
    MoveRight { s: usize, m: usize },
    Cross { r: usize, s: usize },
    Swap { s: usize, t: usize },
}

impl CoverKind {
    /// Human-readable one-liner naming the family and its parameters.
    pub fn describe(&self) -> String {
        match self {
            CoverKind::Drop { s } => format!("drop cycle {s}"),
            CoverKind::MoveUp { s, m } => format!("move start of cycle {s} up to {m}"),
            CoverKind::MoveRight { s, m } => format!("move end of cycle {s} right to {m}"),
            CoverKind::Cross { r, s } => format!("cross cycles {r} and {s}"),
            CoverKind::Swap { s, t } => format!("swap cycles {s} and {t}"),
        }
    }
}

/// A single cover in the closure order, with provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverMove {
    pub kind: CoverKind,
    pub source: Involution,
    pub target: Involution,
}

fn replace_cycles(
    sigma: &Involution,
    remove: &[usize],
    insert: &[(usize, usize)],
) -> Involution {
    let mut cycles: Vec<(usize, usize)> = sigma
        .cycles()
        .iter()
        .enumerate()
        .filter(|(idx, _)| !remove.contains(&(idx + 1)))
        .map(|(_, &c)| c)
        .collect();
    cycles.extend_from_slice(insert);
    Involution::new(sigma.n(), cycles).expect("cover moves preserve the matching property")
}

/// Letters that occur in some cycle of `sigma`, as a lookup table.
fn occupied(sigma: &Involution) -> Vec<bool> {
    let mut occ = vec![false; sigma.n() + 1];
    for &(i, j) in sigma.cycles() {
        occ[i] = true;
        occ[j] = true;
    }
    occ
}

/// Moves the start of cycle `s` up: the nearest free letter `m < i_s`
/// qualifies if every letter strictly between `m` and `i_s` belongs to a
/// cycle contained in `[1, j_s]`.  At most one `m` can qualify.
pub fn cover_up(sigma: &Involution, s: usize) -> Option<CoverMove> {
    let (i_s, j_s) = cycle(sigma, s);
    let occ = occupied(sigma);
    let m = (1..i_s).rev().find(|&c| !occ[c])?;
    let window_occ = occupied(&sigma.project(1, j_s));
    if !((m + 1)..i_s).all(|t| window_occ[t]) {
        return None;
    }
    Some(CoverMove {
        kind: CoverKind::MoveUp { s, m },
        source: sigma.clone(),
        target: replace_cycles(sigma, &[s], &[(m, j_s)]),
    })
}

/// Moves the end of cycle `s` right: the nearest free letter `m > j_s`
/// qualifies if every letter strictly between `j_s` and `m` belongs to a
/// cycle contained in `[i_s, n]`.  At most one `m` can qualify.
pub fn cover_right(sigma: &Involution, s: usize) -> Option<CoverMove> {
    let (i_s, j_s) = cycle(sigma, s);
    let occ = occupied(sigma);
    let m = ((j_s + 1)..=sigma.n()).find(|&c| !occ[c])?;
    let window_occ = occupied(&sigma.project(i_s, sigma.n()));
    if !((j_s + 1)..m).all(|t| window_occ[t]) {
        return None;
    }
    Some(CoverMove {
        kind: CoverKind::MoveRight { s, m },
        source: sigma.clone(),
        target: replace_cycles(sigma, &[s], &[(i_s, m)]),
    })
}

/// Crossing covers for cycle `s`: for each earlier cycle `r` lying entirely
/// to the left (`j_r < i_s`) such that the letters strictly between `j_r` and
/// `i_s` all belong to cycles contained in `[i_r, j_s]`, the pair
/// `(i_r, j_r), (i_s, j_s)` is replaced by `(i_r, i_s), (j_r, j_s)`.
pub fn covers_cross(sigma: &Involution, s: usize) -> Vec<CoverMove> {
    let (i_s, j_s) = cycle(sigma, s);
    let mut out = Vec::new();
    for r in 1..s {
        let (i_r, j_r) = cycle(sigma, r);
        if j_r >= i_s {
            continue;
        }
        let window_occ = occupied(&sigma.project(i_r, j_s));
        if !((j_r + 1)..i_s).all(|t| window_occ[t]) {
            continue;
        }
        out.push(CoverMove {
            kind: CoverKind::Cross { r, s },
            source: sigma.clone(),
            target: replace_cycles(sigma, &[r, s], &[(i_r, i_s), (j_r, j_s)]),
        });
    }
    out
}

/// Swap covers for cycle `s`: for each droppable cycle `t` of the window
/// strictly inside `(i_s, j_s)`, the ends of `s` and `t` are exchanged,
/// turning the nested pair into a crossing one.
pub fn covers_swap(sigma: &Involution, s: usize) -> Vec<CoverMove> {
    let (i_s, j_s) = cycle(sigma, s);
    if j_s < i_s + 2 {
        return Vec::new();
    }
    let inner = sigma.project(i_s + 1, j_s - 1);
    let mut out = Vec::new();
    for (i_t, j_t) in inner.droppable_cycles() {
        let t = sigma
            .cycles()
            .iter()
            .position(|&c| c == (i_t, j_t))
            .expect("inner cycle comes from sigma")
            + 1;
        out.push(CoverMove {
            kind: CoverKind::Swap { s, t },
            source: sigma.clone(),
            target: replace_cycles(sigma, &[s, t], &[(i_s, j_t), (i_t, j_s)]),
        });
    }
    out
}

fn cycle(sigma: &Involution, s: usize) -> (usize, usize) {
    assert!(
        s >= 1 && s <= sigma.num_cycles(),
        "cycle index {s} out of range 1..={}",
        sigma.num_cycles()
    );
    sigma.cycles()[s - 1]
}

/// Every cover of `sigma` with provenance, in a fixed deterministic order:
/// drops of droppable cycles first, then the four same-rank families by
/// cycle index.
pub fn cover_moves(sigma: &Involution) -> Vec<CoverMove> {
    let mut moves = Vec::new();
    for s in sigma.droppable_cycle_indices() {
        moves.push(CoverMove {
            kind: CoverKind::Drop { s },
            source: sigma.clone(),
            target: sigma.drop_cycle(s),
        });
    }
    for s in 1..=sigma.num_cycles() {
        moves.extend(cover_up(sigma, s));
    }
    for s in 1..=sigma.num_cycles() {
        moves.extend(cover_right(sigma, s));
    }
    for s in 1..=sigma.num_cycles() {
        moves.extend(covers_cross(sigma, s));
    }
    for s in 1..=sigma.num_cycles() {
        moves.extend(covers_swap(sigma, s));
    }
    moves
}

/// Covers with the same number of cycles as the source (the four moving
/// families), deduplicated and sorted.
pub fn lower_covers_same_rank(sigma: &Involution) -> Vec<Involution> {
    let set: BTreeSet<Involution> = cover_moves(sigma)
        .into_iter()
        .filter(|mv| !matches!(mv.kind, CoverKind::Drop { .. }))
        .map(|mv| mv.target)
        .collect();
    set.into_iter().collect()
}

/// Covers with one cycle fewer (drops of droppable cycles), sorted.
pub fn lower_covers_lower_rank(sigma: &Involution) -> Vec<Involution> {
    let set: BTreeSet<Involution> = cover_moves(sigma)
        .into_iter()
        .filter(|mv| matches!(mv.kind, CoverKind::Drop { .. }))
        .map(|mv| mv.target)
        .collect();
    set.into_iter().collect()
}

/// All lower covers, sorted and deduplicated.
pub fn lower_covers(sigma: &Involution) -> Vec<Involution> {
    let set: BTreeSet<Involution> = cover_moves(sigma).into_iter().map(|mv| mv.target).collect();
    set.into_iter().collect()
}

/// Everything weakly below `sigma` in the closure order, by filtering the
/// full enumeration through the entrywise rank-matrix test.
pub fn closure(sigma: &Involution, guard: Guard) -> Result<Vec<Involution>, Error> {
    guard.check("closure", sigma.n())?;
    let r = RankMatrix::of_involution(sigma);
    Ok(Involution::enumerate(sigma.n())
        .into_iter()
        .filter(|other| {
            RankMatrix::of_involution(other)
                .leq(&r)
                .expect("same ambient size")
        })
        .collect())
}

/// Definition-level oracle for the two cover families combined: the maximal
/// elements among involutions strictly below `sigma` with the same number of
/// cycles, together with the maximal elements among those with fewer cycles.
/// Computed purely from rank-matrix comparison, independent of the
/// constructive moves.
///
/// The stratification matters: a rank-dropping target need not be maximal in
/// the unstratified strictly-below set.  For (1,2) in `S_3` the drop target
/// is the identity, which sits below the same-rank cover (1,3).
pub fn brute_force_lower_covers(
    sigma: &Involution,
    guard: Guard,
) -> Result<Vec<Involution>, Error> {
    guard.check("brute_force_lower_covers", sigma.n())?;
    let below: Vec<Involution> = closure(sigma, guard)?
        .into_iter()
        .filter(|other| other != sigma)
        .collect();
    let same_rank: Vec<Involution> = below
        .iter()
        .filter(|s| s.num_cycles() == sigma.num_cycles())
        .cloned()
        .collect();
    let lower_rank: Vec<Involution> = below
        .iter()
        .filter(|s| s.num_cycles() < sigma.num_cycles())
        .cloned()
        .collect();
    let mut out = maximal_elements(&same_rank);
    out.extend(maximal_elements(&lower_rank));
    out.sort();
    Ok(out)
}

/// The elements of `set` not strictly below any other element of `set`.
fn maximal_elements(set: &[Involution]) -> Vec<Involution> {
    let ranks: Vec<RankMatrix> = set.iter().map(RankMatrix::of_involution).collect();
    set.iter()
        .enumerate()
        .filter(|&(a, _)| {
            !ranks.iter().enumerate().any(|(b, rb)| {
                a != b
                    && matches!(
                        ranks[a].compare(rb).expect("same ambient size"),
                        OrderRelation::Less
                    )
            })
        })
        .map(|(_, s)| s.clone())
        .collect()
}

/// The full closure order on involutions of `{1, .., n}`: nodes in canonical
/// order, one directed edge per cover (source index, target index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    n: usize,
    nodes: Vec<Involution>,
    edges: Vec<(usize, usize)>,
}

pub fn hasse_diagram(n: usize, guard: Guard) -> Result<HasseDiagram, Error> {
    guard.check("hasse_diagram", n)?;
    let nodes = Involution::enumerate(n);
    let index: std::collections::BTreeMap<&Involution, usize> =
        nodes.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut edges = Vec::new();
    for (src, sigma) in nodes.iter().enumerate() {
        for target in lower_covers(sigma) {
            edges.push((src, index[&target]));
        }
    }
    Ok(HasseDiagram { n, nodes, edges })
}

impl HasseDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[Involution] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Indices of all nodes reachable from `start` along cover edges,
    /// including `start` itself.
    pub fn reachable_from(&self, start: usize) -> BTreeSet<usize> {
        let mut adjacency = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if seen.insert(v) {
                stack.extend(adjacency[v].iter().copied());
            }
        }
        seen
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "nodes": self
                .nodes
                .iter()
                .map(|sigma| {
                    serde_json::json!({
                        "label": sigma.to_string(),
                        "involution": sigma,
                        "num_cycles": sigma.num_cycles(),
                        "dim": sigma.orbit_dimension(),
                    })
                })
                .collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }

    /// Graphviz export: boxes labelled with the cycle list, cycle count and
    /// orbit dimension; nodes with the same cycle count share a rank layer.
    /// Output is byte-deterministic.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "digraph closure_order {{").unwrap();
        writeln!(out, "  rankdir=TB;").unwrap();
        writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
        let max_cycles = self.nodes.iter().map(Involution::num_cycles).max().unwrap_or(0);
        for level in (0..=max_cycles).rev() {
            let layer: Vec<&Involution> = self
                .nodes
                .iter()
                .filter(|s| s.num_cycles() == level)
                .collect();
            if layer.is_empty() {
                continue;
            }
            write!(out, "  {{ rank=same;").unwrap();
            for sigma in layer {
                write!(out, " \"{sigma}\";").unwrap();
            }
            writeln!(out, " }}").unwrap();
        }
        for sigma in &self.nodes {
            writeln!(
                out,
                "  \"{sigma}\" [label=\"{sigma}\\nl={} dim={}\"];",
                sigma.num_cycles(),
                sigma.orbit_dimension()
            )
            .unwrap();
        }
        for &(a, b) in &self.edges {
            writeln!(out, "  \"{}\" -> \"{}\";", self.nodes[a], self.nodes[b]).unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}
