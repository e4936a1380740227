//! Named verification suites with machine-readable reports.
//!
//! Each suite replays one of the crate's structural results against an
//! independent computation: enumeration counts against the recurrence and
//! hook lengths, the rank-matrix characterization against a raw grid sweep,
//! the closed dimension formula against exact centralizer codimension,
//! constructive covers against a brute-force order oracle, degeneration
//! limits against their cover targets, ideal vanishing against sampled
//! orbit points, and the tableau layer against the involution poset.
//! Reports serialize to JSON; the CLI `verify` subcommand is a thin shell
//! around [`run_suite`].

use crate::error::Error;
use crate::ideal::{ideal_generators, GeneratorSet, Pruning};
use crate::involution::Involution;
use crate::laurent::degeneration_limit;
use crate::oracle::{closure_membership, orbit_dimension_oracle, random_orbit_point};
use crate::poset::{brute_force_lower_covers, closure, cover_moves, lower_covers, Guard};
use crate::poset::lower_covers_lower_rank;
use crate::rank::RankMatrix;
use crate::tableau::{
    orbital_closure, orbital_variety_orbits, shape_count_by_ballot, shape_count_by_hooks,
    tableau_covers, TwoColumnTableau,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeSet;

pub const SUITE_NAMES: &[&str] = &[
    "counts",
    "bijection",
    "dimension",
    "covers",
    "degeneration",
    "ideals",
    "tableaux",
];

/// Outcome of one named check inside a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub params: Value,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

/// A full suite run; `passed` is the conjunction of all checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub max_n: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn check(name: impl Into<String>, params: Value, counterexample: Option<Value>) -> CheckResult {
    CheckResult {
        name: name.into(),
        params,
        passed: counterexample.is_none(),
        counterexample,
    }
}

/// Runs the named suite up to `max_n`.  `seed` only affects the sampling
/// suites; the rest are deterministic by construction.
pub fn run_suite(name: &str, max_n: usize, seed: u64, guard: Guard) -> Result<Report, Error> {
    guard.check("verify", max_n)?;
    let checks = match name {
        "counts" => counts_suite(max_n),
        "bijection" => bijection_suite(max_n),
        "dimension" => dimension_suite(max_n),
        "covers" => covers_suite(max_n, guard),
        "degeneration" => degeneration_suite(max_n),
        "ideals" => ideals_suite(max_n, seed),
        "tableaux" => tableaux_suite(max_n, guard),
        _ => {
            return Err(Error::parse(format!(
                "unknown suite '{name}' (available: {})",
                SUITE_NAMES.join(", ")
            )))
        }
    };
    Ok(Report {
        suite: name.to_string(),
        max_n,
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Enumeration sizes against the recurrence `a(n) = a(n-1) + (n-1)·a(n-2)`
/// and tableau shape counts against ballot numbers and hook lengths.
fn counts_suite(max_n: usize) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    for n in 0..=max_n {
        let all = Involution::enumerate(n);
        let distinct: BTreeSet<&Involution> = all.iter().collect();
        let expected = Involution::count(n);
        let failure = if all.len() as u128 != expected {
            Some(json!({"enumerated": all.len(), "recurrence": expected.to_string()}))
        } else if distinct.len() != all.len() {
            Some(json!({"duplicates": all.len() - distinct.len()}))
        } else {
            None
        };
        checks.push(check(format!("involutions/n={n}"), json!({"n": n}), failure));
    }
    for n in 0..=max_n {
        let all = TwoColumnTableau::enumerate(n);
        let mut by_second_column = vec![0u128; n / 2 + 1];
        for t in &all {
            by_second_column[t.col2().len()] += 1;
        }
        let mut failure = None;
        for (k, &count) in by_second_column.iter().enumerate() {
            let ballot = shape_count_by_ballot(n - k, k);
            let hooks = shape_count_by_hooks(n - k, k);
            if count != ballot || count != hooks {
                failure = Some(json!({
                    "shape": [n - k, k],
                    "enumerated": count.to_string(),
                    "ballot": ballot.to_string(),
                    "hooks": hooks.to_string(),
                }));
                break;
            }
        }
        checks.push(check(
            format!("tableaux/n={n}"),
            json!({"n": n, "total": all.len()}),
            failure,
        ));
    }
    checks
}

/// Rank matrices and involutions are mutually inverse, and the validity
/// test accepts exactly the image.  The raw grid sweep is capped at n = 5,
/// where the candidate space is still small.
fn bijection_suite(max_n: usize) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    for n in 0..=max_n {
        let mut failure = None;
        for sigma in Involution::enumerate(n) {
            let r = RankMatrix::of_involution(&sigma);
            if !r.is_valid() {
                failure = Some(json!({"sigma": sigma.to_string(), "problem": "image rejected"}));
                break;
            }
            match r.to_involution() {
                Ok(back) if back == sigma => {}
                Ok(back) => {
                    failure = Some(json!({
                        "sigma": sigma.to_string(),
                        "round_trip": back.to_string(),
                    }));
                    break;
                }
                Err(e) => {
                    failure =
                        Some(json!({"sigma": sigma.to_string(), "problem": e.to_string()}));
                    break;
                }
            }
        }
        checks.push(check(format!("roundtrip/n={n}"), json!({"n": n}), failure));
    }
    for n in 0..=max_n.min(5) {
        let positions: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
            .collect();
        let bounds: Vec<u32> = positions
            .iter()
            .map(|&(i, j)| ((j - i + 1) / 2) as u32)
            .collect();
        let images: BTreeSet<Vec<Vec<u32>>> = Involution::enumerate(n)
            .iter()
            .map(|s| RankMatrix::of_involution(s).rows().to_vec())
            .collect();

        let mut accepted: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
        let mut candidates: u64 = 0;
        let mut values = vec![0u32; positions.len()];
        loop {
            candidates += 1;
            let mut rows = vec![vec![0u32; n]; n];
            for (idx, &(i, j)) in positions.iter().enumerate() {
                rows[i - 1][j - 1] = values[idx];
            }
            let grid = RankMatrix::from_rows(rows.clone()).expect("square grid");
            if grid.is_valid() {
                accepted.insert(rows);
            }
            // Odometer over the candidate grids.
            let mut idx = 0;
            loop {
                if idx == values.len() {
                    break;
                }
                if values[idx] < bounds[idx] {
                    values[idx] += 1;
                    break;
                }
                values[idx] = 0;
                idx += 1;
            }
            if idx == values.len() {
                break;
            }
        }

        let failure = if accepted != images {
            Some(json!({
                "accepted": accepted.len(),
                "images": images.len(),
            }))
        } else {
            None
        };
        checks.push(check(
            format!("grid/n={n}"),
            json!({"n": n, "candidates": candidates}),
            failure,
        ));
    }
    checks
}

/// The closed orbit-dimension formula against the centralizer codimension,
/// plus the three-cycle worked example with its correction terms.
fn dimension_suite(max_n: usize) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    for n in 0..=max_n {
        let mut failure = None;
        let mut count = 0usize;
        for sigma in Involution::enumerate(n) {
            count += 1;
            let formula = sigma.orbit_dimension();
            let oracle = orbit_dimension_oracle(&sigma);
            if formula != oracle {
                failure = Some(json!({
                    "sigma": sigma.to_string(),
                    "formula": formula,
                    "centralizer_oracle": oracle,
                }));
                break;
            }
        }
        checks.push(check(
            format!("formula-vs-centralizer/n={n}"),
            json!({"n": n, "involutions": count}),
            failure,
        ));
    }

    let sigma = Involution::new(7, vec![(1, 6), (3, 4), (5, 7)]).expect("valid cycles");
    let r = sigma.r_values();
    let failure = if r != vec![0, 3] || sigma.orbit_dimension() != 10
        || orbit_dimension_oracle(&sigma) != 10
    {
        Some(json!({
            "r_values": r,
            "formula": sigma.orbit_dimension(),
            "centralizer_oracle": orbit_dimension_oracle(&sigma),
        }))
    } else {
        None
    };
    checks.push(check(
        "worked-example/(1,6)(3,4)(5,7)",
        json!({"n": 7, "expected_dimension": 10}),
        failure,
    ));
    checks
}

/// Constructive cover moves against the brute-force cover oracle.
fn covers_suite(max_n: usize, guard: Guard) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    for n in 0..=max_n {
        let mut failure = None;
        for sigma in Involution::enumerate(n) {
            let constructed = lower_covers(&sigma);
            let brute =
                brute_force_lower_covers(&sigma, guard).expect("max_n checked against guard");
            if constructed != brute {
                failure = Some(json!({
                    "sigma": sigma.to_string(),
                    "constructed": constructed.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "brute_force": brute.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                }));
                break;
            }
        }
        checks.push(check(
            format!("constructive-vs-brute/n={n}"),
            json!({"n": n}),
            failure,
        ));
    }
    checks
}

/// Every cover move's one-parameter conjugation family degenerates the
/// source representative exactly to the target representative.
fn degeneration_suite(max_n: usize) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    for n in 0..=max_n {
        let mut failure = None;
        let mut moves = 0usize;
        'outer: for sigma in Involution::enumerate(n) {
            for mv in cover_moves(&sigma) {
                moves += 1;
                match degeneration_limit(&mv) {
                    Ok(limit) if limit == mv.target.matrix() => {}
                    Ok(limit) => {
                        failure = Some(json!({
                            "source": mv.source.to_string(),
                            "target": mv.target.to_string(),
                            "kind": serde_json::to_value(&mv.kind).expect("serializable"),
                            "limit": format!("{limit:?}"),
                        }));
                        break 'outer;
                    }
                    Err(e) => {
                        failure = Some(json!({
                            "source": mv.source.to_string(),
                            "target": mv.target.to_string(),
                            "kind": serde_json::to_value(&mv.kind).expect("serializable"),
                            "error": e.to_string(),
                        }));
                        break 'outer;
                    }
                }
            }
        }
        checks.push(check(
            format!("limits/n={n}"),
            json!({"n": n, "moves": moves}),
            failure,
        ));
    }
    checks
}

const IDEAL_SEEDS_PER_PAIR: u64 = 20;

/// Ideal generators vanish at sampled points of an orbit exactly when that
/// orbit lies below the ideal's involution, in both full and pruned modes,
/// and the rank-based membership test agrees throughout.
fn ideals_suite(max_n: usize, seed: u64) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    for n in 0..=max_n {
        let all = Involution::enumerate(n);
        let generators: Vec<(GeneratorSet, GeneratorSet)> = all
            .iter()
            .map(|s| {
                (
                    ideal_generators(s, Pruning::Full),
                    ideal_generators(s, Pruning::Pruned),
                )
            })
            .collect();
        let ranks: Vec<RankMatrix> = all.iter().map(RankMatrix::of_involution).collect();

        let mut failure = None;
        let mut pairs = 0usize;
        'outer: for (si, sigma) in all.iter().enumerate() {
            for (oi, other) in all.iter().enumerate() {
                pairs += 1;
                let expected = ranks[oi].leq(&ranks[si]).expect("same n");
                for s in 0..IDEAL_SEEDS_PER_PAIR {
                    let sample = random_orbit_point(other, seed + s);
                    let membership = closure_membership(&sample, sigma).expect("same n");
                    let point = sample.to_rational();
                    let full = generators[si].0.vanishes_at(&point);
                    let pruned = generators[si].1.vanishes_at(&point);
                    if full != expected || pruned != expected || membership != expected {
                        failure = Some(json!({
                            "ideal_of": sigma.to_string(),
                            "sampled_from": other.to_string(),
                            "seed": seed + s,
                            "expected_below": expected,
                            "full_vanishes": full,
                            "pruned_vanishes": pruned,
                            "membership": membership,
                        }));
                        break 'outer;
                    }
                }
            }
        }
        checks.push(check(
            format!("vanishing-iff-below/n={n}"),
            json!({"n": n, "pairs": pairs, "seeds_per_pair": IDEAL_SEEDS_PER_PAIR}),
            failure,
        ));
    }
    checks
}

/// The tableau layer against the involution poset: letter-condition covers
/// against brute-force covers, dropped cycles against the rank-dropping
/// cover sets, and the variety-closure union against orbit closures.
fn tableaux_suite(max_n: usize, guard: Guard) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    for n in 0..=max_n {
        let all = TwoColumnTableau::enumerate(n);
        let ranks: Vec<RankMatrix> = all
            .iter()
            .map(|t| RankMatrix::of_involution(&t.involution()))
            .collect();
        let leq = |a: usize, b: usize| ranks[a].leq(&ranks[b]).expect("same n");
        let index_of = |t: &TwoColumnTableau| all.iter().position(|u| u == t).expect("enumerated");

        let mut cover_failure = None;
        let mut drop_failure = None;
        for (ti, t) in all.iter().enumerate() {
            let below: Vec<usize> = (0..all.len()).filter(|&s| s != ti && leq(s, ti)).collect();
            let brute: BTreeSet<usize> = below
                .iter()
                .copied()
                .filter(|&s| !below.iter().any(|&r| r != s && leq(s, r)))
                .collect();
            let constructed: BTreeSet<usize> =
                tableau_covers(t).iter().map(&index_of).collect();
            if constructed != brute && cover_failure.is_none() {
                cover_failure = Some(json!({
                    "tableau": t.to_string(),
                    "letter_condition": constructed
                        .iter()
                        .map(|&s| all[s].to_string())
                        .collect::<Vec<_>>(),
                    "brute_force": brute.iter().map(|&s| all[s].to_string()).collect::<Vec<_>>(),
                }));
            }

            let dropped: BTreeSet<Involution> =
                tableau_covers(t).iter().map(|s| s.involution()).collect();
            let rank_dropping: BTreeSet<Involution> =
                lower_covers_lower_rank(&t.involution()).into_iter().collect();
            if dropped != rank_dropping && drop_failure.is_none() {
                drop_failure = Some(json!({
                    "tableau": t.to_string(),
                    "dropped": dropped.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "rank_dropping_covers": rank_dropping
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>(),
                }));
            }
        }
        checks.push(check(
            format!("covers-vs-brute/n={n}"),
            json!({"n": n, "tableaux": all.len()}),
            cover_failure,
        ));
        checks.push(check(
            format!("drops-vs-rank-covers/n={n}"),
            json!({"n": n}),
            drop_failure,
        ));

        // The union of variety strata over the tableau closure set equals
        // the orbit closure; splitting off the top stratum, the rest is the
        // union of the cover tableaux's full orbit closures, disjointly.
        let mut union_failure = None;
        for t in &all {
            let expected: BTreeSet<Involution> = closure(&t.involution(), guard)
                .expect("max_n checked against guard")
                .into_iter()
                .collect();
            let mut union: BTreeSet<Involution> = BTreeSet::new();
            for s in orbital_closure(t, guard).expect("max_n checked against guard") {
                union.extend(orbital_variety_orbits(&s, guard).expect("guarded"));
            }
            let own: BTreeSet<Involution> = orbital_variety_orbits(t, guard)
                .expect("guarded")
                .into_iter()
                .collect();
            let mut rest: BTreeSet<Involution> = BTreeSet::new();
            for s in tableau_covers(t) {
                rest.extend(closure(&s.involution(), guard).expect("guarded"));
            }
            let split_ok = own.is_disjoint(&rest)
                && own.union(&rest).cloned().collect::<BTreeSet<_>>() == expected;
            if union != expected || !split_ok {
                union_failure = Some(json!({
                    "tableau": t.to_string(),
                    "union_matches": union == expected,
                    "split_disjoint_and_complete": split_ok,
                }));
                break;
            }
        }
        checks.push(check(
            format!("closure-union/n={n}"),
            json!({"n": n}),
            union_failure,
        ));
    }

    // Fixed worked example: the eight-letter tableau has exactly one cover,
    // obtained by moving the entry 8.
    let t = TwoColumnTableau::new(vec![1, 2, 3, 6], vec![4, 5, 7, 8]).expect("valid");
    let covers = tableau_covers(&t);
    let expected = t.move_entry(8).expect("8 sits in the second column");
    let failure = if t.involution().to_string() != "(1,8)(2,5)(3,4)(6,7)"
        || covers != vec![expected]
    {
        Some(json!({
            "sigma": t.involution().to_string(),
            "covers": covers.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        }))
    } else {
        None
    };
    checks.push(check(
        "worked-example/1,2,3,6/4,5,7,8",
        json!({"n": 8}),
        failure,
    ));
    checks
}
