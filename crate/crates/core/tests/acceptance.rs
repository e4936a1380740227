//! End-to-end acceptance gate: one test per published claim the library is
//! built around, each printing a single `criterion NN (...): PASS` line
//! (visible under `cargo test --test acceptance -- --nocapture`).  The
//! worked examples are restated here verbatim rather than shared with the
//! unit tests, so a regression in either copy trips the gate.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};

use borbits::ideal::{ideal_generators, shape_ideal_generators, Pruning};
use borbits::involution::{Involution, NilpotentMatrix};
use borbits::oracle::{centralizer_dimension, orbit_dimension_oracle};
use borbits::poly::SymPolynomial;
use borbits::poset::{
    brute_force_lower_covers, cover_right, cover_up, covers_cross, covers_swap, lower_covers,
    lower_covers_lower_rank, CoverMove, Guard,
};
use borbits::rank::{shape_dominance_leq, shape_order_gap_example, RankMatrix, ShapeMatrix};
use borbits::tableau::{tableau_covers, TwoColumnTableau};
use borbits::verify::{run_suite, Report};

fn criterion<F: FnOnce() + UnwindSafe>(number: u32, name: &str, body: F) {
    match catch_unwind(body) {
        Ok(()) => println!("criterion {number:02} ({name}): PASS"),
        Err(payload) => {
            println!("criterion {number:02} ({name}): FAIL");
            resume_unwind(payload);
        }
    }
}

fn inv(n: usize, cycles: &[(usize, usize)]) -> Involution {
    Involution::new(n, cycles.to_vec()).unwrap()
}

fn failing_checks(report: &Report) -> String {
    report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.clone())
        .collect::<Vec<_>>()
        .join(", ")
}

fn sorted_targets(moves: &[CoverMove]) -> Vec<String> {
    let mut out: Vec<String> = moves.iter().map(|m| m.target.to_string()).collect();
    out.sort();
    out
}

/// Reduction modulo an ideal generated by single variables: every monomial
/// containing one of them is discarded.
fn kill_vars(p: &SymPolynomial, dead: &[(usize, usize)]) -> SymPolynomial {
    let mut out = SymPolynomial::zero();
    for (mono, coeff) in p.terms() {
        let uses_dead = mono
            .powers()
            .iter()
            .any(|(v, _)| dead.contains(&(v.row, v.col)));
        if !uses_dead {
            out.add_term(mono.clone(), coeff.clone());
        }
    }
    out
}

#[test]
fn criterion_01_rank_matrix_fidelity() {
    criterion(1, "rank-matrix fidelity", || {
        // The displayed window-rank matrix of (1,7)(2,3)(4,6) in S_8.
        let sigma = inv(8, &[(1, 7), (2, 3), (4, 6)]);
        let expected = RankMatrix::from_rows(vec![
            vec![0, 0, 1, 1, 1, 2, 3, 3],
            vec![0, 0, 1, 1, 1, 2, 2, 2],
            vec![0, 0, 0, 0, 0, 1, 1, 1],
            vec![0, 0, 0, 0, 0, 1, 1, 1],
            vec![0; 8],
            vec![0; 8],
            vec![0; 8],
            vec![0; 8],
        ])
        .unwrap();
        assert_eq!(RankMatrix::of_involution(&sigma), expected);

        // The ten displayed rank matrices for n = 4, one per involution.
        let displays: [(&str, [[u32; 4]; 4]); 10] = [
            (
                "(1,2)(3,4)",
                [[0, 1, 1, 2], [0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0]],
            ),
            (
                "(1,4)(2,3)",
                [[0, 0, 1, 2], [0, 0, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0]],
            ),
            (
                "(1,3)(2,4)",
                [[0, 0, 1, 2], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]],
            ),
            (
                "(1,2)",
                [[0, 1, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
            ),
            (
                "(1,3)",
                [[0, 0, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
            ),
            (
                "(1,4)",
                [[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
            ),
            (
                "(2,3)",
                [[0, 0, 1, 1], [0, 0, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0]],
            ),
            (
                "(2,4)",
                [[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]],
            ),
            (
                "(3,4)",
                [[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0]],
            ),
            (
                "id",
                [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
            ),
        ];
        let mut seen = BTreeSet::new();
        for (text, rows) in displays {
            let sigma = Involution::parse(text, Some(4)).unwrap();
            let expected =
                RankMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
            assert_eq!(RankMatrix::of_involution(&sigma), expected, "sigma = {sigma}");
            seen.insert(sigma);
        }
        assert_eq!(seen.len(), 10);
        assert_eq!(Involution::enumerate(4).len(), 10);
    });
}

#[test]
fn criterion_02_characterization_bijection() {
    criterion(2, "rank-matrix characterization bijection", || {
        let report = run_suite("bijection", 7, 0, Guard::default()).unwrap();
        assert!(report.passed, "failing checks: {}", failing_checks(&report));
    });
}

#[test]
fn criterion_03_dimension_formula() {
    criterion(3, "dimension formula vs centralizer oracle", || {
        let mut seen = 0usize;
        for n in 1..=7 {
            for sigma in Involution::enumerate(n) {
                assert_eq!(
                    sigma.orbit_dimension(),
                    orbit_dimension_oracle(&sigma),
                    "sigma = {sigma}"
                );
                seen += 1;
            }
        }
        assert_eq!(seen, 351);

        let example = inv(7, &[(1, 6), (3, 4), (5, 7)]);
        assert_eq!(example.r_values(), vec![0, 3]);
        assert_eq!(example.orbit_dimension(), 10);
        assert_eq!(orbit_dimension_oracle(&example), 10);
    });
}

#[test]
fn criterion_04_cover_completeness() {
    criterion(4, "constructive covers match brute force", || {
        for n in 0..=7 {
            for sigma in Involution::enumerate(n) {
                let constructed: BTreeSet<Involution> =
                    lower_covers(&sigma).into_iter().collect();
                let brute: BTreeSet<Involution> =
                    brute_force_lower_covers(&sigma, Guard::default())
                        .unwrap()
                        .into_iter()
                        .collect();
                assert_eq!(constructed, brute, "sigma = {sigma}");
            }
        }

        // Start-of-cycle moves for (2,5)(3,4)(7,9)(8,10).
        let sigma = inv(10, &[(2, 5), (3, 4), (7, 9), (8, 10)]);
        let up = |s: usize| cover_up(&sigma, s).map(|m| m.target.to_string());
        assert_eq!(up(1).as_deref(), Some("(1,5)(3,4)(7,9)(8,10)"));
        assert_eq!(up(2), None);
        assert_eq!(up(3).as_deref(), Some("(2,5)(3,4)(6,9)(8,10)"));
        assert_eq!(up(4).as_deref(), Some("(2,5)(3,4)(6,10)(7,9)"));

        // End-of-cycle moves for the same cycles inside {1, .., 11}.
        let sigma = inv(11, &[(2, 5), (3, 4), (7, 9), (8, 10)]);
        let right = |s: usize| cover_right(&sigma, s).map(|m| m.target.to_string());
        assert_eq!(right(1).as_deref(), Some("(2,6)(3,4)(7,9)(8,10)"));
        assert_eq!(right(2), None);
        assert_eq!(right(3).as_deref(), Some("(2,5)(3,4)(7,11)(8,10)"));
        assert_eq!(right(4).as_deref(), Some("(2,5)(3,4)(7,9)(8,11)"));

        // Crossings for (1,3)(2,4)(5,8)(6,7), and the smallest crossing.
        let sigma = inv(8, &[(1, 3), (2, 4), (5, 8), (6, 7)]);
        assert_eq!(
            sorted_targets(&covers_cross(&sigma, 3)),
            vec!["(1,3)(2,5)(4,8)(6,7)", "(1,5)(2,4)(3,8)(6,7)"]
        );
        assert!(covers_cross(&sigma, 2).is_empty());
        assert!(covers_cross(&sigma, 4).is_empty());
        let base = inv(4, &[(1, 2), (3, 4)]);
        assert_eq!(sorted_targets(&covers_cross(&base, 2)), vec!["(1,3)(2,4)"]);

        // Swaps for (1,8)(2,5)(3,4)(6,7), and the smallest swap.
        let sigma = inv(8, &[(1, 8), (2, 5), (3, 4), (6, 7)]);
        assert_eq!(
            sorted_targets(&covers_swap(&sigma, 1)),
            vec!["(1,5)(2,8)(3,4)(6,7)", "(1,7)(2,5)(3,4)(6,8)"]
        );
        assert_eq!(
            sorted_targets(&covers_swap(&sigma, 2)),
            vec!["(1,8)(2,4)(3,5)(6,7)"]
        );
        assert!(covers_swap(&sigma, 3).is_empty());
        assert!(covers_swap(&sigma, 4).is_empty());
        let base = inv(4, &[(1, 4), (2, 3)]);
        assert_eq!(sorted_targets(&covers_swap(&base, 1)), vec!["(1,3)(2,4)"]);

        // Rank-dropping covers of (1,6)(2,3)(4,5)(7,8)(9,12)(10,11).
        let sigma = inv(12, &[(1, 6), (2, 3), (4, 5), (7, 8), (9, 12), (10, 11)]);
        let drops: Vec<String> = lower_covers_lower_rank(&sigma)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(
            drops,
            vec![
                "(1,6)(2,3)(4,5)(7,8)(10,11)",
                "(1,6)(2,3)(4,5)(9,12)(10,11)",
                "(2,3)(4,5)(7,8)(9,12)(10,11)",
            ]
        );
    });
}

#[test]
fn criterion_05_degeneration_limits() {
    criterion(5, "conjugation limits land on cover targets", || {
        let report = run_suite("degeneration", 6, 0, Guard::default()).unwrap();
        assert!(report.passed, "failing checks: {}", failing_checks(&report));
    });
}

#[test]
fn criterion_06_ideal_membership_matches_the_order() {
    criterion(6, "generators vanish exactly below sigma", || {
        let report = run_suite("ideals", 5, 0, Guard::default()).unwrap();
        assert!(report.passed, "failing checks: {}", failing_checks(&report));

        // The reduced generator list for (1,2)(3,4) in S_5 is contained in
        // the emitted set once both sides are reduced modulo the emitted
        // linear generators x(3,2) and x(5,4).
        let sigma = inv(5, &[(1, 2), (3, 4)]);
        let set = ideal_generators(&sigma, Pruning::Pruned);
        let emitted: Vec<SymPolynomial> = set.all_generators().cloned().collect();
        let emitted_texts: BTreeSet<String> = emitted.iter().map(|g| g.to_string()).collect();
        let linear: Vec<(usize, usize)> = emitted
            .iter()
            .filter(|g| g.degree() == 1)
            .map(|g| {
                let (mono, _) = g.terms().next().unwrap();
                let powers = mono.powers();
                assert_eq!(powers.len(), 1);
                (powers[0].0.row, powers[0].0.col)
            })
            .collect();
        assert_eq!(linear, vec![(3, 2), (5, 4)]);
        let reduced_emitted: BTreeSet<String> = emitted
            .iter()
            .map(|g| kill_vars(g, &linear))
            .filter(|g| !g.is_zero())
            .map(|g| g.to_string())
            .collect();

        let listed = [
            "x(3,2)",
            "x(5,4)",
            "x(4,3)*x(3,1) + x(4,2)*x(2,1)",
            "x(5,3)*x(3,1) + x(5,2)*x(2,1)",
            "x(4,2)*x(5,3) - x(4,3)*x(5,2)",
        ];
        for text in listed {
            let g = SymPolynomial::parse(text).unwrap();
            let r = kill_vars(&g, &linear);
            if r.is_zero() {
                assert!(
                    emitted_texts.contains(&g.to_string()),
                    "linear generator {g} is not emitted"
                );
            } else {
                assert!(
                    reduced_emitted.contains(&r.to_string()),
                    "{g} is not emitted modulo the linear generators"
                );
            }
        }
    });
}

#[test]
fn criterion_07_general_shape_ideal_example() {
    criterion(7, "shape ideal of the chain example collapses", || {
        // u = e12 + e24 + e35, whose windowed Jordan types are displayed
        // entry by entry; its pruned ideal is the three entries of the
        // first subdiagonal.
        let u = NilpotentMatrix::from_integers(&[
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0],
        ])
        .unwrap();
        let shape = ShapeMatrix::of_matrix(&u);
        let displayed: [(usize, usize, &[usize]); 10] = [
            (1, 2, &[1, 1]),
            (1, 3, &[2, 1]),
            (1, 4, &[2, 1, 1]),
            (1, 5, &[2, 2, 1]),
            (2, 3, &[2]),
            (2, 4, &[2, 1]),
            (2, 5, &[2, 2]),
            (3, 4, &[2]),
            (3, 5, &[2, 1]),
            (4, 5, &[2]),
        ];
        for (i, j, partition) in displayed {
            assert_eq!(shape.entry(i, j), partition, "window [{i}, {j}]");
        }

        let set = shape_ideal_generators(&shape, Pruning::Pruned);
        let texts: BTreeSet<String> = set.all_generators().map(|g| g.to_string()).collect();
        for lin in ["x(3,2)", "x(4,3)", "x(5,4)"] {
            assert!(texts.contains(lin), "missing linear generator {lin}");
        }
        let dead = [(3, 2), (4, 3), (5, 4)];
        for g in set.all_generators() {
            assert!(
                kill_vars(g, &dead).is_zero(),
                "{g} does not reduce to zero modulo the linear generators"
            );
        }
    });
}

#[test]
fn criterion_08_shape_order_gap() {
    criterion(8, "windowed Jordan data misses closure order", || {
        let (m, n) = shape_order_gap_example();
        let m_display = NilpotentMatrix::from_integers(&[
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0],
        ])
        .unwrap();
        let n_display = NilpotentMatrix::from_integers(&[
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0],
        ])
        .unwrap();
        assert_eq!(m, m_display);
        assert_eq!(n, n_display);

        let d_m = ShapeMatrix::of_matrix(&m);
        let displayed_m: [(usize, usize, &[usize]); 15] = [
            (1, 2, &[1, 1]),
            (1, 3, &[2, 1]),
            (1, 4, &[2, 2]),
            (1, 5, &[2, 2, 1]),
            (1, 6, &[3, 2, 1]),
            (2, 3, &[2]),
            (2, 4, &[2, 1]),
            (2, 5, &[2, 1, 1]),
            (2, 6, &[3, 1, 1]),
            (3, 4, &[1, 1]),
            (3, 5, &[1, 1, 1]),
            (3, 6, &[2, 1, 1]),
            (4, 5, &[1, 1]),
            (4, 6, &[2, 1]),
            (5, 6, &[2]),
        ];
        for (i, j, partition) in displayed_m {
            assert_eq!(d_m.entry(i, j), partition, "D_M window [{i}, {j}]");
        }

        let d_n = ShapeMatrix::of_matrix(&n);
        let displayed_n: [(usize, usize, &[usize]); 15] = [
            (1, 2, &[1, 1]),
            (1, 3, &[2, 1]),
            (1, 4, &[3, 1]),
            (1, 5, &[3, 1, 1]),
            (1, 6, &[3, 2, 1]),
            (2, 3, &[2]),
            (2, 4, &[3]),
            (2, 5, &[3, 1]),
            (2, 6, &[3, 2]),
            (3, 4, &[2]),
            (3, 5, &[2, 1]),
            (3, 6, &[2, 2]),
            (4, 5, &[1, 1]),
            (4, 6, &[2, 1]),
            (5, 6, &[2]),
        ];
        for (i, j, partition) in displayed_n {
            assert_eq!(d_n.entry(i, j), partition, "D_N window [{i}, {j}]");
        }

        assert!(shape_dominance_leq(&d_n, &d_m).unwrap());
        assert!(!shape_dominance_leq(&d_m, &d_n).unwrap());

        // Same orbit dimension, so neither closure contains the other even
        // though the shape data is comparable.
        let ambient = 6 * 7 / 2;
        assert_eq!(ambient - centralizer_dimension(&m.to_rational()), 11);
        assert_eq!(ambient - centralizer_dimension(&n.to_rational()), 11);
    });
}

#[test]
fn criterion_09_tableau_layer() {
    criterion(9, "tableau covers, drops, and closure unions", || {
        let report = run_suite("tableaux", 7, 0, Guard::default()).unwrap();
        assert!(report.passed, "failing checks: {}", failing_checks(&report));

        // The worked eight-box example: its only cover is the tableau that
        // moves 8 into the first column, and cover involutions are exactly
        // the rank-dropping covers of sigma_T.
        let t = TwoColumnTableau::parse("1,2,3,6/4,5,7,8").unwrap();
        assert_eq!(t.involution().to_string(), "(1,8)(2,5)(3,4)(6,7)");
        let covers = tableau_covers(&t);
        assert_eq!(covers, vec![t.move_entry(8).unwrap()]);
        assert_eq!(covers[0].to_string(), "1,2,3,6,8/4,5,7");
        let cover_sigmas: BTreeSet<String> =
            covers.iter().map(|s| s.involution().to_string()).collect();
        let rank_drops: BTreeSet<String> = lower_covers_lower_rank(&t.involution())
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(cover_sigmas, rank_drops);
    });
}

#[test]
fn criterion_10_counting() {
    criterion(10, "involution and tableau counts", || {
        let counts: Vec<u128> = (1..=8usize).map(Involution::count).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76, 232, 764]);
        for n in 1..=8usize {
            assert_eq!(Involution::enumerate(n).len() as u128, Involution::count(n));
        }
        assert_eq!(Involution::count(10), 9496);

        let report = run_suite("counts", 8, 0, Guard::default()).unwrap();
        assert!(report.passed, "failing checks: {}", failing_checks(&report));
    });
}
