//! Command-line front end for the orbit-closure calculus: enumeration,
//! order queries, covers, closures, Hasse/DOT export, ideal generators,
//! tableau operations, and the verification suites.
//!
//! Exit codes: 0 on success, 1 on validation errors (bad arguments, parse
//! failures, guard ceilings), 2 when a verification run reports failures.

use borbits::error::Error;
use borbits::ideal::{ideal_generators, Pruning};
use borbits::involution::Involution;
use borbits::oracle::orbit_dimension_oracle;
use borbits::poset::{closure, cover_moves, hasse_diagram, Guard};
use borbits::rank::RankMatrix;
use borbits::tableau::{orbital_closure, tableau_covers, TwoColumnTableau};
use borbits::verify::{run_suite, Report};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "borbits",
    version,
    about = "Combinatorics of B-orbit closures of square-zero upper-triangular matrices"
)]
struct Cli {
    /// Output format (dot applies to `hasse` only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List the involutions of {1, .., n} in canonical order
    Enumerate {
        n: usize,
        /// Print only the number of involutions
        #[arg(long)]
        count: bool,
    },
    /// Window rank matrix of an involution
    Rank {
        /// Involution as "(1,7)(2,3)(4,6)", "id", or JSON
        sigma: String,
        /// Ambient size (letters 1..=n)
        #[arg(long)]
        n: usize,
    },
    /// Orbit dimension by the closed formula, with its correction terms
    Dim {
        sigma: String,
        #[arg(long)]
        n: usize,
        /// Cross-check against the centralizer-codimension oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Lower covers of an involution, annotated by the move producing each
    Covers {
        sigma: String,
        #[arg(long)]
        n: usize,
    },
    /// Every involution weakly below sigma in the closure order
    Closure {
        sigma: String,
        #[arg(long)]
        n: usize,
    },
    /// Hasse diagram of the closure order on all involutions of {1, .., n}
    Hasse {
        n: usize,
        /// Shorthand for --format dot
        #[arg(long)]
        dot: bool,
    },
    /// Determinantal generators of the orbit-closure ideal
    Ideal {
        sigma: String,
        #[arg(long)]
        n: usize,
        /// Emit minors for every window
        #[arg(long, conflicts_with = "pruned")]
        full: bool,
        /// Emit minors only for windows not implied by their neighbors (default)
        #[arg(long)]
        pruned: bool,
    },
    /// Two-column standard tableau operations
    Tableau {
        #[command(subcommand)]
        op: TableauOp,
    },
    /// Run a named verification suite and report per-check results
    Verify {
        /// One of: counts, bijection, dimension, covers, degeneration, ideals, tableaux
        #[arg(long)]
        suite: String,
        /// Largest ambient size to sweep
        #[arg(long = "max-n")]
        max_n: usize,
        /// Base seed for the sampling suites
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum TableauOp {
    /// The involution attached to a tableau
    Sigma {
        /// Tableau as "1,2,3,6/4,5,7,8" or JSON {"col1":[..],"col2":[..]}
        tableau: String,
    },
    /// Cover tableaux: single moves that drop one cycle of sigma_T
    Covers { tableau: String },
    /// Every tableau whose orbital variety meets the closure of this one's
    Closure { tableau: String },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = i32::from(e.use_stderr());
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn guard_from_env() -> Result<Guard, Error> {
    match std::env::var("BORBITS_MAX_N") {
        Ok(value) => value
            .trim()
            .parse::<usize>()
            .map(Guard::new)
            .map_err(|e| Error::Parse(format!("BORBITS_MAX_N: {e}"))),
        Err(std::env::VarError::NotPresent) => Ok(Guard::default()),
        Err(e) => Err(Error::Parse(format!("BORBITS_MAX_N: {e}"))),
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let guard = guard_from_env()?;
    let format = cli.format;
    let require_not_dot = |what: &str| -> Result<(), Error> {
        if format == Format::Dot {
            Err(Error::Parse(format!(
                "dot output only applies to hasse, not {what}"
            )))
        } else {
            Ok(())
        }
    };

    match cli.command {
        Command::Enumerate { n, count } => {
            require_not_dot("enumerate")?;
            guard.check("enumerate", n)?;
            let all = Involution::enumerate(n);
            match format {
                Format::Json if count => {
                    println!("{}", json!({"n": n, "count": all.len()}));
                }
                Format::Json => {
                    let texts: Vec<String> = all.iter().map(|s| s.to_string()).collect();
                    println!(
                        "{}",
                        json!({"n": n, "count": all.len(), "involutions": texts})
                    );
                }
                _ if count => println!("{}", all.len()),
                _ => {
                    for sigma in &all {
                        println!("{sigma}");
                    }
                }
            }
            Ok(0)
        }

        Command::Rank { sigma, n } => {
            require_not_dot("rank")?;
            let sigma = Involution::parse(&sigma, Some(n))?;
            let r = RankMatrix::of_involution(&sigma);
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "sigma": sigma.to_string(),
                        "n": n,
                        "rank_matrix": serde_json::to_value(&r).expect("serializable"),
                    })
                ),
                _ => {
                    for row in r.rows() {
                        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                        println!("{}", line.join(" "));
                    }
                }
            }
            Ok(0)
        }

        Command::Dim { sigma, n, oracle } => {
            require_not_dot("dim")?;
            let sigma = Involution::parse(&sigma, Some(n))?;
            let r_values = sigma.r_values();
            let dimension = sigma.orbit_dimension();
            let oracle_value = oracle.then(|| orbit_dimension_oracle(&sigma));
            match format {
                Format::Json => {
                    let mut payload = json!({
                        "sigma": sigma.to_string(),
                        "n": n,
                        "r_values": r_values,
                        "dimension": dimension,
                    });
                    if let Some(o) = oracle_value {
                        payload["centralizer_oracle"] = json!(o);
                    }
                    println!("{payload}");
                }
                _ => {
                    println!("sigma = {sigma}");
                    let shown: Vec<String> = r_values.iter().map(|v| v.to_string()).collect();
                    if shown.is_empty() {
                        println!("r-values = (none)");
                    } else {
                        println!("r-values = {}", shown.join(", "));
                    }
                    println!("dimension = {dimension}");
                    if let Some(o) = oracle_value {
                        println!("centralizer oracle = {o}");
                    }
                }
            }
            if let Some(o) = oracle_value {
                if o != dimension {
                    eprintln!("verification failure: formula {dimension} != oracle {o}");
                    return Ok(2);
                }
            }
            Ok(0)
        }

        Command::Covers { sigma, n } => {
            require_not_dot("covers")?;
            let sigma = Involution::parse(&sigma, Some(n))?;
            let moves = cover_moves(&sigma);
            match format {
                Format::Json => {
                    let entries: Vec<serde_json::Value> = moves
                        .iter()
                        .map(|mv| {
                            json!({
                                "target": mv.target.to_string(),
                                "kind": serde_json::to_value(&mv.kind).expect("serializable"),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({"sigma": sigma.to_string(), "n": n, "covers": entries})
                    );
                }
                _ => {
                    for mv in &moves {
                        println!("{}  [{}]", mv.target, mv.kind.describe());
                    }
                }
            }
            Ok(0)
        }

        Command::Closure { sigma, n } => {
            require_not_dot("closure")?;
            let sigma = Involution::parse(&sigma, Some(n))?;
            let below = closure(&sigma, guard)?;
            match format {
                Format::Json => {
                    let texts: Vec<String> = below.iter().map(|s| s.to_string()).collect();
                    println!(
                        "{}",
                        json!({
                            "sigma": sigma.to_string(),
                            "n": n,
                            "count": texts.len(),
                            "closure": texts,
                        })
                    );
                }
                _ => {
                    for other in &below {
                        println!("{other}");
                    }
                }
            }
            Ok(0)
        }

        Command::Hasse { n, dot } => {
            let diagram = hasse_diagram(n, guard)?;
            let effective = if dot { Format::Dot } else { format };
            match effective {
                Format::Dot => print!("{}", diagram.to_dot()),
                Format::Json => println!("{}", diagram.to_json()),
                Format::Text => {
                    println!(
                        "n = {n}: {} orbits, {} cover edges",
                        diagram.nodes().len(),
                        diagram.edges().len()
                    );
                    for &(hi, lo) in diagram.edges() {
                        println!("{} -> {}", diagram.nodes()[hi], diagram.nodes()[lo]);
                    }
                }
            }
            Ok(0)
        }

        Command::Ideal {
            sigma,
            n,
            full,
            pruned: _,
        } => {
            require_not_dot("ideal")?;
            let sigma = Involution::parse(&sigma, Some(n))?;
            let mode = if full { Pruning::Full } else { Pruning::Pruned };
            let set = ideal_generators(&sigma, mode);
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_value(&set).expect("serializable"))
                }
                _ => {
                    println!("quadratic generators ({}):", set.quadratic.len());
                    for q in &set.quadratic {
                        println!("  {q}");
                    }
                    println!("window minors ({}):", set.minors.len());
                    for m in &set.minors {
                        println!(
                            "  window [{},{}] power {} size {}: {}",
                            m.window.0, m.window.1, m.power, m.size, m.poly
                        );
                    }
                }
            }
            Ok(0)
        }

        Command::Tableau { op } => {
            require_not_dot("tableau")?;
            match op {
                TableauOp::Sigma { tableau } => {
                    let t = TwoColumnTableau::parse(&tableau)?;
                    let sigma = t.involution();
                    match format {
                        Format::Json => println!(
                            "{}",
                            json!({
                                "tableau": serde_json::to_value(&t).expect("serializable"),
                                "sigma": sigma.to_string(),
                            })
                        ),
                        _ => {
                            println!("{}", t.render_columns());
                            println!("sigma = {sigma}");
                        }
                    }
                }
                TableauOp::Covers { tableau } => {
                    let t = TwoColumnTableau::parse(&tableau)?;
                    let covers = tableau_covers(&t);
                    match format {
                        Format::Json => {
                            let entries: Vec<serde_json::Value> = covers
                                .iter()
                                .map(|s| serde_json::to_value(s).expect("serializable"))
                                .collect();
                            println!(
                                "{}",
                                json!({
                                    "tableau": serde_json::to_value(&t).expect("serializable"),
                                    "covers": entries,
                                })
                            );
                        }
                        _ => {
                            for s in &covers {
                                println!("{s}");
                            }
                        }
                    }
                }
                TableauOp::Closure { tableau } => {
                    let t = TwoColumnTableau::parse(&tableau)?;
                    let closure_set = orbital_closure(&t, guard)?;
                    match format {
                        Format::Json => {
                            let entries: Vec<serde_json::Value> = closure_set
                                .iter()
                                .map(|s| serde_json::to_value(s).expect("serializable"))
                                .collect();
                            println!(
                                "{}",
                                json!({
                                    "tableau": serde_json::to_value(&t).expect("serializable"),
                                    "count": entries.len(),
                                    "closure": entries,
                                })
                            );
                        }
                        _ => {
                            for s in &closure_set {
                                println!("{s}");
                            }
                        }
                    }
                }
            }
            Ok(0)
        }

        Command::Verify { suite, max_n, seed } => {
            require_not_dot("verify")?;
            let report = run_suite(&suite, max_n, seed, guard)?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                _ => print_report(&report),
            }
            Ok(if report.passed { 0 } else { 2 })
        }
    }
}

fn print_report(report: &Report) {
    println!(
        "suite {} (max-n {}, seed {})",
        report.suite, report.max_n, report.seed
    );
    for check in &report.checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        println!("{status} {} {}", check.name, check.params);
        if let Some(payload) = &check.counterexample {
            println!("     counterexample: {payload}");
        }
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    println!("{} checks, {} passed", report.checks.len(), passed);
}
