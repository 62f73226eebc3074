//! `invariatus` — inspect invariance properties of subgroups of finite
//! abelian groups, print strictly-invariant-subgroup lattices, and run
//! the reproduction/verification suites.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
//! 3 resource limit exceeded.

mod render;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use invariatus_core::{
    enumerate_subgroups, invariance_report, parse_group_literal, span, strict_lattice,
    EnumerationBudget, Error, FiniteAbelianGroup, GroupElement,
};

#[derive(Parser)]
#[command(
    name = "invariatus",
    version,
    about = "Decide and classify invariance of subgroups of finite abelian groups and submodules of finite ring modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect one finite abelian group given as an "2x4x8" style literal.
    Group {
        /// Group literal: invariant factors separated by 'x' ("1" = trivial).
        spec: String,
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Run a verification suite and report per-check outcomes.
    Suite {
        #[command(subcommand)]
        which: SuiteCommand,
    },
}

#[derive(Subcommand)]
enum GroupAction {
    /// List every subgroup in canonical order, one row each.
    ListSubgroups {
        /// Emit a JSON array instead of rows.
        #[arg(long)]
        json: bool,
    },
    /// Full invariance report for the subgroup spanned by the generators.
    Report {
        /// Semicolon-separated elements, comma-separated coefficients,
        /// e.g. "0,2,0;1,0,2".
        generators: String,
        /// Cross-check the structural classifier with brute-force scans.
        #[arg(long)]
        verify: bool,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the lattice of strictly invariant subgroups.
    Lattice {
        /// Also write a DOT Hasse diagram to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Emit the lattice as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum SuiteCommand {
    /// Fixed reproduction checks: the named counterexamples and the finite
    /// theorem cases.
    Paper {
        /// Emit the suite result as JSON (stable bytes for fixed inputs).
        #[arg(long)]
        json: bool,
        /// Worker threads for the check pool (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Exhaustive sweep of every abelian group up to a size bound.
    Corpus {
        /// Largest group order to include.
        #[arg(long, default_value_t = 64)]
        max_order: u64,
        /// Largest rank per prime to include.
        #[arg(long, default_value_t = 4)]
        max_rank: u32,
        /// Worker threads for the check pool (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Emit the suite result as JSON (stable bytes for fixed inputs).
        #[arg(long)]
        json: bool,
    },
}

fn budget_from_env() -> Result<EnumerationBudget, Error> {
    match std::env::var("INVARIATUS_BUDGET") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(EnumerationBudget::new)
            .map_err(|_| Error::InvalidInput(format!("INVARIATUS_BUDGET must be a number, got {v:?}"))),
        Err(_) => Ok(EnumerationBudget::default()),
    }
}

fn parse_generators(g: &FiniteAbelianGroup, text: &str) -> Result<Vec<GroupElement>, Error> {
    let mut out = Vec::new();
    for part in text.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let coeffs: Vec<u64> = part
            .split(',')
            .map(|c| {
                c.trim().parse::<u64>().map_err(|_| {
                    Error::InvalidInput(format!("bad coefficient {c:?} in generator {part:?}"))
                })
            })
            .collect::<Result<_, _>>()?;
        if coeffs.len() != g.rank() {
            return Err(Error::InvalidInput(format!(
                "generator {part:?} has {} coefficients, the group has rank {}",
                coeffs.len(),
                g.rank()
            )));
        }
        let reduced: Vec<u64> =
            coeffs.iter().zip(g.factors()).map(|(c, d)| c % d).collect();
        out.push(g.element(&reduced)?);
    }
    Ok(out)
}

/// Ok(true): everything passed. Ok(false): a check failed (exit 1).
fn run(cli: Cli) -> Result<bool, Error> {
    let budget = budget_from_env()?;
    match cli.command {
        Command::Group { spec, action } => {
            let g = parse_group_literal(&spec)?;
            match action {
                GroupAction::ListSubgroups { json } => {
                    let subs = enumerate_subgroups(&g, &budget)?;
                    if json {
                        println!("{}", render::subgroups_json(&subs));
                    } else {
                        render::print_subgroup_rows(&g, &subs);
                    }
                    Ok(true)
                }
                GroupAction::Report { generators, verify, json } => {
                    let gens = parse_generators(&g, &generators)?;
                    let h = span(&g, &gens);
                    let report = invariance_report(&g, &h, verify)?;
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string(&report)
                                .expect("report serialization is infallible")
                        );
                    } else {
                        render::print_report(&g, &report);
                    }
                    Ok(true)
                }
                GroupAction::Lattice { dot, json } => {
                    let lattice = strict_lattice(&g, &budget, false)?;
                    if let Some(path) = &dot {
                        std::fs::write(path, render::lattice_dot(&lattice)).map_err(|e| {
                            Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
                        })?;
                    }
                    if json {
                        println!("{}", render::lattice_json(&lattice));
                    } else {
                        render::print_lattice(&g, &lattice);
                    }
                    Ok(true)
                }
            }
        }
        Command::Suite { which } => {
            let (name, jobs, json, outcomes) = match which {
                SuiteCommand::Paper { json, jobs } => {
                    ("paper", jobs, json, suites::paper_checks())
                }
                SuiteCommand::Corpus { max_order, max_rank, jobs, json } => {
                    ("corpus", jobs, json, suites::corpus_checks(max_order, max_rank))
                }
            };
            let result = suites::run_suite(name, outcomes, jobs, &budget)?;
            let all_pass = result.results.iter().all(|c| c.status == "pass");
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&result).expect("suite serialization is infallible")
                );
            } else {
                render::print_suite(&result);
            }
            Ok(all_pass)
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when a pipe closes (e.g. `invariatus ... | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::ResourceLimit { .. } => 3,
                Error::InvalidInput(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
