//! Command-line driver: solve, check, generate, reduce and benchmark
//! threshold-influence instances stored in the `p minlinks` file format.
//!
//! Exit codes are a stable contract: 0 solved or feasible, 1 infeasible,
//! 2 bad input (unreadable files, parse errors, unmet solver preconditions),
//! 3 internal failure (a solver produced output that fails verification).

mod bench;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use minlinks_core::{
    brute_min_links, classify, clique_infeasibility, cycle_infeasibility, degree_bound_witness,
    feasible_generic, format_solution, format_trace, gadget_reduce, generate, parse,
    serialize_with_comments, simulate, solve_clique, solve_cycle, solve_tree, tpi,
    tree_infeasibility, BigRational, Family, Graph, InfeasibleReason, InfluencerBudget,
    SolveOutcome, ThresholdMode, Topology, ALGORITHM_ID, MIN_LINKS_NODE_CAP,
};

const EXIT_OK: u8 = 0;
const EXIT_INFEASIBLE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "minlinks",
    version,
    about = "Find cheapest influencer link placements that activate a whole network"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print the link placement found
    Solve {
        /// Instance file
        input: PathBuf,
        /// Solver to run; auto picks by topology and falls back to the
        /// heuristic on general graphs
        #[arg(long, value_enum, default_value_t = AlgoChoice::Auto)]
        algo: AlgoChoice,
        /// Append the diffusion rounds of the placement
        #[arg(long)]
        trace: bool,
        /// Re-simulate the placement and fail unless everyone activates
        #[arg(long)]
        verify: bool,
    },
    /// Report whether an instance is feasible, and which condition fails
    Check {
        /// Instance file
        input: PathBuf,
    },
    /// Write a random instance file, reproducible from its seed
    Gen {
        /// Output file
        output: PathBuf,
        /// Graph family: tree, cycle, clique, star or gnp
        #[arg(long, value_parser = Family::from_str)]
        family: Family,
        /// Node count
        #[arg(long)]
        n: usize,
        /// Influencer budget
        #[arg(long)]
        k: u32,
        /// Threshold mode: unit, feasible-uniform or adversarial
        #[arg(long, value_parser = ThresholdMode::from_str, default_value = "feasible-uniform")]
        mode: ThresholdMode,
        /// Upper cap on feasible-uniform threshold draws
        #[arg(long)]
        cap: Option<u32>,
        /// Edge probability, gnp family only
        #[arg(long)]
        p: Option<f64>,
        /// Generator seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rewrite a thresholds-at-most-2 instance as a budget-1 instance whose
    /// minimum link count equals the smallest seed set of the original
    ReduceTss {
        /// Instance file, every threshold 1 or 2
        input: PathBuf,
        /// Output file for the reduced instance
        output: PathBuf,
    },
    /// Solve every instance in a directory and write a CSV of results
    Bench {
        /// Directory of instance files
        dir: PathBuf,
        /// Output CSV file
        output: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoChoice {
    Auto,
    Tree,
    Cycle,
    Clique,
    Tpi,
    Brute,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Solve { input, algo, trace, verify } => cmd_solve(&input, algo, trace, verify),
        Command::Check { input } => cmd_check(&input),
        Command::Gen { output, family, n, k, mode, cap, p, seed } => {
            cmd_gen(&output, family, n, k, mode, cap, p, seed)
        }
        Command::ReduceTss { input, output } => cmd_reduce_tss(&input, &output),
        Command::Bench { dir, output } => match oracle_cap() {
            Ok(cap) => bench::run(&dir, &output, cap),
            Err(code) => code,
        },
    };
    ExitCode::from(code)
}

fn load(path: &Path) -> Result<(Graph, InfluencerBudget), u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        EXIT_INPUT
    })?;
    parse(&text).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        EXIT_INPUT
    })
}

/// Node cap for exhaustive search, overridable through MINLINKS_ORACLE_CAP.
fn oracle_cap() -> Result<usize, u8> {
    match std::env::var("MINLINKS_ORACLE_CAP") {
        Ok(value) => value.trim().parse().map_err(|_| {
            eprintln!("MINLINKS_ORACLE_CAP must be a node count, got `{value}`");
            EXIT_INPUT
        }),
        Err(std::env::VarError::NotPresent) => Ok(MIN_LINKS_NODE_CAP),
        Err(e) => {
            eprintln!("MINLINKS_ORACLE_CAP: {e}");
            Err(EXIT_INPUT)
        }
    }
}

fn cmd_solve(input: &Path, algo: AlgoChoice, trace: bool, verify: bool) -> u8 {
    let (g, k) = match load(input) {
        Ok(pair) => pair,
        Err(code) => return code,
    };
    let (label, outcome, bound) = match dispatch(&g, k, algo) {
        Ok(run) => run,
        Err(code) => return code,
    };

    println!("c algo {label}");
    if let Some(bound) = &bound {
        println!("c bound {bound}");
    }
    print!("{}", format_solution(&outcome.solution));

    let Some(links) = outcome.links() else {
        return EXIT_INFEASIBLE;
    };
    let trace_run = simulate(&g, links).expect("solver outputs cover every node");
    if trace {
        print!("{}", format_trace(&trace_run));
    }
    if verify && !trace_run.fully_activated() {
        eprintln!("verification failed: the returned links do not activate every node");
        return EXIT_INTERNAL;
    }
    EXIT_OK
}

/// Picks and runs a solver, returning its display label, outcome, and the
/// certificate bound when the heuristic produced one.
fn dispatch(
    g: &Graph,
    k: InfluencerBudget,
    algo: AlgoChoice,
) -> Result<(String, SolveOutcome, Option<BigRational>), u8> {
    match algo {
        AlgoChoice::Tree => exact(solve_tree(g, k)),
        AlgoChoice::Cycle => exact(solve_cycle(g, k)),
        AlgoChoice::Clique => exact(solve_clique(g, k)),
        AlgoChoice::Tpi => run_tpi(g, k),
        AlgoChoice::Brute => run_brute(g, k),
        AlgoChoice::Auto => match classify(g) {
            Topology::Tree => exact(solve_tree(g, k)),
            Topology::Cycle => exact(solve_cycle(g, k)),
            Topology::Clique => exact(solve_clique(g, k)),
            Topology::General => {
                if k.get() >= g.max_threshold() {
                    run_tpi(g, k)
                } else {
                    eprintln!(
                        "warning: budget {} is below the largest threshold {}, which the \
                         heuristic requires; falling back to exhaustive search",
                        k.get(),
                        g.max_threshold()
                    );
                    run_brute(g, k)
                }
            }
        },
    }
}

fn exact(
    result: Result<SolveOutcome, impl fmt::Display>,
) -> Result<(String, SolveOutcome, Option<BigRational>), u8> {
    match result {
        Ok(outcome) => Ok((outcome.algorithm.to_string(), outcome, None)),
        Err(e) => {
            eprintln!("{e}");
            Err(EXIT_INPUT)
        }
    }
}

fn run_tpi(
    g: &Graph,
    k: InfluencerBudget,
) -> Result<(String, SolveOutcome, Option<BigRational>), u8> {
    match tpi(g, k) {
        Ok(report) => Ok((
            "tpi(heuristic)".to_string(),
            SolveOutcome::feasible(minlinks_core::Algorithm::Tpi, report.links),
            Some(report.bound),
        )),
        Err(e) => {
            eprintln!("{e}");
            Err(EXIT_INPUT)
        }
    }
}

fn run_brute(
    g: &Graph,
    k: InfluencerBudget,
) -> Result<(String, SolveOutcome, Option<BigRational>), u8> {
    let cap = oracle_cap()?;
    match brute_min_links(g, k, cap) {
        Ok(outcome) => Ok((outcome.algorithm.to_string(), outcome, None)),
        Err(e) => {
            eprintln!("{e}; raise MINLINKS_ORACLE_CAP to force the search");
            Err(EXIT_INPUT)
        }
    }
}

fn cmd_check(input: &Path) -> u8 {
    let (g, k) = match load(input) {
        Ok(pair) => pair,
        Err(code) => return code,
    };
    let verdict: Option<Option<InfeasibleReason>> = match classify(&g) {
        Topology::Tree => Some(tree_infeasibility(&g, k).expect("topology classified")),
        Topology::Cycle => Some(cycle_infeasibility(&g, k).expect("topology classified")),
        Topology::Clique => Some(clique_infeasibility(&g, k).expect("topology classified")),
        Topology::General => None,
    };
    let (feasible, reason) = match verdict {
        Some(None) => (true, None),
        Some(Some(reason)) => (false, Some(describe(&reason))),
        None => match degree_bound_witness(&g, k) {
            Some(reason) => (false, Some(describe(&reason))),
            None => (feasible_generic(&g, k), None),
        },
    };
    if feasible {
        println!("feasible");
        EXIT_OK
    } else {
        println!("infeasible");
        if let Some(reason) = reason {
            println!("reason: {reason}");
        }
        EXIT_INFEASIBLE
    }
}

/// Library reasons number nodes from 0; file-format users see 1-based ids,
/// so reasons are re-rendered here with shifted ids.
fn describe(reason: &InfeasibleReason) -> String {
    match reason {
        InfeasibleReason::DegreeBound { node, threshold, degree } => format!(
            "node {} has threshold {threshold} above degree {degree} plus budget",
            node + 1
        ),
        InfeasibleReason::NoSeedableNode => {
            "every threshold exceeds the budget, so round 0 is empty".to_string()
        }
        InfeasibleReason::TreeLeafThreshold { node, residual } => format!(
            "leaf {} still needs {residual} links, more than budget + 1",
            node + 1
        ),
        InfeasibleReason::TreeLastNode { node, residual } => format!(
            "last remaining node {} still needs {residual} links, more than the budget",
            node + 1
        ),
        InfeasibleReason::CycleNoLowThreshold => {
            "no node on the cycle has threshold at most the budget".to_string()
        }
        InfeasibleReason::CycleThresholdTooHigh { node, threshold } => {
            format!("node {} has threshold {threshold}, above budget + 2", node + 1)
        }
        InfeasibleReason::CycleGapWithoutLowThreshold { first, second } => format!(
            "consecutive budget+2 nodes {} and {} have no low-threshold node between them",
            first + 1,
            second + 1
        ),
        InfeasibleReason::CliqueRank { node, rank, threshold } => format!(
            "sorted rank {rank} (node {}) has threshold {threshold} above rank + budget - 1",
            node + 1
        ),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    output: &Path,
    family: Family,
    n: usize,
    k: u32,
    mode: ThresholdMode,
    cap: Option<u32>,
    p: Option<f64>,
    seed: u64,
) -> u8 {
    let mode = match (mode, cap) {
        (ThresholdMode::FeasibleUniform { .. }, cap) => ThresholdMode::FeasibleUniform { cap },
        (mode, None) => mode,
        (_, Some(_)) => {
            eprintln!("--cap only applies to --mode feasible-uniform");
            return EXIT_INPUT;
        }
    };
    let k = match InfluencerBudget::new(k) {
        Ok(k) => k,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_INPUT;
        }
    };
    let (g, k) = match generate(family, n, k, mode, seed, p) {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_INPUT;
        }
    };
    let p_note = p.map(|p| format!(" p {p}")).unwrap_or_default();
    let comments = [
        format!("family {family} n {n} k {} mode {mode}{p_note}", k.get()),
        format!("rng {ALGORITHM_ID} seed {seed}"),
    ];
    match fs::write(output, serialize_with_comments(&g, k, &comments)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("{}: {e}", output.display());
            EXIT_INPUT
        }
    }
}

fn cmd_reduce_tss(input: &Path, output: &Path) -> u8 {
    // The reduction ignores the input's budget: the reduced instance always
    // carries budget 1, and the original budget plays no role in seeding cost.
    let (g, _) = match load(input) {
        Ok(pair) => pair,
        Err(code) => return code,
    };
    let (reduced, one) = match gadget_reduce(&g) {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("{}: {e}", input.display());
            return EXIT_INPUT;
        }
    };
    let source = input
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| input.display().to_string());
    let comments = [format!(
        "budget-1 reduction of {source} (n {} m {})",
        g.node_count(),
        g.edge_count()
    )];
    match fs::write(output, serialize_with_comments(&reduced, one, &comments)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("{}: {e}", output.display());
            EXIT_INPUT
        }
    }
}
