//! Batch benchmarking: solve every parseable instance in a directory with
//! every algorithm that applies to it and write one CSV row per run.
//!
//! Applicability: the matching exact solver when the topology is a tree,
//! cycle or clique; the heuristic when the budget covers the largest
//! threshold. The exhaustive oracle runs once per instance at or below the
//! node cap and its total is repeated on each of that instance's rows.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use minlinks_core::{
    brute_min_links, classify, parse, solve_clique, solve_cycle, solve_tree, tpi, BigInt,
    BigRational, SolveOutcome, Topology,
};

const HEADER: &str = "instance,n,m,k,topology,algo,total,bound,oracle_total,wall_time_ms";

pub fn run(dir: &Path, output: &Path, oracle_cap: usize) -> u8 {
    let entries = match fs::read_dir(dir) {
        Ok(entries) => entries,
        Err(e) => {
            eprintln!("{}: {e}", dir.display());
            return 2;
        }
    };
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|entry| {
            let path = entry.ok()?.path();
            path.is_file().then_some(path)
        })
        .collect();
    paths.sort();

    let rows: Vec<String> = paths
        .par_iter()
        .map(|path| bench_instance(path, oracle_cap))
        .collect::<Vec<Vec<String>>>()
        .into_iter()
        .flatten()
        .collect();

    let mut csv = String::from(HEADER);
    csv.push('\n');
    for row in rows {
        csv.push_str(&row);
        csv.push('\n');
    }
    match fs::write(output, csv) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}: {e}", output.display());
            2
        }
    }
}

/// All CSV rows for one instance file; empty (with a warning) when the file
/// does not parse, so one stray file does not sink the whole batch.
fn bench_instance(path: &Path, oracle_cap: usize) -> Vec<String> {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("warning: skipping {name}: {e}");
            return Vec::new();
        }
    };
    let (g, k) = match parse(&text) {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("warning: skipping {name}: {e}");
            return Vec::new();
        }
    };

    let topology = classify(&g);
    let oracle_total = if g.node_count() <= oracle_cap {
        let outcome = brute_min_links(&g, k, oracle_cap).expect("cap just checked");
        Some(render_total(&outcome))
    } else {
        None
    };

    let prefix = format!(
        "{name},{},{},{},{topology}",
        g.node_count(),
        g.edge_count(),
        k.get()
    );
    let suffix = oracle_total.unwrap_or_default();
    let mut rows = Vec::new();

    let mut exact_row = |algo: &str, solve: &dyn Fn() -> SolveOutcome| {
        let started = Instant::now();
        let outcome = solve();
        let ms = started.elapsed().as_secs_f64() * 1e3;
        rows.push(format!(
            "{prefix},{algo},{},,{suffix},{ms:.3}",
            render_total(&outcome)
        ));
    };
    match topology {
        Topology::Tree => exact_row("tree", &|| solve_tree(&g, k).expect("topology classified")),
        Topology::Cycle => {
            exact_row("cycle", &|| solve_cycle(&g, k).expect("topology classified"))
        }
        Topology::Clique => {
            exact_row("clique", &|| solve_clique(&g, k).expect("topology classified"))
        }
        Topology::General => {}
    }
    drop(exact_row);

    if k.get() >= g.max_threshold() {
        let started = Instant::now();
        let report = tpi(&g, k).expect("budget covers the largest threshold");
        let ms = started.elapsed().as_secs_f64() * 1e3;
        rows.push(format!(
            "{prefix},tpi(heuristic),{},{},{suffix},{ms:.3}",
            report.total,
            decimal6(&report.bound)
        ));
    }

    rows
}

fn render_total(outcome: &SolveOutcome) -> String {
    match outcome.total() {
        Some(total) => total.to_string(),
        None => "infeasible".to_string(),
    }
}

/// Fixed six-decimal rendering of a nonnegative rational, rounding half up:
/// 47/7 becomes 6.714286.
fn decimal6(r: &BigRational) -> String {
    let scale = BigInt::from(1_000_000);
    let scaled = (r.numer() * scale * 2u8 + r.denom()) / (r.denom() * 2u8);
    let digits = scaled.to_string();
    if digits.len() <= 6 {
        format!("0.{digits:0>6}")
    } else {
        let (whole, frac) = digits.split_at(digits.len() - 6);
        format!("{whole}.{frac}")
    }
}
