//! Deterministic instance builders shared by the benchmark targets.
//!
//! Every builder seeds its own [`SplitMix64`] stream from the requested
//! size, so repeated benchmark runs measure the same instances.

use minlinks_core::{
    generate, random_feasible_clique_thresholds, random_feasible_cycle, random_feasible_tree,
    Family, Graph, InfluencerBudget, SplitMix64, ThresholdMode,
};

const BUDGET: u32 = 3;

fn budget() -> InfluencerBudget {
    InfluencerBudget::new(BUDGET).unwrap()
}

/// A solvable random tree with `n` nodes and budget 3.
pub fn tree_instance(n: usize) -> (Graph, InfluencerBudget) {
    let mut rng = SplitMix64::new(0x7ee ^ n as u64);
    (random_feasible_tree(n, budget(), &mut rng), budget())
}

/// A solvable random ring with `n` nodes and budget 3.
pub fn cycle_instance(n: usize) -> (Graph, InfluencerBudget) {
    let mut rng = SplitMix64::new(0xc1c1e ^ n as u64);
    (random_feasible_cycle(n, budget(), &mut rng), budget())
}

/// Solvable thresholds for a complete graph on `n` nodes with budget 3.
///
/// Only the threshold list is materialized; the quadratic edge set never
/// needs to exist for the clique solver.
pub fn clique_instance(n: usize) -> (Vec<u32>, InfluencerBudget) {
    let mut rng = SplitMix64::new(0xc119 ^ n as u64);
    (random_feasible_clique_thresholds(n, budget(), &mut rng), budget())
}

/// A sparse random graph (average degree about 4) with a budget large
/// enough for the heuristic to accept it.
pub fn sparse_instance(n: usize) -> (Graph, InfluencerBudget) {
    let p = 4.0 / n as f64;
    let (g, _) = generate(
        Family::Gnp,
        n,
        InfluencerBudget::new(1).unwrap(),
        ThresholdMode::FeasibleUniform { cap: None },
        0x90b ^ n as u64,
        Some(p),
    )
    .expect("parameters are valid for gnp");
    let k = InfluencerBudget::new(g.max_threshold().max(1)).unwrap();
    (g, k)
}
