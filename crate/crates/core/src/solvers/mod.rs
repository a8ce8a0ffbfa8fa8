//! Optimal solvers for the structured families: trees and forests, cycles,
//! and cliques. Each returns a minimum pervading link vector in near-linear
//! time, alongside the closed-form totals those optima are known to equal.

mod clique;
mod cycle;
mod tree;

pub use clique::{ml_clique, ml_clique_thresholds, solve_clique, solve_clique_thresholds};
pub use cycle::{ml_cycle, solve_cycle};
pub use tree::{ml_tree, solve_tree};
