//! Solvers for the minimum-links influence problem: given a graph whose nodes
//! carry activation thresholds and a pool of k external influencers, find the
//! cheapest way to wire influencer links to nodes so that threshold diffusion
//! eventually activates everyone.
//!
//! Trees, cycles and cliques are solved exactly in (near-)linear time; general
//! graphs get a potential-guided heuristic with a certified upper bound, plus
//! exhaustive reference solvers for small instances.

#![forbid(unsafe_code)]

pub mod diffusion;
pub mod feasibility;
pub mod gadget;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod rng;
pub mod solvers;
pub mod topology;
pub mod tpi;

pub use diffusion::{is_pervading, simulate, DiffusionTrace, LengthMismatch};
pub use feasibility::{
    clique_infeasibility, cycle_infeasibility, degree_bound_witness, feasible_clique,
    feasible_cycle, feasible_generic, feasible_tree, tree_infeasibility, violates_degree_bound,
    InfeasibleReason,
};
pub use gadget::{gadget_block_starts, gadget_reduce, GadgetError};
pub use generate::{
    generate, random_feasible_clique, random_feasible_clique_thresholds, random_feasible_cycle,
    random_feasible_tree, random_tree_edges, Family, GenerateError, ThresholdMode,
};
pub use graph::{
    Algorithm, Graph, GraphError, InfluencerBudget, LinkVector, Solution, SolveOutcome,
};
pub use instance::{
    format_solution, format_trace, parse, serialize, serialize_with_comments, ParseError,
    ParseErrorKind,
};
pub use oracle::{
    brute_min_links, brute_min_links_all_optima, brute_target_set, GraphTooLarge,
    ALL_OPTIMA_NODE_CAP, MIN_LINKS_NODE_CAP, TARGET_SET_NODE_CAP,
};
pub use rng::{SplitMix64, ALGORITHM_ID};
pub use solvers::{
    ml_clique, ml_clique_thresholds, ml_cycle, ml_tree, solve_clique, solve_clique_thresholds,
    solve_cycle, solve_tree,
};
pub use topology::{
    classify, connected_components, is_complete, is_connected, is_cycle_graph, is_forest,
    is_tree, ring_order, Topology, TopologyError,
};
pub use tpi::{tpi, tpi_bound, tpi_instrumented, TpiCase, TpiError, TpiIteration, TpiReport};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
