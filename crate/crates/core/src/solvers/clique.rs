//! Clique solver: sort by threshold, then fill each rank's deficit.

use crate::feasibility::{clique_rank_violation, sort_by_threshold};
use crate::graph::{Algorithm, Graph, InfluencerBudget, LinkVector, SolveOutcome};
use crate::topology::{is_complete, TopologyError};

/// Minimum pervading link vector for a complete graph.
///
/// Sorting the thresholds ascending (ties by id), the node at 1-based rank i
/// can count on i - 1 cheaper nodes activating before it, so it needs
/// t - i + 1 links whenever t >= i and none otherwise. Any deficit above k is
/// infeasible. Runs in O(n + k) via counting sort.
pub fn solve_clique(g: &Graph, k: InfluencerBudget) -> Result<SolveOutcome, TopologyError> {
    if !is_complete(g) {
        return Err(TopologyError::NotAClique);
    }
    Ok(solve_clique_thresholds(g.thresholds(), k))
}

/// [`solve_clique`] on the threshold list alone. The adjacency of a complete
/// graph is implied, and materializing it for large n would dwarf the solve.
pub fn solve_clique_thresholds(thresholds: &[u32], k: InfluencerBudget) -> SolveOutcome {
    if clique_rank_violation(thresholds, k).is_some() {
        return SolveOutcome::infeasible(Algorithm::Clique);
    }
    let mut links = LinkVector::zeros(thresholds.len());
    for (rank, v) in sort_by_threshold(thresholds).into_iter().enumerate() {
        let rank = (rank + 1) as u64;
        let t = thresholds[v as usize] as u64;
        if t >= rank {
            let deficit = (t - rank + 1) as u32;
            debug_assert!(deficit <= k.get(), "screened by the rank scan");
            links.set(v, deficit);
        }
    }
    SolveOutcome::feasible(Algorithm::Clique, links)
}

/// Closed-form optimum for a complete graph: the summed rank deficits
/// of [`solve_clique`], or None when the instance is infeasible.
pub fn ml_clique(g: &Graph, k: InfluencerBudget) -> Result<Option<u64>, TopologyError> {
    if !is_complete(g) {
        return Err(TopologyError::NotAClique);
    }
    Ok(ml_clique_thresholds(g.thresholds(), k))
}

/// [`ml_clique`] on the threshold list alone.
pub fn ml_clique_thresholds(thresholds: &[u32], k: InfluencerBudget) -> Option<u64> {
    if clique_rank_violation(thresholds, k).is_some() {
        return None;
    }
    let mut total = 0u64;
    for (rank, v) in sort_by_threshold(thresholds).into_iter().enumerate() {
        let rank = (rank + 1) as u64;
        let t = thresholds[v as usize] as u64;
        if t >= rank {
            total += t - rank + 1;
        }
    }
    Some(total)
}
