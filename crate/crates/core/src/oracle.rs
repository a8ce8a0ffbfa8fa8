//! Exhaustive reference solvers. Exponential and capped by node count; their
//! job is to certify the fast solvers on small instances, not to be fast.

use std::fmt;

use crate::diffusion::is_pervading;
use crate::graph::{Algorithm, Graph, InfluencerBudget, LinkVector, SolveOutcome};

/// Default node cap for [`brute_min_links`].
pub const MIN_LINKS_NODE_CAP: usize = 10;
/// Default node cap for [`brute_min_links_all_optima`].
pub const ALL_OPTIMA_NODE_CAP: usize = 8;
/// Default node cap for [`brute_target_set`].
pub const TARGET_SET_NODE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphTooLarge {
    pub nodes: usize,
    pub cap: usize,
}

impl fmt::Display for GraphTooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph has {} nodes, above the brute-force cap of {}",
            self.nodes, self.cap
        )
    }
}

impl std::error::Error for GraphTooLarge {}

/// Optimal link vector by exhaustive search.
///
/// Candidate vectors satisfy s(v) <= min(t(v), k): links beyond the threshold
/// are wasted, so every minimal solution lives in that box. Totals are tried
/// in ascending order and vectors of one total in lexicographic order, so the
/// returned optimum is deterministic. Vectors leaving round 0 empty are
/// skipped without simulating.
pub fn brute_min_links(
    g: &Graph,
    k: InfluencerBudget,
    node_cap: usize,
) -> Result<SolveOutcome, GraphTooLarge> {
    let n = g.node_count();
    if n > node_cap {
        return Err(GraphTooLarge { nodes: n, cap: node_cap });
    }
    if n == 0 {
        return Ok(SolveOutcome::feasible(Algorithm::BruteForce, LinkVector::zeros(0)));
    }
    let caps = link_caps(g, k);
    let budget_limit: u64 = caps.iter().map(|&c| c as u64).sum();
    for total in 0..=budget_limit {
        let mut hit = None;
        enumerate_vectors(g, &caps, total, &mut |links| {
            hit = Some(LinkVector::new(links.to_vec()));
            true
        });
        if let Some(links) = hit {
            return Ok(SolveOutcome::feasible(Algorithm::BruteForce, links));
        }
    }
    Ok(SolveOutcome::infeasible(Algorithm::BruteForce))
}

/// Every optimal link vector, in lexicographic order. Empty when the instance
/// is infeasible.
pub fn brute_min_links_all_optima(
    g: &Graph,
    k: InfluencerBudget,
    node_cap: usize,
) -> Result<Vec<LinkVector>, GraphTooLarge> {
    let n = g.node_count();
    if n > node_cap {
        return Err(GraphTooLarge { nodes: n, cap: node_cap });
    }
    if n == 0 {
        return Ok(vec![LinkVector::zeros(0)]);
    }
    let caps = link_caps(g, k);
    let budget_limit: u64 = caps.iter().map(|&c| c as u64).sum();
    for total in 0..=budget_limit {
        let mut found = Vec::new();
        enumerate_vectors(g, &caps, total, &mut |links| {
            found.push(LinkVector::new(links.to_vec()));
            false
        });
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Ok(Vec::new())
}

/// Minimum size of a seed set that activates the whole graph when its members
/// start active outright, thresholds notwithstanding. Always defined: seeding
/// every node works. Seeding a node is the same as giving it t(v) links, so
/// the diffusion engine is reused as-is.
pub fn brute_target_set(g: &Graph, node_cap: usize) -> Result<usize, GraphTooLarge> {
    let n = g.node_count();
    if n > node_cap {
        return Err(GraphTooLarge { nodes: n, cap: node_cap });
    }
    for size in 0..=n {
        for mask in 0u64..1u64 << n {
            if mask.count_ones() as usize != size {
                continue;
            }
            let mut links = LinkVector::zeros(n);
            for v in 0..n as u32 {
                if mask >> v & 1 == 1 {
                    links.set(v, g.threshold(v));
                }
            }
            if is_pervading(g, &links).expect("built to length") {
                return Ok(size);
            }
        }
    }
    unreachable!("seeding every node always pervades");
}

fn link_caps(g: &Graph, k: InfluencerBudget) -> Vec<u32> {
    g.thresholds().iter().map(|&t| t.min(k.get())).collect()
}

/// Calls `visit` with every vector under `caps` summing to exactly `total`,
/// in lexicographic order, skipping vectors that cannot seed round 0. A
/// `true` return from `visit` stops the walk early.
fn enumerate_vectors(
    g: &Graph,
    caps: &[u32],
    total: u64,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) {
    let n = caps.len();
    // suffix[i] = sum of caps[i..]; bounds how much the tail can absorb.
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + caps[i] as u64;
    }
    let mut cur = vec![0u32; n];
    descend(g, caps, &suffix, &mut cur, 0, total, visit);
}

fn descend(
    g: &Graph,
    caps: &[u32],
    suffix: &[u64],
    cur: &mut Vec<u32>,
    i: usize,
    remaining: u64,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    let n = caps.len();
    if i == n {
        debug_assert_eq!(remaining, 0);
        let seeds_round_zero = cur
            .iter()
            .zip(g.thresholds())
            .any(|(&s, &t)| s >= t);
        if !seeds_round_zero {
            return false;
        }
        let links = LinkVector::new(cur.clone());
        if is_pervading(g, &links).expect("lengths match") {
            return visit(cur);
        }
        return false;
    }
    let lo = remaining.saturating_sub(suffix[i + 1]);
    let hi = (caps[i] as u64).min(remaining);
    if lo > hi {
        return false;
    }
    for x in lo..=hi {
        cur[i] = x as u32;
        if descend(g, caps, suffix, cur, i + 1, remaining - x, visit) {
            return true;
        }
    }
    cur[i] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn budget(k: u32) -> InfluencerBudget {
        InfluencerBudget::new(k).unwrap()
    }

    #[test]
    fn two_node_path_needs_one_link() {
        let g = Graph::path(vec![1, 1]).unwrap();
        let out = brute_min_links(&g, budget(1), MIN_LINKS_NODE_CAP).unwrap();
        assert_eq!(out.total(), Some(1));
    }

    #[test]
    fn heavy_pair_in_complete_graph_needs_two() {
        let g = Graph::complete(vec![1, 1, 1, 1, 1, 6, 6]).unwrap();
        let out = brute_min_links(&g, budget(6), MIN_LINKS_NODE_CAP).unwrap();
        assert_eq!(out.total(), Some(2));
    }

    #[test]
    fn isolated_node_above_budget_is_infeasible() {
        let g = Graph::new(vec![2], &[]).unwrap();
        let out = brute_min_links(&g, budget(1), MIN_LINKS_NODE_CAP).unwrap();
        assert!(!out.is_feasible());
        assert_eq!(
            brute_min_links_all_optima(&g, budget(1), ALL_OPTIMA_NODE_CAP).unwrap(),
            vec![]
        );
    }

    #[test]
    fn optimum_is_reported_in_lexicographic_order() {
        let g = Graph::path(vec![1, 1]).unwrap();
        let out = brute_min_links(&g, budget(1), MIN_LINKS_NODE_CAP).unwrap();
        assert_eq!(out.links().unwrap().as_slice(), &[0, 1]);
    }

    #[test]
    fn all_optima_on_unit_path() {
        let g = Graph::path(vec![1, 1, 1]).unwrap();
        let optima = brute_min_links_all_optima(&g, budget(1), ALL_OPTIMA_NODE_CAP).unwrap();
        let expect: Vec<LinkVector> = vec![
            LinkVector::new(vec![0, 0, 1]),
            LinkVector::new(vec![0, 1, 0]),
            LinkVector::new(vec![1, 0, 0]),
        ];
        assert_eq!(optima, expect);
    }

    #[test]
    fn all_optima_on_unit_ring() {
        let g = Graph::ring(vec![1, 1, 1, 1]).unwrap();
        let optima = brute_min_links_all_optima(&g, budget(1), ALL_OPTIMA_NODE_CAP).unwrap();
        assert_eq!(optima.len(), 4);
        assert!(optima.iter().all(|s| s.total() == 1));
    }

    #[test]
    fn target_set_examples() {
        // Star whose center dominates: one seed at the center suffices.
        let star = Graph::star(vec![4, 1, 1, 1]).unwrap();
        assert_eq!(brute_target_set(&star, TARGET_SET_NODE_CAP).unwrap(), 1);

        let pair = Graph::path(vec![1, 1]).unwrap();
        assert_eq!(brute_target_set(&pair, TARGET_SET_NODE_CAP).unwrap(), 1);

        // Mutual dependence: neither node can pull the other alone.
        let stuck = Graph::path(vec![2, 2]).unwrap();
        assert_eq!(brute_target_set(&stuck, TARGET_SET_NODE_CAP).unwrap(), 2);
    }

    #[test]
    fn node_caps_are_enforced() {
        let g = Graph::path(vec![1; 11]).unwrap();
        assert_eq!(
            brute_min_links(&g, budget(1), MIN_LINKS_NODE_CAP),
            Err(GraphTooLarge { nodes: 11, cap: 10 })
        );
        assert!(brute_min_links(&g, budget(1), 11).is_ok());
    }
}
