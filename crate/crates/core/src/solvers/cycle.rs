//! Cycle solver: cut the ring at a cheapest node, then solve a path.

use crate::feasibility::cycle_infeasibility;
use crate::graph::{Algorithm, Graph, InfluencerBudget, LinkVector, SolveOutcome};
use crate::topology::{is_cycle_graph, ring_order, TopologyError};

use super::tree::solve_tree;

/// Minimum pervading link vector for a cycle.
///
/// With all thresholds 1, or a single threshold-2 node among 1s, one link to
/// the lowest-id threshold-1 node starts a wave that closes the ring. In any
/// other case, take the cheapest node i (lowest id on ties), pay its full
/// threshold, and let the runs of threshold-1 nodes on both sides of it carry
/// the activation to the nearest nodes c and cc with threshold above 1. Those
/// two arcs relieve c and cc by one unit each (by two when c = cc), and what
/// remains between c and cc is a path instance handed to the tree solver.
pub fn solve_cycle(g: &Graph, k: InfluencerBudget) -> Result<SolveOutcome, TopologyError> {
    if !is_cycle_graph(g) {
        return Err(TopologyError::NotACycle);
    }
    let kk = k.get();
    let n = g.node_count();
    let th = g.thresholds();

    let above_one = th.iter().filter(|&&t| t > 1).count();
    if above_one == 0 || (above_one == 1 && th.iter().any(|&t| t == 2)) {
        let seed = g
            .nodes()
            .find(|&v| th[v as usize] == 1)
            .expect("a cycle on >= 3 nodes keeps a threshold-1 node here");
        let mut links = LinkVector::zeros(n);
        links.set(seed, 1);
        return Ok(SolveOutcome::feasible(Algorithm::Cycle, links));
    }

    let i = g
        .nodes()
        .min_by_key(|&v| (th[v as usize], v))
        .expect("cycle is nonempty");
    if th[i as usize] > kk {
        return Ok(SolveOutcome::infeasible(Algorithm::Cycle));
    }

    let ring = ring_order(g);
    let p = ring.iter().position(|&v| v == i).expect("i lies on the ring");
    // Offsets along the ring from i to the first node with threshold above 1
    // in each direction. Both exist: the special cases above are excluded.
    let cw = (1..n)
        .find(|&d| th[ring[(p + d) % n] as usize] > 1)
        .expect("some node has threshold above 1");
    let ccw = (1..n)
        .find(|&d| th[ring[(p + n - d) % n] as usize] > 1)
        .expect("some node has threshold above 1");

    let mut links = LinkVector::zeros(n);
    links.set(i, th[i as usize]);

    // The path runs clockwise from c to cc and never includes i, because
    // p + cw ... p + n - ccw stays strictly between i and its wrap-around.
    let path_nodes: Vec<u32> = (cw..=n - ccw).map(|d| ring[(p + d) % n]).collect();
    let mut path_th: Vec<u32> = path_nodes.iter().map(|&v| th[v as usize]).collect();
    let len = path_th.len();
    if len == 1 {
        // c = cc: the lone non-unit node is relieved once from each side. Its
        // threshold is at least 3 here, so this cannot hit zero.
        path_th[0] -= 2;
    } else {
        path_th[0] -= 1;
        path_th[len - 1] -= 1;
    }

    let path = Graph::path(path_th).expect("thresholds stay positive");
    let sub = solve_tree(&path, k).expect("a path is a forest");
    match sub.links() {
        None => Ok(SolveOutcome::infeasible(Algorithm::Cycle)),
        Some(sub_links) => {
            for (idx, &v) in path_nodes.iter().enumerate() {
                let s = sub_links.get(idx as u32);
                if s > 0 {
                    links.set(v, s);
                }
            }
            Ok(SolveOutcome::feasible(Algorithm::Cycle, links))
        }
    }
}

/// Closed-form optimum for a cycle: max(1, sum of (t(v) - 1)), or None when
/// the instance is infeasible.
pub fn ml_cycle(g: &Graph, k: InfluencerBudget) -> Result<Option<u64>, TopologyError> {
    match cycle_infeasibility(g, k)? {
        Some(_) => Ok(None),
        None => {
            let slack: u64 = g.thresholds().iter().map(|&t| (t - 1) as u64).sum();
            Ok(Some(slack.max(1)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffusion::is_pervading;
    use crate::oracle::brute_min_links;

    fn budget(k: u32) -> InfluencerBudget {
        InfluencerBudget::new(k).unwrap()
    }

    fn assert_valid(g: &Graph, k: u32, outcome: &SolveOutcome) {
        let links = outcome.links().expect("expected a feasible outcome");
        assert!(links.as_slice().iter().all(|&s| s <= k), "budget respected");
        assert!(is_pervading(g, links).unwrap());
    }

    #[test]
    fn unit_cycle_takes_one_link() {
        let g = Graph::ring(vec![1, 1, 1, 1]).unwrap();
        let out = solve_cycle(&g, budget(1)).unwrap();
        assert_eq!(out.total(), Some(1));
        assert_eq!(out.links().unwrap().get(0), 1);
        assert_valid(&g, 1, &out);
        assert_eq!(ml_cycle(&g, budget(1)).unwrap(), Some(1));
    }

    #[test]
    fn single_threshold_two_node_rides_the_wave() {
        let g = Graph::ring(vec![1, 1, 2, 1]).unwrap();
        let out = solve_cycle(&g, budget(1)).unwrap();
        assert_eq!(out.total(), Some(1));
        assert_eq!(out.links().unwrap().get(0), 1);
        assert_valid(&g, 1, &out);
        assert_eq!(ml_cycle(&g, budget(1)).unwrap(), Some(1));
    }

    #[test]
    fn alternating_thresholds_on_a_five_cycle() {
        let g = Graph::ring(vec![1, 2, 1, 2, 1]).unwrap();
        let out = solve_cycle(&g, budget(1)).unwrap();
        assert_eq!(out.total(), Some(2));
        assert_valid(&g, 1, &out);
        let oracle = brute_min_links(&g, budget(1), 10).unwrap();
        assert_eq!(out.total(), oracle.total());
        assert_eq!(ml_cycle(&g, budget(1)).unwrap(), Some(2));
    }

    #[test]
    fn separated_heavy_nodes_stay_feasible() {
        let g = Graph::ring(vec![1, 3, 1, 3]).unwrap();
        let out = solve_cycle(&g, budget(1)).unwrap();
        assert_eq!(out.total(), Some(4));
        assert_valid(&g, 1, &out);
        let oracle = brute_min_links(&g, budget(1), 10).unwrap();
        assert_eq!(out.total(), oracle.total());
        assert_eq!(ml_cycle(&g, budget(1)).unwrap(), Some(4));
    }

    #[test]
    fn infeasible_when_no_node_is_cheap_enough() {
        let g = Graph::ring(vec![3, 2, 3, 2]).unwrap();
        assert!(!solve_cycle(&g, budget(1)).unwrap().is_feasible());
        assert_eq!(ml_cycle(&g, budget(1)).unwrap(), None);
    }

    #[test]
    fn lone_heavy_node_is_relieved_from_both_sides() {
        let g = Graph::ring(vec![1, 4, 1, 1]).unwrap();
        let out = solve_cycle(&g, budget(2)).unwrap();
        assert_eq!(out.total(), Some(3));
        assert_valid(&g, 2, &out);
        let oracle = brute_min_links(&g, budget(2), 10).unwrap();
        assert_eq!(out.total(), oracle.total());
        assert_eq!(ml_cycle(&g, budget(2)).unwrap(), Some(3));
    }

    #[test]
    fn threshold_above_budget_plus_two_is_infeasible() {
        let g = Graph::ring(vec![1, 4, 1, 1]).unwrap();
        assert!(!solve_cycle(&g, budget(1)).unwrap().is_feasible());
        assert_eq!(ml_cycle(&g, budget(1)).unwrap(), None);
    }

    #[test]
    fn rejects_non_cycles() {
        let g = Graph::path(vec![1, 1, 1]).unwrap();
        assert_eq!(solve_cycle(&g, budget(1)), Err(TopologyError::NotACycle));
        assert_eq!(ml_cycle(&g, budget(1)), Err(TopologyError::NotACycle));
    }

    #[test]
    fn totals_match_the_oracle_on_small_cycles() {
        let cases: Vec<Vec<u32>> = vec![
            vec![2, 2, 2],
            vec![1, 2, 2],
            vec![2, 1, 3, 1],
            vec![1, 3, 3, 1],
            vec![2, 2, 1, 2, 2],
            vec![1, 1, 3, 1, 3],
        ];
        for k in [1u32, 2] {
            for thresholds in &cases {
                let g = Graph::ring(thresholds.clone()).unwrap();
                let out = solve_cycle(&g, budget(k)).unwrap();
                let oracle = brute_min_links(&g, budget(k), 10).unwrap();
                assert_eq!(out.total(), oracle.total(), "t={thresholds:?} k={k}");
                assert_eq!(ml_cycle(&g, budget(k)).unwrap(), oracle.total());
                if let Some(links) = out.links() {
                    assert!(is_pervading(&g, links).unwrap());
                    assert!(links.as_slice().iter().all(|&s| s <= k));
                }
            }
        }
    }
}
