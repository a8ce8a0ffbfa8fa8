//! Deterministic threshold diffusion with external influencer links.
//!
//! A node activates in round 0 when its link count meets its threshold, and
//! in round j >= 1 when its active neighbors at round j-1 cover the part of
//! the threshold the links do not. Activation is monotone, so the process
//! reaches a fixpoint after at most n rounds.

use std::fmt;

use crate::graph::{Graph, LinkVector};

/// The link vector must assign a count to every node of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthMismatch {
    pub expected: usize,
    pub found: usize,
}

impl fmt::Display for LengthMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "link vector has {} entries but the graph has {} nodes",
            self.found, self.expected
        )
    }
}

impl std::error::Error for LengthMismatch {}

/// Round-by-round record of a diffusion run.
///
/// Internally stores only the nodes that became active in each round; the
/// cumulative active set for any round is reconstructed on demand. This keeps
/// the trace O(n) even when the process needs many rounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffusionTrace {
    newly_active: Vec<Vec<u32>>,
    node_count: usize,
    active_count: usize,
}

impl DiffusionTrace {
    /// Number of recorded rounds. The last recorded round is the fixpoint:
    /// every later round would be identical.
    pub fn rounds(&self) -> usize {
        self.newly_active.len()
    }

    /// Nodes first activated in round `j`, ascending.
    pub fn newly_active(&self, j: usize) -> &[u32] {
        &self.newly_active[j]
    }

    /// Active set after round `j`, ascending. Rounds past the fixpoint return
    /// the final set.
    pub fn active_at(&self, j: usize) -> Vec<u32> {
        let last = j.min(self.newly_active.len().saturating_sub(1));
        let mut out: Vec<u32> = self.newly_active[..=last].concat();
        out.sort_unstable();
        out
    }

    /// The fixpoint active set, ascending.
    pub fn final_active(&self) -> Vec<u32> {
        self.active_at(self.rounds().saturating_sub(1))
    }

    pub fn active_node_count(&self) -> usize {
        self.active_count
    }

    /// True when every node of the graph ends up active.
    pub fn fully_activated(&self) -> bool {
        self.active_count == self.node_count
    }

    /// Index of the first round whose active set equals the fixpoint.
    pub fn fixpoint_round(&self) -> usize {
        self.rounds().saturating_sub(1)
    }
}

/// Runs the diffusion process to its fixpoint and records the rounds.
///
/// Links beyond a node's threshold change nothing: only min(s(v), t(v))
/// matters. The scan is O(n + m): every node activates at most once and each
/// edge is looked at only from its activating endpoint.
pub fn simulate(g: &Graph, links: &LinkVector) -> Result<DiffusionTrace, LengthMismatch> {
    let n = g.node_count();
    if links.len() != n {
        return Err(LengthMismatch { expected: n, found: links.len() });
    }

    // Residual threshold once links are applied; 0 means active in round 0.
    let mut residual: Vec<u32> = (0..n as u32)
        .map(|v| g.threshold(v).saturating_sub(links.get(v)))
        .collect();
    let mut active = vec![false; n];

    let mut frontier: Vec<u32> = Vec::new();
    for v in 0..n as u32 {
        if residual[v as usize] == 0 {
            active[v as usize] = true;
            frontier.push(v);
        }
    }
    let mut active_count = frontier.len();
    let mut newly_active = vec![frontier.clone()];

    while !frontier.is_empty() && active_count < n {
        let mut next: Vec<u32> = Vec::new();
        for &v in &frontier {
            for &u in g.neighbors(v) {
                let ui = u as usize;
                if active[ui] {
                    continue;
                }
                // residual[u] >= 1 here, so the decrement cannot underflow.
                residual[ui] -= 1;
                if residual[ui] == 0 {
                    active[ui] = true;
                    next.push(u);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        active_count += next.len();
        newly_active.push(next.clone());
        frontier = next;
    }

    Ok(DiffusionTrace { newly_active, node_count: n, active_count })
}

/// True when the link vector activates the whole graph.
pub fn is_pervading(g: &Graph, links: &LinkVector) -> Result<bool, LengthMismatch> {
    simulate(g, links).map(|trace| trace.fully_activated())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k7_example() -> Graph {
        Graph::complete(vec![1, 1, 1, 1, 1, 6, 6]).unwrap()
    }

    #[test]
    fn complete_graph_rounds_match_hand_computation() {
        let g = k7_example();
        let mut s = LinkVector::zeros(7);
        s.set(4, 1);
        s.set(5, 1);
        let trace = simulate(&g, &s).unwrap();
        assert_eq!(trace.active_at(0), vec![4]);
        assert_eq!(trace.active_at(1), vec![0, 1, 2, 3, 4]);
        assert_eq!(trace.active_at(2), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(trace.active_at(3), vec![0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(trace.rounds(), 4);
        assert!(trace.fully_activated());
    }

    #[test]
    fn no_links_means_no_activation() {
        let g = k7_example();
        let trace = simulate(&g, &LinkVector::zeros(7)).unwrap();
        assert_eq!(trace.rounds(), 1);
        assert!(trace.active_at(0).is_empty());
        assert!(!trace.fully_activated());
    }

    #[test]
    fn links_beyond_threshold_activate_in_round_zero() {
        let g = Graph::new(vec![2], &[]).unwrap();
        let trace = simulate(&g, &LinkVector::new(vec![2])).unwrap();
        assert_eq!(trace.active_at(0), vec![0]);
        assert!(trace.fully_activated());
        assert_eq!(trace.rounds(), 1);
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let g = k7_example();
        let err = simulate(&g, &LinkVector::zeros(3)).unwrap_err();
        assert_eq!(err, LengthMismatch { expected: 7, found: 3 });
    }

    #[test]
    fn partial_activation_stops_at_fixpoint() {
        // Path 0-1-2 with a hard middle node: only node 0 activates.
        let g = Graph::path(vec![1, 3, 1]).unwrap();
        let trace = simulate(&g, &LinkVector::new(vec![1, 0, 0])).unwrap();
        assert_eq!(trace.final_active(), vec![0]);
        assert!(!trace.fully_activated());
    }

    #[test]
    fn star_center_activates_after_all_leaves() {
        // Star with 3 leaves, center threshold 4: links on everything.
        let g = Graph::star(vec![4, 1, 1, 1]).unwrap();
        let s = LinkVector::new(vec![1, 1, 1, 1]);
        let trace = simulate(&g, &s).unwrap();
        assert_eq!(trace.active_at(0), vec![1, 2, 3]);
        assert!(trace.fully_activated());
        // Center had residual 3, which the three leaves cover in round 1.
        assert_eq!(trace.newly_active(1), &[0]);
    }

    #[test]
    fn rounds_are_monotone_and_fixpoint_within_n() {
        let g = Graph::path(vec![1, 1, 1, 1, 1]).unwrap();
        let s = LinkVector::new(vec![1, 0, 0, 0, 0]);
        let trace = simulate(&g, &s).unwrap();
        assert_eq!(trace.rounds(), 5);
        for j in 1..trace.rounds() {
            let prev = trace.active_at(j - 1);
            let cur = trace.active_at(j);
            assert!(prev.iter().all(|v| cur.contains(v)));
            assert!(cur.len() > prev.len());
        }
        assert!(trace.rounds() <= g.node_count());
    }
}
