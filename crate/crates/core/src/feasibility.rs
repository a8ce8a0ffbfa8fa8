//! Feasibility predicates: can any assignment of at most k links per node
//! activate the whole graph?
//!
//! The generic test simulates with the saturating vector s(v) = min(t(v), k),
//! which pervades iff anything does. Trees, cycles and cliques additionally
//! have structural characterizations that run without simulation and can name
//! the condition that failed.

use std::fmt;

use crate::diffusion::is_pervading;
use crate::graph::{Graph, InfluencerBudget, LinkVector};
use crate::topology::{is_complete, is_cycle_graph, is_tree, ring_order, TopologyError};

/// Why an instance is infeasible, in terms of the condition that failed.
/// Node ids are 0-based like everywhere else in the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfeasibleReason {
    /// Some node needs more links plus neighbors than it can ever get:
    /// t(v) > degree(v) + k.
    DegreeBound { node: u32, threshold: u32, degree: usize },
    /// Every threshold exceeds k, so no node can activate in round 0.
    NoSeedableNode,
    /// While peeling the tree, a leaf was left needing more than k+1 links.
    TreeLeafThreshold { node: u32, residual: u32 },
    /// The final node of the peel still needs more than k links.
    TreeLastNode { node: u32, residual: u32 },
    /// Cycles need at least one node with threshold at most k.
    CycleNoLowThreshold,
    /// Cycles cannot carry any threshold above k+2.
    CycleThresholdTooHigh { node: u32, threshold: u32 },
    /// Two cyclically consecutive threshold-(k+2) nodes have no node of
    /// threshold at most k between them.
    CycleGapWithoutLowThreshold { first: u32, second: u32 },
    /// With thresholds sorted ascending, rank i (1-based) must satisfy
    /// t(i) <= i + k - 1.
    CliqueRank { node: u32, rank: usize, threshold: u32 },
}

impl fmt::Display for InfeasibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfeasibleReason::DegreeBound { node, threshold, degree } => write!(
                f,
                "node {node} has threshold {threshold} above degree {degree} plus budget"
            ),
            InfeasibleReason::NoSeedableNode => {
                write!(f, "every threshold exceeds the budget, so round 0 is empty")
            }
            InfeasibleReason::TreeLeafThreshold { node, residual } => write!(
                f,
                "leaf {node} still needs {residual} links, more than budget + 1"
            ),
            InfeasibleReason::TreeLastNode { node, residual } => write!(
                f,
                "last remaining node {node} still needs {residual} links, more than the budget"
            ),
            InfeasibleReason::CycleNoLowThreshold => {
                write!(f, "no node on the cycle has threshold at most the budget")
            }
            InfeasibleReason::CycleThresholdTooHigh { node, threshold } => write!(
                f,
                "node {node} has threshold {threshold}, above budget + 2"
            ),
            InfeasibleReason::CycleGapWithoutLowThreshold { first, second } => write!(
                f,
                "consecutive budget+2 nodes {first} and {second} have no low-threshold node between them"
            ),
            InfeasibleReason::CliqueRank { node, rank, threshold } => write!(
                f,
                "sorted rank {rank} (node {node}) has threshold {threshold} above rank + budget - 1"
            ),
        }
    }
}

/// Simulation-based feasibility test for arbitrary graphs: saturate every
/// node with min(t(v), k) links and check the diffusion pervades. Works
/// because extra links on one node never help another.
pub fn feasible_generic(g: &Graph, k: InfluencerBudget) -> bool {
    let k = k.get();
    let saturated = LinkVector::new(
        g.thresholds().iter().map(|&t| t.min(k)).collect(),
    );
    is_pervading(g, &saturated).expect("vector built to match the graph")
}

/// First violation of the necessary conditions, if any: a node whose
/// threshold exceeds degree + k, or no node with threshold at most k.
pub fn degree_bound_witness(g: &Graph, k: InfluencerBudget) -> Option<InfeasibleReason> {
    let k = k.get();
    for v in g.nodes() {
        let t = g.threshold(v);
        if t as u64 > g.degree(v) as u64 + k as u64 {
            return Some(InfeasibleReason::DegreeBound {
                node: v,
                threshold: t,
                degree: g.degree(v),
            });
        }
    }
    if g.node_count() > 0 && g.thresholds().iter().all(|&t| t > k) {
        return Some(InfeasibleReason::NoSeedableNode);
    }
    None
}

/// Necessary-condition screen. True means certainly infeasible; false means
/// nothing is decided yet.
pub fn violates_degree_bound(g: &Graph, k: InfluencerBudget) -> bool {
    degree_bound_witness(g, k).is_some()
}

/// Leaf-peeling feasibility for trees.
///
/// Peel any leaf v: with t(v) <= k the leaf pays for itself and relieves its
/// neighbor by one; with t(v) = k + 1 it can be dropped without helping the
/// neighbor; anything higher is hopeless. The outcome does not depend on the
/// peel order, so the lowest-id leaf is always taken. Thresholds may drop to
/// zero or below during the recursion; such nodes are simply free.
pub fn tree_infeasibility(
    g: &Graph,
    k: InfluencerBudget,
) -> Result<Option<InfeasibleReason>, TopologyError> {
    if !is_tree(g) {
        return Err(TopologyError::NotATree);
    }
    let k = k.get() as i64;
    let n = g.node_count();
    let mut th: Vec<i64> = g.thresholds().iter().map(|&t| t as i64).collect();
    let mut deg: Vec<usize> = g.nodes().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];

    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let mut leaves: BinaryHeap<Reverse<u32>> = g
        .nodes()
        .filter(|&v| deg[v as usize] == 1)
        .map(Reverse)
        .collect();

    let mut remaining = n;
    while remaining > 1 {
        let v = loop {
            let Reverse(v) = leaves.pop().expect("connected tree keeps having leaves");
            if alive[v as usize] {
                break v;
            }
        };
        debug_assert_eq!(deg[v as usize], 1);
        if th[v as usize] > k + 1 {
            return Ok(Some(InfeasibleReason::TreeLeafThreshold {
                node: v,
                residual: th[v as usize] as u32,
            }));
        }
        let w = *g
            .neighbors(v)
            .iter()
            .find(|&&u| alive[u as usize])
            .expect("a live leaf has a live neighbor");
        if th[v as usize] <= k {
            th[w as usize] -= 1;
        }
        alive[v as usize] = false;
        remaining -= 1;
        deg[w as usize] -= 1;
        if deg[w as usize] == 1 {
            leaves.push(Reverse(w));
        }
    }

    let last = g.nodes().find(|&v| alive[v as usize]).expect("one node left");
    if th[last as usize] > k {
        return Ok(Some(InfeasibleReason::TreeLastNode {
            node: last,
            residual: th[last as usize] as u32,
        }));
    }
    Ok(None)
}

pub fn feasible_tree(g: &Graph, k: InfluencerBudget) -> Result<bool, TopologyError> {
    tree_infeasibility(g, k).map(|r| r.is_none())
}

/// Cycle feasibility: some threshold at most k, none above k+2, and a
/// low-threshold node between any two cyclically consecutive (k+2)-nodes.
pub fn cycle_infeasibility(
    g: &Graph,
    k: InfluencerBudget,
) -> Result<Option<InfeasibleReason>, TopologyError> {
    if !is_cycle_graph(g) {
        return Err(TopologyError::NotACycle);
    }
    let k = k.get();
    if let Some(v) = g.nodes().find(|&v| g.threshold(v) as u64 > k as u64 + 2) {
        return Ok(Some(InfeasibleReason::CycleThresholdTooHigh {
            node: v,
            threshold: g.threshold(v),
        }));
    }

    // The gap condition is reported before the plain min-threshold condition:
    // when both fail, the gap names the actual local obstruction.
    let order = ring_order(g);
    let n = order.len();
    let high: Vec<usize> = (0..n)
        .filter(|&i| g.threshold(order[i]) == k + 2)
        .collect();
    for (idx, &a) in high.iter().enumerate() {
        let b = high[(idx + 1) % high.len()];
        // Walk the open interval clockwise from a to b. When a == b (single
        // high node) this visits every other position once.
        let mut pos = (a + 1) % n;
        let mut found = false;
        while pos != b {
            if g.threshold(order[pos]) <= k {
                found = true;
                break;
            }
            pos = (pos + 1) % n;
        }
        if !found {
            return Ok(Some(InfeasibleReason::CycleGapWithoutLowThreshold {
                first: order[a],
                second: order[b],
            }));
        }
    }
    if g.thresholds().iter().all(|&t| t > k) {
        return Ok(Some(InfeasibleReason::CycleNoLowThreshold));
    }
    Ok(None)
}

pub fn feasible_cycle(g: &Graph, k: InfluencerBudget) -> Result<bool, TopologyError> {
    cycle_infeasibility(g, k).map(|r| r.is_none())
}

/// Clique feasibility on the threshold multiset alone: sort ascending and
/// require t(i) <= i + k - 1 at every 1-based rank i.
pub fn clique_infeasibility(
    g: &Graph,
    k: InfluencerBudget,
) -> Result<Option<InfeasibleReason>, TopologyError> {
    if !is_complete(g) {
        return Err(TopologyError::NotAClique);
    }
    Ok(clique_rank_violation(g.thresholds(), k))
}

pub fn feasible_clique(g: &Graph, k: InfluencerBudget) -> Result<bool, TopologyError> {
    clique_infeasibility(g, k).map(|r| r.is_none())
}

/// Rank scan shared with the clique solver. Returns the first violating rank
/// in the (threshold, id)-sorted order, if any.
pub(crate) fn clique_rank_violation(
    thresholds: &[u32],
    k: InfluencerBudget,
) -> Option<InfeasibleReason> {
    let k = k.get();
    let n = thresholds.len();
    for (v, &t) in thresholds.iter().enumerate() {
        // Degree in a clique is n - 1; anything above n - 1 + k can never
        // activate and also caps the counting-sort domain below.
        if t as u64 > (n - 1) as u64 + k as u64 {
            return Some(InfeasibleReason::DegreeBound {
                node: v as u32,
                threshold: t,
                degree: n - 1,
            });
        }
    }
    for (rank, node) in sort_by_threshold(thresholds).into_iter().enumerate() {
        let rank = rank + 1;
        let t = thresholds[node as usize];
        if t as u64 > rank as u64 + k as u64 - 1 {
            return Some(InfeasibleReason::CliqueRank { node, rank, threshold: t });
        }
    }
    None
}

/// Counting sort of node ids by (threshold, id) ascending. Callers guarantee
/// thresholds are bounded by n + k, keeping the bucket array linear.
pub(crate) fn sort_by_threshold(thresholds: &[u32]) -> Vec<u32> {
    let max = thresholds.iter().copied().max().unwrap_or(0) as usize;
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); max + 1];
    for (v, &t) in thresholds.iter().enumerate() {
        buckets[t as usize].push(v as u32);
    }
    buckets.into_iter().flatten().collect()
}
