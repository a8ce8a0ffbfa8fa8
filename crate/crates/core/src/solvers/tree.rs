//! Leaf-peeling solver for trees and forests.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::feasibility::tree_infeasibility;
use crate::graph::{Algorithm, Graph, InfluencerBudget, LinkVector, SolveOutcome};
use crate::topology::{is_forest, TopologyError};

/// Minimum pervading link vector for a forest; components are independent.
///
/// Repeatedly takes the lowest-id node of degree at most one. A leaf v with
/// residual threshold above k+1 can never activate. With exactly k+1 it takes
/// k links and waits for its neighbor, contributing nothing back. With t(v)
/// <= k it takes t(v) links, activates in round 0, and sweeps through the
/// whole component C of threshold-1 nodes reachable from it; every node
/// adjacent to C loses one unit of threshold (exactly one, because a second
/// edge into C would close a cycle). An isolated node must pay its whole
/// threshold itself. The resulting total is the minimum over all pervading
/// link vectors, and it does not depend on the peel order.
pub fn solve_tree(g: &Graph, k: InfluencerBudget) -> Result<SolveOutcome, TopologyError> {
    if !is_forest(g) {
        return Err(TopologyError::NotAForest);
    }
    let k = k.get();
    let n = g.node_count();
    let mut th: Vec<u32> = g.thresholds().to_vec();
    let mut deg: Vec<usize> = g.nodes().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut links = LinkVector::zeros(n);

    // Nodes become ready when their live degree drops to one (leaf) or zero
    // (isolated). Entries can go stale; dead nodes are skipped on pop.
    let mut ready: BinaryHeap<Reverse<u32>> = g
        .nodes()
        .filter(|&v| deg[v as usize] <= 1)
        .map(Reverse)
        .collect();

    while let Some(Reverse(v)) = ready.pop() {
        let vi = v as usize;
        if !alive[vi] {
            continue;
        }
        let t = th[vi];

        if deg[vi] == 0 {
            if t > k {
                return Ok(SolveOutcome::infeasible(Algorithm::Tree));
            }
            links.set(v, t);
            alive[vi] = false;
            continue;
        }

        if t as u64 > k as u64 + 1 {
            return Ok(SolveOutcome::infeasible(Algorithm::Tree));
        }

        if t as u64 == k as u64 + 1 {
            // The leaf keeps a residue of one for its neighbor to cover, so
            // the neighbor's threshold stays as it is.
            links.set(v, k);
            alive[vi] = false;
            let w = *g
                .neighbors(v)
                .iter()
                .find(|&&u| alive[u as usize])
                .expect("a live leaf has exactly one live neighbor");
            deg[w as usize] -= 1;
            if deg[w as usize] <= 1 {
                ready.push(Reverse(w));
            }
            continue;
        }

        // t <= k. Collect the component of v within {v} plus the live
        // threshold-1 nodes; all of it activates once v is paid for.
        links.set(v, t);
        alive[vi] = false;
        let mut component = vec![v];
        let mut stack = vec![v];
        while let Some(c) = stack.pop() {
            for &u in g.neighbors(c) {
                let ui = u as usize;
                if alive[ui] && th[ui] == 1 {
                    alive[ui] = false;
                    component.push(u);
                    stack.push(u);
                }
            }
        }
        for &c in &component {
            for &u in g.neighbors(c) {
                let ui = u as usize;
                if !alive[ui] {
                    continue;
                }
                // A live neighbor of the component has threshold at least 2,
                // otherwise it would have been swept into the component.
                debug_assert!(th[ui] >= 2);
                th[ui] -= 1;
                deg[ui] -= 1;
                if deg[ui] <= 1 {
                    ready.push(Reverse(u));
                }
            }
        }
    }

    debug_assert!(alive.iter().all(|&a| !a), "peeling must consume the forest");
    Ok(SolveOutcome::feasible(Algorithm::Tree, links))
}

/// Closed-form optimum for a single tree: 1 + sum of (t(v) - 1), or None
/// when the instance is infeasible.
pub fn ml_tree(g: &Graph, k: InfluencerBudget) -> Result<Option<u64>, TopologyError> {
    match tree_infeasibility(g, k)? {
        Some(_) => Ok(None),
        None => {
            let slack: u64 = g.thresholds().iter().map(|&t| (t - 1) as u64).sum();
            Ok(Some(1 + slack))
        }
    }
}
