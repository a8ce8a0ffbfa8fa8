//! Reduction from target set selection to the link-placement problem.
//!
//! Target set selection asks for the fewest nodes to seed directly so that
//! diffusion reaches everyone. For thresholds bounded by 2 this embeds into
//! our problem with budget k = 1: seeding a node coincides with paying
//! t(v) links for it once every threshold is split across a small gadget.
//!
//! Each original node v becomes a block of t(v) + 2 nodes: an entry node v'
//! keeping threshold t(v), a collector v'' with threshold 1, and t(v)
//! relay nodes with threshold 1, each wired v' - relay - v''. Original
//! edges survive between entry nodes. With one link per node available,
//! activating v'' for free costs exactly t(v) links on the relays, the same
//! price target set selection pays, and entry nodes still diffuse through
//! the original edges.

use std::fmt;

use crate::graph::{Graph, InfluencerBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetError {
    /// The reduction is only defined for thresholds 1 and 2.
    ThresholdAboveTwo { node: u32, threshold: u32 },
}

impl fmt::Display for GadgetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetError::ThresholdAboveTwo { node, threshold } => write!(
                f,
                "node {} has threshold {threshold}, the reduction needs thresholds of 1 or 2",
                node + 1
            ),
        }
    }
}

impl std::error::Error for GadgetError {}

/// First node id of each original node's block in the reduced graph.
///
/// Node v's block occupies ids `start(v) .. start(v) + t(v) + 2`, laid out
/// as entry, collector, then relays.
pub fn gadget_block_starts(g: &Graph) -> Vec<u32> {
    let mut starts = Vec::with_capacity(g.node_count());
    let mut next = 0u32;
    for v in 0..g.node_count() {
        starts.push(next);
        next += g.threshold(v as u32) + 2;
    }
    starts
}

/// Builds the budget-1 instance whose minimum link count equals the
/// smallest target set of `g`. Requires every threshold to be 1 or 2.
pub fn gadget_reduce(g: &Graph) -> Result<(Graph, InfluencerBudget), GadgetError> {
    for v in 0..g.node_count() as u32 {
        let t = g.threshold(v);
        if t > 2 {
            return Err(GadgetError::ThresholdAboveTwo { node: v, threshold: t });
        }
    }

    let starts = gadget_block_starts(g);
    let total_nodes: usize = g.thresholds().iter().map(|&t| t as usize + 2).sum();
    let mut thresholds = Vec::with_capacity(total_nodes);
    let mut edges = Vec::new();
    for v in 0..g.node_count() as u32 {
        let t = g.threshold(v);
        let entry = starts[v as usize];
        let collector = entry + 1;
        thresholds.push(t);
        thresholds.push(1);
        for i in 0..t {
            let relay = collector + 1 + i;
            thresholds.push(1);
            edges.push((entry, relay));
            edges.push((relay, collector));
        }
    }
    for (u, v) in g.edges() {
        edges.push((starts[u as usize], starts[v as usize]));
    }

    let reduced = Graph::new(thresholds, &edges).expect("gadget blocks form a valid simple graph");
    Ok((reduced, InfluencerBudget::new(1).expect("1 is a positive budget")))
}
