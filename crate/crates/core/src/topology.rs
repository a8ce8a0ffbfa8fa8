//! Structure detection used to route instances to the matching exact solver.

use std::fmt;

use crate::graph::Graph;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Topology {
    Tree,
    Cycle,
    Clique,
    General,
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Topology::Tree => "tree",
            Topology::Cycle => "cycle",
            Topology::Clique => "clique",
            Topology::General => "general",
        };
        f.write_str(name)
    }
}

/// A solver was handed a graph whose shape it does not accept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologyError {
    NotAForest,
    NotATree,
    NotACycle,
    NotAClique,
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            TopologyError::NotAForest => "graph is not a forest",
            TopologyError::NotATree => "graph is not a tree",
            TopologyError::NotACycle => "graph is not a cycle",
            TopologyError::NotAClique => "graph is not a clique",
        };
        f.write_str(msg)
    }
}

impl std::error::Error for TopologyError {}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.node_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0u32];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u as usize] {
                seen[u as usize] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}

/// Connected and exactly n-1 edges. The one-node graph counts.
pub fn is_tree(g: &Graph) -> bool {
    g.node_count() >= 1 && g.edge_count() == g.node_count() - 1 && is_connected(g)
}

/// Acyclic; components may be anything tree-shaped, including isolated nodes.
pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + connected_components(g) == g.node_count()
}

/// Connected and 2-regular. Simple graphs force n >= 3 here.
pub fn is_cycle_graph(g: &Graph) -> bool {
    g.node_count() >= 3 && g.nodes().all(|v| g.degree(v) == 2) && is_connected(g)
}

/// Every pair adjacent; with simple-graph invariants the edge count suffices.
pub fn is_complete(g: &Graph) -> bool {
    let n = g.node_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

pub fn connected_components(g: &Graph) -> usize {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut components = 0;
    let mut stack = Vec::new();
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        components += 1;
        seen[start as usize] = true;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &u in g.neighbors(v) {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    stack.push(u);
                }
            }
        }
    }
    components
}

/// Nodes of a cycle graph in ring order, canonicalized to start at node 0 and
/// step first to its lower-id neighbor. Callers must pass a cycle graph.
pub fn ring_order(g: &Graph) -> Vec<u32> {
    debug_assert!(is_cycle_graph(g));
    let n = g.node_count();
    let mut order = Vec::with_capacity(n);
    order.push(0u32);
    let mut prev = 0u32;
    let mut cur = g.neighbors(0)[0];
    while cur != 0 {
        order.push(cur);
        let nb = g.neighbors(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    order
}

/// Classifies in the fixed order tree, cycle, clique, general. Shapes that
/// satisfy several predicates (K3 is also a cycle, K2 also a tree) get the
/// earliest matching label, and every matching solver is exact on them.
pub fn classify(g: &Graph) -> Topology {
    if g.node_count() == 0 {
        return Topology::General;
    }
    if is_tree(g) {
        Topology::Tree
    } else if is_cycle_graph(g) {
        Topology::Cycle
    } else if is_complete(g) {
        Topology::Clique
    } else {
        Topology::General
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn classify_basic_shapes() {
        assert_eq!(classify(&Graph::path(vec![1, 1, 1]).unwrap()), Topology::Tree);
        assert_eq!(classify(&Graph::ring(vec![1; 4]).unwrap()), Topology::Cycle);
        assert_eq!(classify(&Graph::complete(vec![1; 5]).unwrap()), Topology::Clique);
        let g = Graph::new(vec![1; 4], &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(classify(&g), Topology::General);
    }

    #[test]
    fn overlapping_shapes_take_the_earliest_label() {
        // K1 and K2 are trees; K3 is a cycle before it is a clique.
        assert_eq!(classify(&Graph::new(vec![1], &[]).unwrap()), Topology::Tree);
        assert_eq!(classify(&Graph::complete(vec![1, 1]).unwrap()), Topology::Tree);
        assert_eq!(classify(&Graph::complete(vec![1, 1, 1]).unwrap()), Topology::Cycle);
    }

    #[test]
    fn forest_is_not_a_tree_but_is_a_forest() {
        let g = Graph::new(vec![1; 4], &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_tree(&g));
        assert!(is_forest(&g));
        assert_eq!(classify(&g), Topology::General);
        assert_eq!(connected_components(&g), 2);
    }

    #[test]
    fn ring_order_starts_at_zero_toward_lower_neighbor() {
        // Ring constructor wires 0-1-2-3-0, so 0's neighbors are 1 and 3.
        let g = Graph::ring(vec![1; 4]).unwrap();
        assert_eq!(ring_order(&g), vec![0, 1, 2, 3]);

        // Same cycle presented with scrambled edges still canonicalizes.
        let g = Graph::new(vec![1; 4], &[(2, 0), (0, 3), (3, 1), (1, 2)]).unwrap();
        assert_eq!(ring_order(&g), vec![0, 2, 1, 3]);
    }

    #[test]
    fn two_triangles_are_2_regular_but_not_a_cycle() {
        let g = Graph::new(
            vec![1; 6],
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        )
        .unwrap();
        assert!(!is_cycle_graph(&g));
        assert_eq!(classify(&g), Topology::General);
    }
}
