//! Core graph representation and the shared solver result types.

use std::fmt;

/// Undirected simple graph with a positive activation threshold per node.
///
/// Nodes are dense 0-based ids; file formats use 1-based ids and translate at
/// the I/O boundary. Adjacency lists are kept sorted so every traversal order
/// in the crate is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
    thresholds: Vec<u32>,
    edge_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Thresholds must be at least 1; a node that activates for free is not
    /// part of the model.
    ThresholdNotPositive { node: u32 },
    EndpointOutOfRange { edge: (u32, u32), nodes: usize },
    SelfLoop { node: u32 },
    DuplicateEdge { edge: (u32, u32) },
    BudgetNotPositive,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::ThresholdNotPositive { node } => {
                write!(f, "node {node} has threshold 0; thresholds must be positive")
            }
            GraphError::EndpointOutOfRange { edge: (u, v), nodes } => {
                write!(f, "edge ({u}, {v}) references a node outside 0..{nodes}")
            }
            GraphError::SelfLoop { node } => write!(f, "self-loop at node {node}"),
            GraphError::DuplicateEdge { edge: (u, v) } => {
                write!(f, "duplicate edge ({u}, {v})")
            }
            GraphError::BudgetNotPositive => write!(f, "influencer budget must be at least 1"),
        }
    }
}

impl std::error::Error for GraphError {}

impl Graph {
    /// Builds a graph from per-node thresholds and an edge list. The node
    /// count is `thresholds.len()`; edges are validated against it.
    pub fn new(thresholds: Vec<u32>, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let n = thresholds.len();
        for (v, &t) in thresholds.iter().enumerate() {
            if t == 0 {
                return Err(GraphError::ThresholdNotPositive { node: v as u32 });
            }
        }
        let mut normalized: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(GraphError::EndpointOutOfRange { edge: (u, v), nodes: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { node: u });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { edge: w[0] });
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        // Lists come out sorted except for the low endpoints appended last.
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency, thresholds, edge_count: normalized.len() })
    }

    /// Path 0 - 1 - ... - (n-1).
    pub fn path(thresholds: Vec<u32>) -> Result<Self, GraphError> {
        let n = thresholds.len() as u32;
        let edges: Vec<(u32, u32)> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(thresholds, &edges)
    }

    /// Cycle 0 - 1 - ... - (n-1) - 0. Needs n >= 3 to stay simple.
    pub fn ring(thresholds: Vec<u32>) -> Result<Self, GraphError> {
        let n = thresholds.len() as u32;
        let mut edges: Vec<(u32, u32)> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 1 {
            edges.push((n - 1, 0));
        }
        Graph::new(thresholds, &edges)
    }

    /// Complete graph on `thresholds.len()` nodes.
    pub fn complete(thresholds: Vec<u32>) -> Result<Self, GraphError> {
        let n = thresholds.len() as u32;
        let mut edges = Vec::with_capacity((n as usize * n.saturating_sub(1) as usize) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(thresholds, &edges)
    }

    /// Star with node 0 as the center and nodes 1.. as leaves.
    pub fn star(thresholds: Vec<u32>) -> Result<Self, GraphError> {
        let n = thresholds.len() as u32;
        let edges: Vec<(u32, u32)> = (1..n).map(|v| (0, v)).collect();
        Graph::new(thresholds, &edges)
    }

    pub fn node_count(&self) -> usize {
        self.thresholds.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn threshold(&self, v: u32) -> u32 {
        self.thresholds[v as usize]
    }

    pub fn thresholds(&self) -> &[u32] {
        &self.thresholds
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn nodes(&self) -> impl Iterator<Item = u32> {
        0..self.node_count() as u32
    }

    /// Largest threshold in the graph, or 0 when the graph is empty.
    pub fn max_threshold(&self) -> u32 {
        self.thresholds.iter().copied().max().unwrap_or(0)
    }

    /// Edge list normalized to (low, high) pairs in ascending order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in self.nodes() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, t={:?})",
            self.node_count(),
            self.edge_count,
            self.thresholds
        )
    }
}

/// Number of external influencers available. Always at least 1; any single
/// node may receive at most this many links.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct InfluencerBudget(u32);

impl InfluencerBudget {
    pub fn new(k: u32) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::BudgetNotPositive);
        }
        Ok(InfluencerBudget(k))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for InfluencerBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Per-node count of links from external influencers. Solvers guarantee
/// `s(v) <= k` on their own outputs; the type itself only fixes the length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LinkVector(Vec<u32>);

impl LinkVector {
    pub fn zeros(n: usize) -> Self {
        LinkVector(vec![0; n])
    }

    pub fn new(counts: Vec<u32>) -> Self {
        LinkVector(counts)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: u32) -> u32 {
        self.0[v as usize]
    }

    pub fn set(&mut self, v: u32, count: u32) {
        self.0[v as usize] = count;
    }

    pub fn add(&mut self, v: u32, count: u32) {
        self.0[v as usize] += count;
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    /// Nodes that receive at least one link, ascending.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, _)| v as u32)
    }

    /// (node, count) pairs for all nonzero entries, ascending by node.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, &c)| (v as u32, c))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// Which algorithm produced a solution.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Tree,
    Cycle,
    Clique,
    Tpi,
    BruteForce,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Algorithm::Tree => "tree",
            Algorithm::Cycle => "cycle",
            Algorithm::Clique => "clique",
            Algorithm::Tpi => "tpi",
            Algorithm::BruteForce => "brute",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Feasible(LinkVector),
    Infeasible,
}

/// Result of a solver run: either a pervading link vector or a proof-backed
/// infeasibility verdict, tagged with the producing algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub algorithm: Algorithm,
    pub solution: Solution,
}

impl SolveOutcome {
    pub fn feasible(algorithm: Algorithm, links: LinkVector) -> Self {
        SolveOutcome { algorithm, solution: Solution::Feasible(links) }
    }

    pub fn infeasible(algorithm: Algorithm) -> Self {
        SolveOutcome { algorithm, solution: Solution::Infeasible }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self.solution, Solution::Feasible(_))
    }

    pub fn links(&self) -> Option<&LinkVector> {
        match &self.solution {
            Solution::Feasible(links) => Some(links),
            Solution::Infeasible => None,
        }
    }

    /// Total number of links, when feasible.
    pub fn total(&self) -> Option<u64> {
        self.links().map(LinkVector::total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_threshold() {
        let err = Graph::new(vec![1, 0], &[(0, 1)]).unwrap_err();
        assert_eq!(err, GraphError::ThresholdNotPositive { node: 1 });
    }

    #[test]
    fn rejects_self_loop() {
        let err = Graph::new(vec![1, 1], &[(1, 1)]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { node: 1 });
    }

    #[test]
    fn rejects_duplicate_edge_in_either_order() {
        let err = Graph::new(vec![1, 1], &[(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { edge: (0, 1) });
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        let err = Graph::new(vec![1, 1], &[(0, 2)]).unwrap_err();
        assert!(matches!(err, GraphError::EndpointOutOfRange { .. }));
    }

    #[test]
    fn neighbors_are_sorted() {
        let g = Graph::new(vec![1; 4], &[(2, 0), (3, 0), (0, 1)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn ring_of_two_is_rejected() {
        // The wrap-around edge duplicates the only path edge.
        assert!(Graph::ring(vec![1, 1]).is_err());
    }

    #[test]
    fn complete_graph_edge_count() {
        let g = Graph::complete(vec![1; 5]).unwrap();
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn link_vector_accounting() {
        let mut s = LinkVector::zeros(4);
        s.set(1, 2);
        s.add(3, 1);
        assert_eq!(s.total(), 3);
        assert_eq!(s.support().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(s.entries().collect::<Vec<_>>(), vec![(1, 2), (3, 1)]);
    }

    #[test]
    fn budget_must_be_positive() {
        assert!(InfluencerBudget::new(0).is_err());
        assert_eq!(InfluencerBudget::new(3).unwrap().get(), 3);
    }
}
