//! Random instance generators, deterministic per seed.
//!
//! Every generator draws from one [`SplitMix64`] stream in a fixed order
//! (edges first, thresholds second, node by node), so a (family, n, k, mode,
//! seed, p) tuple always reproduces the same instance. The threshold modes:
//!
//! * `unit` sets every threshold to 1, except that the star family gives its
//!   center threshold n, the showcase instance where one well-placed seed
//!   node beats any budget of links.
//! * `feasible-uniform` draws t(v) uniformly from [1, min(degree(v)+k, cap)],
//!   which satisfies the per-node necessary bound but may still be globally
//!   infeasible.
//! * `adversarial` starts from feasible-uniform and then overwrites each
//!   threshold with probability 1/8 each to k+1 or k+2, the two boundary
//!   values of the cycle characterization.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, InfluencerBudget};
use crate::rng::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Tree,
    Cycle,
    Clique,
    Star,
    Gnp,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Tree => "tree",
            Family::Cycle => "cycle",
            Family::Clique => "clique",
            Family::Star => "star",
            Family::Gnp => "gnp",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tree" => Ok(Family::Tree),
            "cycle" => Ok(Family::Cycle),
            "clique" => Ok(Family::Clique),
            "star" => Ok(Family::Star),
            "gnp" => Ok(Family::Gnp),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdMode {
    Unit,
    FeasibleUniform { cap: Option<u32> },
    Adversarial,
}

impl fmt::Display for ThresholdMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdMode::Unit => write!(f, "unit"),
            ThresholdMode::FeasibleUniform { cap: None } => write!(f, "feasible-uniform"),
            ThresholdMode::FeasibleUniform { cap: Some(cap) } => {
                write!(f, "feasible-uniform(cap={cap})")
            }
            ThresholdMode::Adversarial => write!(f, "adversarial"),
        }
    }
}

impl FromStr for ThresholdMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unit" => Ok(ThresholdMode::Unit),
            "feasible-uniform" => Ok(ThresholdMode::FeasibleUniform { cap: None }),
            "adversarial" => Ok(ThresholdMode::Adversarial),
            other => Err(format!("unknown threshold mode `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GenerateError {
    /// The family needs more nodes than requested (cycles need 3).
    TooFewNodes { family: Family, minimum: usize, requested: usize },
    /// Edge probability given for a family that does not take one.
    UnexpectedEdgeProbability { family: Family },
    MissingEdgeProbability,
    /// p must be a number in [0, 1].
    InvalidEdgeProbability(f64),
    /// feasible-uniform cap of 0 would leave no legal threshold.
    InvalidThresholdCap,
}

impl fmt::Display for GenerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenerateError::TooFewNodes { family, minimum, requested } => {
                write!(f, "family {family} needs at least {minimum} nodes, got {requested}")
            }
            GenerateError::UnexpectedEdgeProbability { family } => {
                write!(f, "family {family} does not take an edge probability")
            }
            GenerateError::MissingEdgeProbability => {
                write!(f, "family gnp needs an edge probability p")
            }
            GenerateError::InvalidEdgeProbability(p) => {
                write!(f, "edge probability {p} is not in [0, 1]")
            }
            GenerateError::InvalidThresholdCap => {
                write!(f, "threshold cap must be at least 1")
            }
        }
    }
}

impl std::error::Error for GenerateError {}

/// Generates a random instance. `p` is required for (and only for) `gnp`.
pub fn generate(
    family: Family,
    n: usize,
    k: InfluencerBudget,
    mode: ThresholdMode,
    seed: u64,
    p: Option<f64>,
) -> Result<(Graph, InfluencerBudget), GenerateError> {
    if n < 1 {
        return Err(GenerateError::TooFewNodes { family, minimum: 1, requested: n });
    }
    if family == Family::Cycle && n < 3 {
        return Err(GenerateError::TooFewNodes { family, minimum: 3, requested: n });
    }
    match (family, p) {
        (Family::Gnp, None) => return Err(GenerateError::MissingEdgeProbability),
        (Family::Gnp, Some(p)) if !(0.0..=1.0).contains(&p) => {
            return Err(GenerateError::InvalidEdgeProbability(p))
        }
        (Family::Gnp, Some(_)) => {}
        (_, Some(_)) => return Err(GenerateError::UnexpectedEdgeProbability { family }),
        (_, None) => {}
    }
    if let ThresholdMode::FeasibleUniform { cap: Some(0) } = mode {
        return Err(GenerateError::InvalidThresholdCap);
    }

    let mut rng = SplitMix64::new(seed);
    let edges = match family {
        Family::Tree => random_tree_edges(n, &mut rng),
        Family::Cycle => ring_edges(n),
        Family::Clique => clique_edges(n),
        Family::Star => star_edges(n),
        Family::Gnp => gnp_edges(n, p.expect("validated above"), &mut rng),
    };

    let mut degree = vec![0u64; n];
    for &(u, v) in &edges {
        degree[u as usize] += 1;
        degree[v as usize] += 1;
    }

    let thresholds: Vec<u32> = match mode {
        ThresholdMode::Unit => {
            let mut t = vec![1u32; n];
            if family == Family::Star {
                t[0] = n as u32;
            }
            t
        }
        ThresholdMode::FeasibleUniform { cap } => (0..n)
            .map(|v| draw_feasible(&mut rng, degree[v], k, cap))
            .collect(),
        ThresholdMode::Adversarial => (0..n)
            .map(|v| {
                let base = draw_feasible(&mut rng, degree[v], k, None);
                match rng.below(8) {
                    0 => saturating_u32(k.get() as u64 + 1),
                    1 => saturating_u32(k.get() as u64 + 2),
                    _ => base,
                }
            })
            .collect(),
    };

    let g = Graph::new(thresholds, &edges).expect("generators emit valid simple graphs");
    Ok((g, k))
}

fn draw_feasible(rng: &mut SplitMix64, degree: u64, k: InfluencerBudget, cap: Option<u32>) -> u32 {
    let mut hi = degree + k.get() as u64;
    if let Some(cap) = cap {
        hi = hi.min(cap as u64);
    }
    hi = hi.min(u32::MAX as u64);
    rng.range(1, hi) as u32
}

fn saturating_u32(x: u64) -> u32 {
    x.min(u32::MAX as u64) as u32
}

fn ring_edges(n: usize) -> Vec<(u32, u32)> {
    (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect()
}

fn clique_edges(n: usize) -> Vec<(u32, u32)> {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    edges
}

fn star_edges(n: usize) -> Vec<(u32, u32)> {
    (1..n as u32).map(|leaf| (0, leaf)).collect()
}

/// Uniform random labeled tree via a random Pruefer sequence.
pub fn random_tree_edges(n: usize, rng: &mut SplitMix64) -> Vec<(u32, u32)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<u32> = (0..n - 2).map(|_| rng.below(n as u64) as u32).collect();
    let mut degree = vec![1u32; n];
    for &a in &seq {
        degree[a as usize] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<u32>> = (0..n as u32)
        .filter(|&v| degree[v as usize] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in &seq {
        let Reverse(leaf) = leaves.pop().expect("a Pruefer decode never runs dry");
        edges.push((leaf.min(a), leaf.max(a)));
        degree[a as usize] -= 1;
        if degree[a as usize] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    edges.push((u.min(v), u.max(v)));
    edges
}

/// G(n, p) sampled with geometric gap skipping, O(n + m) draws.
fn gnp_edges(n: usize, p: f64, rng: &mut SplitMix64) -> Vec<(u32, u32)> {
    if n < 2 || p == 0.0 {
        return Vec::new();
    }
    if p >= 1.0 {
        return clique_edges(n);
    }
    let mut edges = Vec::new();
    let log_q = (1.0 - p).ln();
    let mut v: u64 = 1;
    let mut w: i64 = -1;
    while (v as usize) < n {
        let r = rng.unit_f64();
        let skip = ((1.0 - r).ln() / log_q).floor() as i64;
        w += 1 + skip;
        while w >= v as i64 && (v as usize) < n {
            w -= v as i64;
            v += 1;
        }
        if (v as usize) < n {
            edges.push((w as u32, v as u32));
        }
    }
    edges
}

/// Random tree with thresholds that are always feasible for budget k.
///
/// Peeling leaves lowest-id first (mirroring the feasibility test), each
/// leaf draws the residual threshold it should present when peeled: between
/// 1 and k+1, or at most k for the last node. Adding back the reliefs the
/// node would have received reconstructs an original threshold vector whose
/// peel succeeds by construction.
pub fn random_feasible_tree(n: usize, k: InfluencerBudget, rng: &mut SplitMix64) -> Graph {
    assert!(n >= 1, "a tree needs a node");
    let k = k.get() as u64;
    let edges = random_tree_edges(n, rng);
    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adjacency[u as usize].push(v);
        adjacency[v as usize].push(u);
    }

    let mut deg: Vec<usize> = adjacency.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut relief = vec![0u64; n];
    let mut thresholds = vec![0u32; n];
    let mut leaves: BinaryHeap<Reverse<u32>> = (0..n as u32)
        .filter(|&v| deg[v as usize] == 1)
        .map(Reverse)
        .collect();

    let mut remaining = n;
    while remaining > 1 {
        let Reverse(v) = leaves.pop().expect("a tree on 2+ nodes has a leaf");
        let vi = v as usize;
        if !alive[vi] || deg[vi] != 1 {
            continue;
        }
        let residual = rng.range(1, k + 1);
        thresholds[vi] = u32::try_from(residual + relief[vi]).expect("threshold fits 32 bits");
        alive[vi] = false;
        remaining -= 1;
        let w = adjacency[vi]
            .iter()
            .copied()
            .find(|&u| alive[u as usize])
            .expect("a live leaf has a live neighbor");
        let wi = w as usize;
        if residual <= k {
            relief[wi] += 1;
        }
        deg[wi] -= 1;
        if deg[wi] == 1 {
            leaves.push(Reverse(w));
        }
    }
    let last = (0..n).find(|&v| alive[v]).expect("one node remains");
    let residual = rng.range(1, k);
    thresholds[last] = u32::try_from(residual + relief[last]).expect("threshold fits 32 bits");

    Graph::new(thresholds, &edges).expect("tree edges are a valid simple graph")
}

/// Random cycle with thresholds that are always feasible for budget k:
/// node 0 stays cheap, nothing exceeds k+2, and any k+2 run that lacks a
/// cheap node since the previous one is demoted to k+1.
pub fn random_feasible_cycle(n: usize, k: InfluencerBudget, rng: &mut SplitMix64) -> Graph {
    assert!(n >= 3, "a cycle needs three nodes");
    let k = k.get() as u64;
    let mut thresholds: Vec<u64> = (0..n).map(|_| rng.range(1, k + 2)).collect();
    thresholds[0] = rng.range(1, k);
    let mut seen_cheap = true;
    for t in thresholds.iter_mut().skip(1) {
        if *t <= k {
            seen_cheap = true;
        } else if *t == k + 2 {
            if seen_cheap {
                seen_cheap = false;
            } else {
                *t = k + 1;
            }
        }
    }
    let thresholds = thresholds
        .into_iter()
        .map(|t| u32::try_from(t).expect("threshold fits 32 bits"))
        .collect();
    Graph::ring(thresholds).expect("ring thresholds are positive")
}

/// Threshold vector that is always feasible on a clique for budget k: the
/// i-th smallest drawn value is at most i + k - 1, then node labels are
/// shuffled. Useful on its own when the quadratic edge set of a huge clique
/// would never fit in memory.
pub fn random_feasible_clique_thresholds(
    n: usize,
    k: InfluencerBudget,
    rng: &mut SplitMix64,
) -> Vec<u32> {
    assert!(n >= 1, "a clique needs a node");
    let k = k.get() as u64;
    let mut values: Vec<u32> = (1..=n as u64)
        .map(|rank| {
            let draw = rng.range(1, rank + k - 1);
            u32::try_from(draw).expect("threshold fits 32 bits")
        })
        .collect();
    rng.shuffle(&mut values);
    values
}

/// Random clique with thresholds that are always feasible for budget k.
pub fn random_feasible_clique(n: usize, k: InfluencerBudget, rng: &mut SplitMix64) -> Graph {
    let values = random_feasible_clique_thresholds(n, k, rng);
    Graph::complete(values).expect("clique thresholds are positive")
}
