//! TPI, the threshold-to-degree pruning heuristic for general graphs.
//!
//! The solver keeps a shrinking live subgraph with residual thresholds k(v)
//! and residual degrees d(v). While any live node needs more than its
//! neighbors could ever supply (k(v) > d(v)), the difference is paid with
//! links (Case 1). Otherwise the node with the largest ratio
//! k(v)(k(v)+1) : d(v)(d(v)+1) is pruned (Case 2), betting that its
//! neighbors, activated later in reverse deletion order, will cover it. The
//! result is always a pervading link vector whose total is bounded by
//! [`tpi_bound`].

use std::cmp::Ordering;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::graph::{Graph, InfluencerBudget, LinkVector};

/// Result of a TPI run, with the certified upper bound and loop statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpiReport {
    pub links: LinkVector,
    pub total: u64,
    /// The a-priori bound of [`tpi_bound`]; total never exceeds it.
    pub bound: BigRational,
    pub iterations: u64,
    pub case1_count: u64,
    pub case2_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TpiError {
    /// TPI assumes every threshold is coverable by links alone.
    BudgetBelowMaxThreshold { budget: u32, max_threshold: u32 },
}

impl fmt::Display for TpiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TpiError::BudgetBelowMaxThreshold { budget, max_threshold } => write!(
                f,
                "budget {budget} is below the maximum threshold {max_threshold}"
            ),
        }
    }
}

impl std::error::Error for TpiError {}

/// Which branch an iteration took: links assigned (1) or a node pruned (2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TpiCase {
    One,
    Two,
}

impl fmt::Display for TpiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TpiCase::One => write!(f, "1"),
            TpiCase::Two => write!(f, "2"),
        }
    }
}

/// One iteration of the instrumented run. The potential is the bound value
/// recomputed over the current live subgraph; the links assigned in an
/// iteration never exceed the potential drop it causes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpiIteration {
    /// 1-based loop pass index.
    pub index: u64,
    pub node: u32,
    pub case: TpiCase,
    /// Links assigned during this pass (0 for Case 2).
    pub sigma: u64,
    pub potential_before: BigRational,
    pub potential_after: BigRational,
}

impl fmt::Display for TpiIteration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "iter {} node {} case {} sigma {}",
            self.index, self.node, self.case, self.sigma
        )
    }
}

/// The a-priori link bound: sum over nodes of t(v)(t(v)+1) / (2(d(v)+1)),
/// evaluated exactly.
pub fn tpi_bound(g: &Graph) -> BigRational {
    let mut sum = BigRational::zero();
    for v in g.nodes() {
        sum += term(g.threshold(v), g.degree(v) as u32);
    }
    sum
}

/// One node's contribution to the potential: k(k+1) / (2(d+1)).
fn term(residual: u32, degree: u32) -> BigRational {
    let k = BigInt::from(residual);
    let num = &k * (&k + 1);
    BigRational::new(num, BigInt::from(2u64 * (degree as u64 + 1)))
}

/// Max-heap entry ordered by the Case-2 ratio, ties to the lowest id.
///
/// Comparison cross-multiplies k(k+1) against d(d+1), so entries with d = 0
/// sort as infinite and no division happens. Entries with residual 0 are
/// never pushed; they would make distinct ratios compare equal.
#[derive(Clone, Copy, Debug)]
struct RatioEntry {
    residual: u32,
    degree: u32,
    id: u32,
}

fn pairs(x: u32) -> u128 {
    x as u128 * (x as u128 + 1)
}

impl Ord for RatioEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = pairs(self.residual) * pairs(other.degree);
        let rhs = pairs(other.residual) * pairs(self.degree);
        lhs.cmp(&rhs).then_with(|| other.id.cmp(&self.id))
    }
}

impl PartialOrd for RatioEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for RatioEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RatioEntry {}

/// Runs TPI and returns the links, their total, and the bound.
///
/// Requires the budget to be at least the maximum threshold; the budget is
/// not consulted anywhere else. The empty graph yields an empty report.
pub fn tpi(g: &Graph, k: InfluencerBudget) -> Result<TpiReport, TpiError> {
    run(g, k, None)
}

/// [`tpi`] with a per-iteration observer, for traces and potential checks.
pub fn tpi_instrumented(
    g: &Graph,
    k: InfluencerBudget,
    observer: &mut dyn FnMut(&TpiIteration),
) -> Result<TpiReport, TpiError> {
    run(g, k, Some(observer))
}

fn run(
    g: &Graph,
    k: InfluencerBudget,
    mut observer: Option<&mut dyn FnMut(&TpiIteration)>,
) -> Result<TpiReport, TpiError> {
    let budget = k.get();
    let t_max = g.max_threshold();
    if budget < t_max {
        return Err(TpiError::BudgetBelowMaxThreshold { budget, max_threshold: t_max });
    }

    let n = g.node_count();
    let bound = tpi_bound(g);
    let mut residual: Vec<u32> = g.thresholds().to_vec();
    let mut degree: Vec<u32> = g.nodes().map(|v| g.degree(v) as u32).collect();
    let mut alive = vec![true; n];
    let mut fired = vec![false; n];
    let mut links = LinkVector::zeros(n);
    let mut live = n;

    // Nodes whose residual threshold exceeds their residual degree; always
    // drained (lowest id first) before any Case-2 pruning.
    let mut pool: BTreeSet<u32> = g
        .nodes()
        .filter(|&v| residual[v as usize] > degree[v as usize])
        .collect();
    // Lazily invalidated ratio heap: an entry counts only while it matches
    // the node's current state. Every live node outside the pool has exactly
    // one matching entry, so Case 2 always finds its maximum.
    let mut heap: BinaryHeap<RatioEntry> = g
        .nodes()
        .map(|v| RatioEntry {
            residual: residual[v as usize],
            degree: degree[v as usize],
            id: v,
        })
        .collect();

    // Tracked incrementally, and only when someone is watching.
    let mut potential = observer.as_ref().map(|_| bound.clone());

    let mut iterations = 0u64;
    let mut case1_count = 0u64;
    let mut case2_count = 0u64;

    while live > 0 {
        iterations += 1;
        let potential_before = potential.clone();
        let (node, case, sigma);

        if let Some(&v) = pool.first() {
            pool.remove(&v);
            let vi = v as usize;
            debug_assert!(alive[vi] && residual[vi] > degree[vi]);
            let step = residual[vi] - degree[vi];
            // Every top-up after the first crosses the threshold/degree gap
            // by exactly one, because the gap can only shrink by one per
            // pruning. A larger first step needs t(v) > d(v) + 1 out of the
            // gate.
            assert!(
                step == 1
                    || (!fired[vi]
                        && step as u64 == g.threshold(v) as u64 - g.degree(v) as u64),
                "node {v} topped up by {step} links in one pass"
            );
            if let Some(p) = potential.as_mut() {
                *p -= term(residual[vi], degree[vi]);
                *p += term(degree[vi], degree[vi]);
            }
            links.add(v, step);
            residual[vi] = degree[vi];
            fired[vi] = true;
            debug_assert_eq!(
                links.get(v) as u64 + residual[vi] as u64,
                g.threshold(v) as u64,
                "links plus residual always reconstructs the threshold"
            );
            if residual[vi] == 0 {
                // Degree 0 means no live neighbors, so nothing to update.
                alive[vi] = false;
                live -= 1;
            } else {
                heap.push(RatioEntry { residual: residual[vi], degree: degree[vi], id: v });
            }
            (node, case, sigma) = (v, TpiCase::One, step as u64);
            case1_count += 1;
        } else {
            let v = loop {
                let entry = heap.pop().expect("every live node keeps a current entry");
                let id = entry.id as usize;
                if alive[id]
                    && residual[id] == entry.residual
                    && degree[id] == entry.degree
                {
                    break entry.id;
                }
            };
            let vi = v as usize;
            // A live node with residual degree 0 would have been claimed by
            // Case 1, so pruning always happens inside the live subgraph.
            debug_assert!(degree[vi] >= 1 && residual[vi] >= 1);
            alive[vi] = false;
            live -= 1;
            if let Some(p) = potential.as_mut() {
                *p -= term(residual[vi], degree[vi]);
            }
            for &u in g.neighbors(v) {
                let ui = u as usize;
                if !alive[ui] {
                    continue;
                }
                if let Some(p) = potential.as_mut() {
                    *p -= term(residual[ui], degree[ui]);
                    *p += term(residual[ui], degree[ui] - 1);
                }
                degree[ui] -= 1;
                if residual[ui] > degree[ui] {
                    pool.insert(u);
                } else {
                    heap.push(RatioEntry { residual: residual[ui], degree: degree[ui], id: u });
                }
            }
            (node, case, sigma) = (v, TpiCase::Two, 0);
            case2_count += 1;
        }

        if let Some(obs) = observer.as_mut() {
            let after = potential.clone().expect("tracked while observing");
            let before = potential_before.expect("tracked while observing");
            obs(&TpiIteration { index: iterations, node, case, sigma, potential_before: before, potential_after: after });
        }
    }

    // Each node is topped up at most 1 + d(v) times and pruned once, so the
    // loop runs at most 2(n + m) passes. (n + m alone does not suffice: the
    // two-node path with both thresholds 2 takes four passes.)
    debug_assert!(iterations <= 2 * (n as u64 + g.edge_count() as u64));
    debug_assert_eq!(case1_count + case2_count, iterations);

    let total = links.total();
    debug_assert!(
        BigRational::from_integer(BigInt::from(total)) <= bound,
        "assigned links stay within the bound"
    );
    Ok(TpiReport { links, total, bound, iterations, case1_count, case2_count })
}
