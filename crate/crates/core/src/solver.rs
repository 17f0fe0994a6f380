//! Computing the strong edge geodetic number exactly.
//!
//! [`sge_exact`] sweeps candidate sizes upward from [`lower_bound`] and only
//! tries sets that contain every vertex with a dominant neighbor, since no
//! strong edge geodetic set can miss one. [`sge_oracle`] does none of that
//! and exists to check it.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{construct_multipartite, construct_prism};
use crate::formulas::{MultipartiteSpec, PrismSpec};
use crate::graph::{
    has_dominant_neighbor, simplicial_vertices, universal_vertices, Graph, Provenance,
};
use crate::verifier::{
    is_strong_edge_geodetic, naive_decide, validate_witness, Budget, Decision, Witness,
    DEFAULT_BUDGET,
};

/// Largest graph [`sge_oracle`] accepts by default.
pub const ORACLE_MAX_VERTICES: usize = 10;

const PARALLEL_BATCH: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SgeResult {
    pub value: usize,
    pub optimal_set: Vec<usize>,
    pub witness: Witness,
    /// Vertices that lie in every strong edge geodetic set.
    pub forced: Vec<usize>,
    pub lower_bound_used: usize,
    pub nodes_expanded: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("budget exhausted after {nodes} node expansions; value lies in [{lower}, {upper}]")]
    BudgetExhausted {
        lower: usize,
        upper: usize,
        nodes: u64,
    },
    #[error("graph on {n} vertices exceeds the oracle limit of {max}")]
    InstanceTooLarge { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Node expansions allowed across the whole size sweep.
    pub budget: u64,
    pub threads: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: DEFAULT_BUDGET,
            threads: 1,
        }
    }
}

/// Vertices with at least one dominant neighbor. Any shortest path using
/// the edge to that neighbor must end at the vertex, so each of these
/// belongs to every strong edge geodetic set.
pub fn forced_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .filter(|&u| has_dominant_neighbor(g, u))
        .collect()
}

/// Largest of: the forced vertex count, the simplicial vertex count,
/// `n - 1` when a universal vertex exists, and 2 when there is an edge.
pub fn lower_bound(g: &Graph) -> usize {
    if g.m() == 0 {
        return 0;
    }
    let universal = if universal_vertices(g).is_empty() {
        0
    } else {
        g.n() - 1
    };
    [
        forced_vertices(g).len(),
        simplicial_vertices(g).len(),
        universal,
        2,
    ]
    .into_iter()
    .max()
    .unwrap()
}

/// `sg_e(G) = n(G)` exactly when every vertex has a dominant neighbor.
pub fn sge_equals_n(g: &Graph) -> bool {
    (0..g.n()).all(|u| has_dominant_neighbor(g, u))
}

/// Size-`k` subsets of `pool` in colexicographic order.
pub(crate) struct Colex<'a> {
    pool: &'a [usize],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Colex<'a> {
    pub(crate) fn new(pool: &'a [usize], k: usize) -> Self {
        Colex {
            pool,
            idx: (0..k).collect(),
            done: k > pool.len(),
        }
    }
}

impl Iterator for Colex<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.pool[i]).collect();
        // Advance: bump the first index that can move, reset those below it.
        let k = self.idx.len();
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                break;
            }
            let limit = if i + 1 < k {
                self.idx[i + 1]
            } else {
                self.pool.len()
            };
            if self.idx[i] + 1 < limit {
                self.idx[i] += 1;
                for (j, slot) in self.idx[..i].iter_mut().enumerate() {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

// Size of a witness the toolkit's own constructions give for a tagged graph.
fn seeded_upper_bound(g: &Graph) -> Option<usize> {
    let witness = match g.provenance()? {
        Provenance::Complete { n } => return Some(*n),
        Provenance::CompleteMultipartite { parts } => {
            construct_multipartite(&MultipartiteSpec::new(parts.clone()).ok()?).witness
        }
        Provenance::PathTimesComplete { n, m } => {
            construct_prism(&PrismSpec::new(*n, *m).ok()?).witness
        }
    };
    validate_witness(g, &witness)
        .ok()
        .filter(|r| r.valid)
        .map(|_| witness.set.len())
}

enum SizeOutcome {
    Found(Witness),
    NoneFound,
    Aborted,
}

fn with_forced(forced: &[usize], extra: &[usize]) -> Vec<usize> {
    let mut set: Vec<usize> = forced.iter().chain(extra).copied().collect();
    set.sort_unstable();
    set
}

fn search_size(
    g: &Graph,
    forced: &[usize],
    free: &[usize],
    r: usize,
    budget: &Budget,
    threads: usize,
) -> SizeOutcome {
    let mut combos = Colex::new(free, r);
    if threads <= 1 {
        for extra in combos {
            match is_strong_edge_geodetic(g, &with_forced(forced, &extra), budget) {
                Decision::Yes(w) => return SizeOutcome::Found(w),
                Decision::No => {}
                Decision::Unknown => return SizeOutcome::Aborted,
            }
        }
        return SizeOutcome::NoneFound;
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    loop {
        let batch: Vec<Vec<usize>> = combos.by_ref().take(PARALLEL_BATCH).collect();
        if batch.is_empty() {
            return SizeOutcome::NoneFound;
        }
        let decisions: Vec<Decision> = pool.install(|| {
            batch
                .par_iter()
                .map(|extra| is_strong_edge_geodetic(g, &with_forced(forced, extra), budget))
                .collect()
        });
        // Lowest colex rank wins regardless of finishing order.
        for d in decisions {
            match d {
                Decision::Yes(w) => return SizeOutcome::Found(w),
                Decision::No => {}
                Decision::Unknown => return SizeOutcome::Aborted,
            }
        }
    }
}

/// Exact `sg_e(g)` with the colex-first optimal set.
///
/// Sizes run from [`lower_bound`] up; at each size only supersets of
/// [`forced_vertices`] are tried, in colex order of their remaining
/// vertices. The budget is shared across the sweep.
pub fn sge_exact(g: &Graph, options: &SolverOptions) -> Result<SgeResult, SolveError> {
    let n = g.n();
    let forced = forced_vertices(g);
    let lower = lower_bound(g);
    let upper = seeded_upper_bound(g).unwrap_or(n).min(n);
    let free: Vec<usize> = (0..n)
        .filter(|v| forced.binary_search(v).is_err())
        .collect();
    let budget = Budget::new(options.budget);

    for k in lower.max(forced.len())..=n {
        match search_size(
            g,
            &forced,
            &free,
            k - forced.len(),
            &budget,
            options.threads,
        ) {
            SizeOutcome::Found(witness) => {
                return Ok(SgeResult {
                    value: k,
                    optimal_set: witness.set.clone(),
                    witness,
                    forced,
                    lower_bound_used: lower,
                    nodes_expanded: budget.used(),
                })
            }
            SizeOutcome::NoneFound => {}
            SizeOutcome::Aborted => {
                return Err(SolveError::BudgetExhausted {
                    lower: k,
                    upper: upper.max(k),
                    nodes: budget.used(),
                })
            }
        }
    }
    unreachable!("the full vertex set is always a strong edge geodetic set")
}

/// Brute-force `sg_e(g)`: every subset in size order, colex within a size,
/// each decided by [`naive_decide`]. Knows nothing about forced vertices or
/// lower bounds.
pub fn sge_oracle(g: &Graph, max_vertices: usize) -> Result<SgeResult, SolveError> {
    let n = g.n();
    if n > max_vertices {
        return Err(SolveError::InstanceTooLarge {
            n,
            max: max_vertices,
        });
    }
    let all: Vec<usize> = (0..n).collect();
    for k in 0..=n {
        for set in Colex::new(&all, k) {
            if let Some(witness) = naive_decide(g, &set) {
                return Ok(SgeResult {
                    value: k,
                    optimal_set: set,
                    witness,
                    forced: Vec::new(),
                    lower_bound_used: 0,
                    nodes_expanded: 0,
                });
            }
        }
    }
    unreachable!("the full vertex set is always a strong edge geodetic set")
}
