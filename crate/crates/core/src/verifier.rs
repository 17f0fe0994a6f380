//! Deciding whether a vertex set is a strong edge geodetic set.
//!
//! A set `X` qualifies when every unordered pair of `X` can be given at most
//! one shortest path between its two vertices such that the chosen paths
//! cover every edge. [`validate_witness`] checks a concrete assignment in
//! polynomial time. [`is_strong_edge_geodetic`] searches for one with an
//! exact-cover style backtracking over uncovered edges, and
//! [`naive_decide`] is the slow reference it is tested against.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    enumerate_geodesics, GeodesicPath, GeodesicsThrough, Graph, DEFAULT_GEODESIC_CAP,
};

/// Default node-expansion budget for a search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

// Upper limit on remembered failed search states.
const FAILED_STATE_CAP: usize = 1 << 21;

/// One assigned path. `pair` names the two set vertices it joins.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairPath {
    pub pair: [usize; 2],
    pub path: GeodesicPath,
}

/// A vertex set together with the paths certifying it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub set: Vec<usize>,
    pub paths: Vec<PairPath>,
}

impl Witness {
    /// Builds a witness from `(u, v, path)` triples. Pairs are stored as
    /// `[min, max]`; the set is sorted and deduplicated.
    pub fn new(
        mut set: Vec<usize>,
        paths: impl IntoIterator<Item = (usize, usize, Vec<usize>)>,
    ) -> Self {
        set.sort_unstable();
        set.dedup();
        let paths = paths
            .into_iter()
            .map(|(u, v, path)| PairPath {
                pair: [u.min(v), u.max(v)],
                path: GeodesicPath::new(path),
            })
            .collect();
        Witness { set, paths }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {vertex} is not a vertex of the graph")]
    ForeignVertex { vertex: usize },
    #[error("path for pair {pair:?} steps from {from} to non-adjacent {to}")]
    MalformedPath {
        pair: [usize; 2],
        from: usize,
        to: usize,
    },
}

/// Reasons a well-formed witness can still fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessProblem {
    /// A pair vertex is outside the witness set.
    EndpointNotInSet { pair: [usize; 2] },
    /// The path does not join the two vertices of its pair.
    EndpointMismatch { pair: [usize; 2] },
    /// The pair repeats a vertex.
    DegeneratePair { pair: [usize; 2] },
    /// The path is a walk but not a shortest path.
    NotGeodesic { pair: [usize; 2] },
    /// Second path for an already assigned pair.
    DuplicatePair { pair: [usize; 2] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub covered: Vec<(usize, usize)>,
    pub uncovered: Vec<(usize, usize)>,
    pub problems: Vec<WitnessProblem>,
}

/// Checks `w` against `g`. Every path must be a shortest path between the
/// two vertices of its pair, both in `w.set`, with at most one path per
/// pair; the report is valid when additionally every edge is covered.
///
/// Hard errors are reserved for input that does not describe walks in `g`.
pub fn validate_witness(g: &Graph, w: &Witness) -> Result<VerifyReport, VerifyError> {
    let n = g.n();
    let foreign = w
        .set
        .iter()
        .chain(
            w.paths
                .iter()
                .flat_map(|p| p.pair.iter().chain(p.path.vertices())),
        )
        .find(|&&v| v >= n);
    if let Some(&vertex) = foreign {
        return Err(VerifyError::ForeignVertex { vertex });
    }
    for p in &w.paths {
        if let Some((from, to)) = p.path.steps().find(|&(a, b)| !g.is_adjacent(a, b)) {
            return Err(VerifyError::MalformedPath {
                pair: p.pair,
                from,
                to,
            });
        }
    }

    let mut in_set = vec![false; n];
    for &v in &w.set {
        in_set[v] = true;
    }
    let mut problems = Vec::new();
    let mut seen_pairs = HashSet::new();
    let mut covered = FixedBitSet::with_capacity(g.m());
    for p in &w.paths {
        let [u, v] = p.pair;
        let key = (u.min(v), u.max(v));
        if u == v {
            problems.push(WitnessProblem::DegeneratePair { pair: p.pair });
            continue;
        }
        if !in_set[u] || !in_set[v] {
            problems.push(WitnessProblem::EndpointNotInSet { pair: p.pair });
        }
        let ends = (p.path.start(), p.path.end());
        if ends != (Some(u), Some(v)) && ends != (Some(v), Some(u)) {
            problems.push(WitnessProblem::EndpointMismatch { pair: p.pair });
            continue;
        }
        if !p.path.is_geodesic(g) {
            problems.push(WitnessProblem::NotGeodesic { pair: p.pair });
            continue;
        }
        if !seen_pairs.insert(key) {
            problems.push(WitnessProblem::DuplicatePair { pair: p.pair });
            continue;
        }
        for id in p.path.edge_ids(g) {
            covered.insert(id.expect("steps checked above"));
        }
    }

    let (mut cov, mut uncov) = (Vec::new(), Vec::new());
    for (id, &e) in g.edges().iter().enumerate() {
        if covered.contains(id) {
            cov.push(e);
        } else {
            uncov.push(e);
        }
    }
    Ok(VerifyReport {
        valid: uncov.is_empty() && problems.is_empty(),
        covered: cov,
        uncovered: uncov,
        problems,
    })
}

/// Node-expansion allowance, shareable between threads.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    /// Consumes one expansion; `false` once the allowance is gone.
    pub fn spend(&self) -> bool {
        self.used.fetch_add(1, Ordering::Relaxed) < self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed).min(self.limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.used.load(Ordering::Relaxed) >= self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Witness),
    No,
    /// The budget ran out before the search finished.
    Unknown,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

fn sorted_set(g: &Graph, set: &[usize]) -> Vec<usize> {
    let mut xs = set.to_vec();
    xs.sort_unstable();
    xs.dedup();
    assert!(
        xs.last().is_none_or(|&v| v < g.n()),
        "set contains a vertex outside the graph"
    );
    xs
}

fn set_pairs(xs: &[usize]) -> Vec<(usize, usize)> {
    xs.iter()
        .enumerate()
        .flat_map(|(i, &u)| xs[i + 1..].iter().map(move |&v| (u, v)))
        .collect()
}

enum Outcome {
    Found,
    Exhausted,
    Aborted,
}

struct CoverSearch<'a> {
    g: &'a Graph,
    pairs: Vec<(usize, usize)>,
    // Per edge: the pairs with a shortest path through it and how many.
    candidates: Vec<Vec<(usize, u128)>>,
    assigned: FixedBitSet,
    covered: FixedBitSet,
    uncovered: usize,
    chosen: Vec<(usize, GeodesicPath)>,
    failed: HashSet<Vec<usize>>,
    budget: &'a Budget,
}

impl<'a> CoverSearch<'a> {
    fn new(g: &'a Graph, xs: &[usize], budget: &'a Budget) -> Self {
        let pairs = set_pairs(xs);
        let candidates = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                pairs
                    .iter()
                    .enumerate()
                    .filter_map(|(p, &(u, v))| {
                        let count = g.geodesics_through_count(u, v, a, b);
                        (count > 0).then_some((p, count))
                    })
                    .collect()
            })
            .collect();
        CoverSearch {
            g,
            assigned: FixedBitSet::with_capacity(pairs.len()),
            covered: FixedBitSet::with_capacity(g.m()),
            uncovered: g.m(),
            pairs,
            candidates,
            chosen: Vec::new(),
            failed: HashSet::new(),
            budget,
        }
    }

    fn state_key(&self) -> Vec<usize> {
        let mut key = self.assigned.as_slice().to_vec();
        key.extend_from_slice(self.covered.as_slice());
        key
    }

    // Uncovered edge with the fewest remaining candidate paths; ties go to
    // the smaller edge index. `None` when some edge has no candidate left.
    fn pick_edge(&self) -> Option<usize> {
        let mut best: Option<(u128, usize)> = None;
        for e in self.covered.zeroes() {
            let count = self.candidates[e]
                .iter()
                .filter(|(p, _)| !self.assigned.contains(*p))
                .fold(0u128, |acc, (_, c)| acc.saturating_add(*c));
            if count == 0 {
                return None;
            }
            if best.is_none_or(|(c, _)| count < c) {
                best = Some((count, e));
            }
        }
        best.map(|(_, e)| e)
    }

    fn run(&mut self) -> Outcome {
        if self.uncovered == 0 {
            return Outcome::Found;
        }
        if !self.budget.spend() {
            return Outcome::Aborted;
        }
        let Some(edge) = self.pick_edge() else {
            return Outcome::Exhausted;
        };
        let key = self.state_key();
        if self.failed.contains(&key) {
            return Outcome::Exhausted;
        }

        let g = self.g;
        let (a, b) = g.edge(edge);
        let options: Vec<usize> = self.candidates[edge]
            .iter()
            .map(|&(p, _)| p)
            .filter(|&p| !self.assigned.contains(p))
            .collect();
        for p in options {
            let (u, v) = self.pairs[p];
            for path in GeodesicsThrough::new(g, u, v, a, b) {
                let newly: Vec<usize> = path
                    .edge_ids(g)
                    .map(|id| id.expect("geodesic steps are edges"))
                    .filter(|&id| !self.covered.contains(id))
                    .collect();
                for &id in &newly {
                    self.covered.insert(id);
                }
                self.uncovered -= newly.len();
                self.assigned.insert(p);
                self.chosen.push((p, path));

                match self.run() {
                    Outcome::Found => return Outcome::Found,
                    Outcome::Aborted => return Outcome::Aborted,
                    Outcome::Exhausted => {}
                }

                self.chosen.pop();
                self.assigned.set(p, false);
                self.uncovered += newly.len();
                for &id in &newly {
                    self.covered.set(id, false);
                }
            }
        }
        if self.failed.len() < FAILED_STATE_CAP {
            self.failed.insert(key);
        }
        Outcome::Exhausted
    }

    fn witness(&self, xs: Vec<usize>) -> Witness {
        let mut chosen: Vec<_> = self
            .chosen
            .iter()
            .map(|(p, path)| (self.pairs[*p], path.clone()))
            .collect();
        chosen.sort();
        Witness::new(
            xs,
            chosen
                .into_iter()
                .map(|((u, v), path)| (u, v, path.into_vertices())),
        )
    }
}

/// Exact decision: is `set` a strong edge geodetic set of `g`?
///
/// Branches on the uncovered edge with the fewest candidate `(pair, path)`
/// choices, trying each candidate pair's shortest paths through that edge
/// lazily. Failed states (assigned pairs, covered edges) are remembered.
/// Returns [`Decision::Unknown`] only when `budget` runs out.
pub fn is_strong_edge_geodetic(g: &Graph, set: &[usize], budget: &Budget) -> Decision {
    let xs = sorted_set(g, set);
    let mut search = CoverSearch::new(g, &xs, budget);
    match search.run() {
        Outcome::Found => Decision::Yes(search.witness(xs)),
        Outcome::Exhausted => Decision::No,
        Outcome::Aborted => Decision::Unknown,
    }
}

/// Reference decision procedure: walks the pairs of `set` in order and
/// tries every choice for each (each shortest path, or nothing), so it
/// explores the full product of per-pair choices. States reached twice with
/// the same covered edges are not re-explored, and a branch stops once the
/// remaining pairs cannot reach some uncovered edge at all.
///
/// Exponential; meant for small graphs.
pub fn naive_decide(g: &Graph, set: &[usize]) -> Option<Witness> {
    let xs = sorted_set(g, set);
    let pairs = set_pairs(&xs);
    let options: Vec<Vec<(GeodesicPath, FixedBitSet)>> = pairs
        .iter()
        .map(|&(u, v)| {
            enumerate_geodesics(g, u, v, DEFAULT_GEODESIC_CAP)
                .expect("too many geodesics for the reference search")
                .into_iter()
                .map(|path| {
                    let mut mask = FixedBitSet::with_capacity(g.m());
                    mask.extend(path.edge_ids(g).map(Option::unwrap));
                    (path, mask)
                })
                .collect()
        })
        .collect();
    let mut reachable = vec![FixedBitSet::with_capacity(g.m()); pairs.len() + 1];
    for i in (0..pairs.len()).rev() {
        let mut acc = reachable[i + 1].clone();
        for (_, mask) in &options[i] {
            acc.union_with(mask);
        }
        reachable[i] = acc;
    }

    struct Walk<'a> {
        options: &'a [Vec<(GeodesicPath, FixedBitSet)>],
        reachable: &'a [FixedBitSet],
        m: usize,
        failed: HashSet<(usize, FixedBitSet)>,
        chosen: Vec<(usize, usize)>,
    }

    impl Walk<'_> {
        fn go(&mut self, i: usize, covered: &FixedBitSet) -> bool {
            if covered.count_ones(..) == self.m {
                return true;
            }
            if i == self.options.len() {
                return false;
            }
            let mut hull = covered.clone();
            hull.union_with(&self.reachable[i]);
            if hull.count_ones(..) < self.m || self.failed.contains(&(i, covered.clone())) {
                return false;
            }
            for (k, (_, mask)) in self.options[i].iter().enumerate() {
                if mask.is_subset(covered) {
                    // no better than assigning nothing
                    continue;
                }
                let mut next = covered.clone();
                next.union_with(mask);
                self.chosen.push((i, k));
                if self.go(i + 1, &next) {
                    return true;
                }
                self.chosen.pop();
            }
            if self.go(i + 1, covered) {
                return true;
            }
            self.failed.insert((i, covered.clone()));
            false
        }
    }

    let mut walk = Walk {
        options: &options,
        reachable: &reachable,
        m: g.m(),
        failed: HashSet::new(),
        chosen: Vec::new(),
    };
    if !walk.go(0, &FixedBitSet::with_capacity(g.m())) {
        return None;
    }
    let paths: Vec<_> = walk
        .chosen
        .iter()
        .map(|&(i, k)| {
            let (u, v) = pairs[i];
            (u, v, options[i][k].0.vertices().to_vec())
        })
        .collect();
    Some(Witness::new(xs, paths))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle};

    fn c4_witness() -> Witness {
        Witness::new(
            vec![0, 1, 3],
            [
                (0, 1, vec![0, 1]),
                (0, 3, vec![0, 3]),
                (1, 3, vec![1, 2, 3]),
            ],
        )
    }

    #[test]
    fn c4_three_set_is_valid() {
        let report = validate_witness(&cycle(4), &c4_witness()).unwrap();
        assert!(report.valid);
        assert!(report.uncovered.is_empty());
        assert_eq!(report.covered.len(), 4);
    }

    #[test]
    fn k3_single_edges() {
        let w = Witness::new(
            vec![0, 1, 2],
            [(0, 1, vec![0, 1]), (0, 2, vec![0, 2]), (1, 2, vec![1, 2])],
        );
        assert!(validate_witness(&complete(3), &w).unwrap().valid);
    }

    #[test]
    fn c4_single_path_leaves_two_edges() {
        let w = Witness::new(vec![0, 2], [(0, 2, vec![0, 1, 2])]);
        let report = validate_witness(&cycle(4), &w).unwrap();
        assert!(!report.valid);
        assert_eq!(report.uncovered, vec![(0, 3), (2, 3)]);
    }

    #[test]
    fn problems_and_errors() {
        let k3 = complete(3);
        let long = Witness::new(vec![0, 1, 2], [(0, 1, vec![0, 2, 1])]);
        let report = validate_witness(&k3, &long).unwrap();
        assert_eq!(
            report.problems,
            vec![WitnessProblem::NotGeodesic { pair: [0, 1] }]
        );
        assert!(!report.valid);

        let c4 = cycle(4);
        let jump = Witness::new(vec![0, 2], [(0, 2, vec![0, 2])]);
        assert_eq!(
            validate_witness(&c4, &jump).unwrap_err(),
            VerifyError::MalformedPath {
                pair: [0, 2],
                from: 0,
                to: 2
            }
        );
        let foreign = Witness::new(vec![0, 7], []);
        assert_eq!(
            validate_witness(&c4, &foreign).unwrap_err(),
            VerifyError::ForeignVertex { vertex: 7 }
        );

        let mut twice = c4_witness();
        twice.paths.push(twice.paths[0].clone());
        let report = validate_witness(&c4, &twice).unwrap();
        assert_eq!(
            report.problems,
            vec![WitnessProblem::DuplicatePair { pair: [0, 1] }]
        );

        let outside = Witness::new(vec![0], [(0, 1, vec![0, 1])]);
        let report = validate_witness(&c4, &outside).unwrap();
        assert_eq!(
            report.problems,
            vec![WitnessProblem::EndpointNotInSet { pair: [0, 1] }]
        );

        let mismatch = Witness::new(vec![0, 1, 2], [(0, 2, vec![0, 1])]);
        let report = validate_witness(&c4, &mismatch).unwrap();
        assert_eq!(
            report.problems,
            vec![WitnessProblem::EndpointMismatch { pair: [0, 2] }]
        );
    }

    #[test]
    fn decisions_on_c4() {
        let c4 = cycle(4);
        let budget = Budget::unlimited();
        let Decision::Yes(w) = is_strong_edge_geodetic(&c4, &[0, 1, 2, 3], &budget) else {
            panic!("whole vertex set must succeed");
        };
        assert!(validate_witness(&c4, &w).unwrap().valid);
        assert_eq!(is_strong_edge_geodetic(&c4, &[0, 2], &budget), Decision::No);
        assert!(naive_decide(&c4, &[0, 2]).is_none());
        assert!(naive_decide(&c4, &[0, 1, 3]).is_some());
    }

    #[test]
    fn k33_four_sets_fail() {
        let g = complete_bipartite(3, 3);
        let budget = Budget::unlimited();
        assert_eq!(
            is_strong_edge_geodetic(&g, &[0, 1, 2, 3], &budget),
            Decision::No
        );
        assert!(naive_decide(&g, &[0, 1, 2, 3]).is_none());
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let g = complete_bipartite(3, 3);
        let budget = Budget::new(1);
        assert_eq!(
            is_strong_edge_geodetic(&g, &[0, 1, 2, 3, 4], &budget),
            Decision::Unknown
        );
        assert!(budget.exhausted());
    }

    #[test]
    fn witness_json_shape() {
        let json = serde_json::to_string(&c4_witness()).unwrap();
        assert_eq!(
            json,
            r#"{"set":[0,1,3],"paths":[{"pair":[0,1],"path":[0,1]},{"pair":[0,3],"path":[0,3]},{"pair":[1,3],"path":[1,2,3]}]}"#
        );
        let back: Witness = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c4_witness());
    }
}
