//! Simple undirected connected graphs with cached hop distances and
//! geodesic counts.
//!
//! Vertices are the integers `0..n`. Every edge `{u, v}` is stored once with
//! `u < v` and gets a dense index in `0..m`, assigned in lexicographic order of
//! its endpoints. Edge indices are what the covering search uses for its
//! bitsets.

mod generators;
mod geodesic;
mod structure;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use generators::{
    cartesian_product, complete, complete_bipartite, complete_multipartite, cycle, path,
    path_times_complete, star, wheel,
};
pub use geodesic::{enumerate_geodesics, GeodesicIter, GeodesicPath, GeodesicsThrough, Overflow};
pub use structure::{
    dominant_neighbors, has_dominant_neighbor, simplicial_vertices, twins, universal_vertices,
};

/// Default cap on materialized geodesics per vertex pair.
pub const DEFAULT_GEODESIC_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected ({components} components)")]
    DisconnectedGraph { components: usize },
}

/// What to do with an edge listed more than once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DuplicatePolicy {
    #[default]
    Dedupe,
    Reject,
}

/// Family tag attached by the generators in this crate. The solver uses it to
/// seed an upper bound; it never tries to recognize families otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Provenance {
    Complete { n: usize },
    CompleteMultipartite { parts: Vec<usize> },
    PathTimesComplete { n: usize, m: usize },
}

/// Hop distances between every pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }

    pub fn diameter(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0) as usize
    }
}

/// BFS from every vertex. Panics if the adjacency is disconnected, which
/// [`Graph`] rules out at construction.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    bfs_all_pairs(&g.adj).expect("graph is connected")
}

fn bfs_all_pairs(adj: &[Vec<usize>]) -> Option<DistanceMatrix> {
    let n = adj.len();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if row[w] == u32::MAX {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if row.contains(&u32::MAX) {
            return None;
        }
    }
    Some(DistanceMatrix { n, d })
}

fn count_components(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut components = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    components
}

/// Immutable simple connected graph.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_index: Vec<u32>,
    dist: DistanceMatrix,
    // Number of geodesics between each ordered pair, saturating.
    sigma: Vec<u128>,
    provenance: Option<Provenance>,
}

const NO_EDGE: u32 = u32::MAX;

impl Graph {
    /// Builds a graph, silently merging repeated edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_policy(n, edges, DuplicatePolicy::Dedupe)
    }

    pub fn with_policy(
        n: usize,
        edges: &[(usize, usize)],
        duplicates: DuplicatePolicy,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut matrix = vec![false; n * n];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if matrix[u * n + v] {
                match duplicates {
                    DuplicatePolicy::Dedupe => continue,
                    DuplicatePolicy::Reject => {
                        return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)))
                    }
                }
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let dist = match bfs_all_pairs(&adj) {
            Some(d) => d,
            None => {
                return Err(GraphError::DisconnectedGraph {
                    components: count_components(&adj),
                })
            }
        };

        let mut edge_list = Vec::new();
        let mut edge_index = vec![NO_EDGE; n * n];
        for u in 0..n {
            for &v in adj[u].iter().filter(|&&v| v > u) {
                let id = edge_list.len() as u32;
                edge_index[u * n + v] = id;
                edge_index[v * n + u] = id;
                edge_list.push((u, v));
            }
        }

        let sigma = geodesic::count_all_geodesics(&adj, &dist);
        Ok(Graph {
            adj,
            edges: edge_list,
            edge_index,
            dist,
            sigma,
            provenance: None,
        })
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = Some(provenance);
        self
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Dense index of edge `{u, v}`, if present.
    #[inline]
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let n = self.n();
        if u >= n || v >= n {
            return None;
        }
        match self.edge_index[u * n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    /// Edges as `(u, v)` with `u < v`, ordered by edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    #[inline]
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.dist.get(u, v)
    }

    /// Number of shortest `u,v`-paths, saturating at `u128::MAX`.
    #[inline]
    pub fn geodesic_count(&self, u: usize, v: usize) -> u128 {
        self.sigma[u * self.n() + v]
    }

    /// `true` if edge `{a, b}` lies on some shortest `u,v`-path.
    pub fn edge_on_geodesic(&self, u: usize, v: usize, a: usize, b: usize) -> bool {
        self.geodesic_orientation(u, v, a, b).is_some()
    }

    /// If edge `{a, b}` lies on a shortest `u,v`-path, returns it oriented
    /// as traversed from `u` to `v`.
    pub fn geodesic_orientation(
        &self,
        u: usize,
        v: usize,
        a: usize,
        b: usize,
    ) -> Option<(usize, usize)> {
        let d = self.distance(u, v);
        if self.distance(u, a) + 1 + self.distance(b, v) == d {
            Some((a, b))
        } else if self.distance(u, b) + 1 + self.distance(a, v) == d {
            Some((b, a))
        } else {
            None
        }
    }

    /// Number of shortest `u,v`-paths through edge `{a, b}`.
    pub fn geodesics_through_count(&self, u: usize, v: usize, a: usize, b: usize) -> u128 {
        match self.geodesic_orientation(u, v, a, b) {
            Some((p, q)) => self
                .geodesic_count(u, p)
                .saturating_mul(self.geodesic_count(q, v)),
            None => 0,
        }
    }

    /// Closed neighborhood `N[u]` as a sorted list.
    pub fn closed_neighborhood(&self, u: usize) -> Vec<usize> {
        let mut out = self.adj[u].clone();
        let pos = out.binary_search(&u).unwrap_err();
        out.insert(pos, u);
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .field("provenance", &self.provenance)
            .finish()
    }
}

/// Structural equality: same vertex count and edge set. Provenance is ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.edges == other.edges
    }
}

impl Eq for Graph {}
