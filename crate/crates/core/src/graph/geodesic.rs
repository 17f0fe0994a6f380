use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{DistanceMatrix, Graph};

/// A path given by its vertex sequence. Whether it is a shortest path is a
/// property checked against a graph, see [`GeodesicPath::is_geodesic`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeodesicPath(Vec<usize>);

impl GeodesicPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        GeodesicPath(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn start(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn end(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Consecutive vertex pairs.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    /// Edge indices in `g` along the path, `None` for a non-adjacent step.
    pub fn edge_ids<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = Option<usize>> + 'a {
        self.steps().map(move |(a, b)| g.edge_id(a, b))
    }

    /// Walk in `g` whose length equals the distance between its ends.
    /// Such a walk cannot repeat a vertex.
    pub fn is_geodesic(&self, g: &Graph) -> bool {
        match (self.start(), self.end()) {
            (Some(s), Some(t)) => {
                s < g.n()
                    && t < g.n()
                    && self.steps().all(|(a, b)| g.is_adjacent(a, b))
                    && self.len() == g.distance(s, t)
            }
            _ => false,
        }
    }
}

impl fmt::Display for GeodesicPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// More geodesics than the caller's cap; carries the exact count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{count} shortest paths exceed the cap")]
pub struct Overflow {
    pub count: u128,
}

/// All shortest `u,v`-paths in lexicographic order of their vertex sequences.
pub fn enumerate_geodesics(
    g: &Graph,
    u: usize,
    v: usize,
    cap: usize,
) -> Result<Vec<GeodesicPath>, Overflow> {
    let count = g.geodesic_count(u, v);
    if count > cap as u128 {
        return Err(Overflow { count });
    }
    Ok(GeodesicIter::new(g, u, v).collect())
}

pub(super) fn count_all_geodesics(adj: &[Vec<usize>], dist: &DistanceMatrix) -> Vec<u128> {
    let n = adj.len();
    let mut sigma = vec![0u128; n * n];
    let mut order: Vec<usize> = (0..n).collect();
    for s in 0..n {
        order.sort_by_key(|&w| dist.get(s, w));
        let row = s * n;
        sigma[row + s] = 1;
        for &w in order.iter().skip(1) {
            let dw = dist.get(s, w);
            let total = adj[w]
                .iter()
                .filter(|&&x| dist.get(s, x) + 1 == dw)
                .fold(0u128, |acc, &x| acc.saturating_add(sigma[row + x]));
            sigma[row + w] = total;
        }
    }
    sigma
}

/// Lazy lexicographic iteration over the shortest paths between two
/// vertices, walking the shortest-path DAG towards the target.
pub struct GeodesicIter<'g> {
    g: &'g Graph,
    target: usize,
    path: Vec<usize>,
    // cursor[i]: position in the neighbor list of path[i] of path[i + 1].
    cursor: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'g> GeodesicIter<'g> {
    pub fn new(g: &'g Graph, from: usize, to: usize) -> Self {
        GeodesicIter {
            g,
            target: to,
            path: vec![from],
            cursor: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn next_step(&self, x: usize, start: usize) -> Option<usize> {
        let want = self.g.distance(x, self.target).checked_sub(1)?;
        self.g.neighbors(x)[start..]
            .iter()
            .position(|&w| self.g.distance(w, self.target) == want)
            .map(|p| p + start)
    }

    fn descend(&mut self) {
        loop {
            let x = *self.path.last().unwrap();
            if x == self.target {
                return;
            }
            let pos = self
                .next_step(x, 0)
                .expect("a vertex off the target always has a step closer to it");
            self.cursor.push(pos);
            self.path.push(self.g.neighbors(x)[pos]);
        }
    }
}

impl Iterator for GeodesicIter<'_> {
    type Item = GeodesicPath;

    fn next(&mut self) -> Option<GeodesicPath> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(GeodesicPath(self.path.clone()));
        }
        loop {
            let Some(pos) = self.cursor.pop() else {
                self.done = true;
                return None;
            };
            self.path.pop();
            let x = *self.path.last().unwrap();
            if let Some(next) = self.next_step(x, pos + 1) {
                self.cursor.push(next);
                self.path.push(self.g.neighbors(x)[next]);
                self.descend();
                return Some(GeodesicPath(self.path.clone()));
            }
        }
    }
}

/// Lazy iteration over the shortest `u,v`-paths that use edge `{a, b}`,
/// in lexicographic order.
pub struct GeodesicsThrough<'g> {
    g: &'g Graph,
    prefixes: GeodesicIter<'g>,
    current: Option<GeodesicPath>,
    suffixes: Option<GeodesicIter<'g>>,
    join: usize,
    target: usize,
}

impl<'g> GeodesicsThrough<'g> {
    /// Empty when the edge lies on no shortest `u,v`-path.
    pub fn new(g: &'g Graph, u: usize, v: usize, a: usize, b: usize) -> Self {
        let (p, q, empty) = match g.geodesic_orientation(u, v, a, b) {
            Some((p, q)) => (p, q, false),
            None => (u, v, true),
        };
        let mut prefixes = GeodesicIter::new(g, u, p);
        prefixes.done = empty;
        GeodesicsThrough {
            g,
            prefixes,
            current: None,
            suffixes: None,
            join: q,
            target: v,
        }
    }
}

impl Iterator for GeodesicsThrough<'_> {
    type Item = GeodesicPath;

    fn next(&mut self) -> Option<GeodesicPath> {
        loop {
            if let (Some(prefix), Some(suffixes)) = (&self.current, &mut self.suffixes) {
                if let Some(suffix) = suffixes.next() {
                    let mut vertices = prefix.0.clone();
                    vertices.extend(suffix.0);
                    return Some(GeodesicPath(vertices));
                }
            }
            self.current = Some(self.prefixes.next()?);
            self.suffixes = Some(GeodesicIter::new(self.g, self.join, self.target));
        }
    }
}
