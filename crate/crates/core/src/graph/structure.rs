//! Neighborhood predicates: dominant neighbors, twins, simplicial and
//! universal vertices.

use super::Graph;

// N[u] ⊆ N[v] for adjacent u, v. Both lists are sorted.
fn closed_subset(g: &Graph, u: usize, v: usize) -> bool {
    let nv = g.neighbors(v);
    g.neighbors(u)
        .iter()
        .all(|&x| x == v || nv.binary_search(&x).is_ok())
}

/// Neighbors `v` of `u` with `N[u] ⊆ N[v]`, ascending.
pub fn dominant_neighbors(g: &Graph, u: usize) -> Vec<usize> {
    g.neighbors(u)
        .iter()
        .copied()
        .filter(|&v| closed_subset(g, u, v))
        .collect()
}

pub fn has_dominant_neighbor(g: &Graph, u: usize) -> bool {
    g.neighbors(u).iter().any(|&v| closed_subset(g, u, v))
}

/// Pairs `(u, v)`, `u < v`, with `N[u] = N[v]`. Such vertices are always
/// adjacent, so only edges are inspected.
pub fn twins(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| g.degree(u) == g.degree(v) && closed_subset(g, u, v))
        .collect()
}

/// Vertices whose open neighborhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .filter(|&u| {
            let nb = g.neighbors(u);
            nb.iter()
                .enumerate()
                .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.is_adjacent(a, b)))
        })
        .collect()
}

/// Vertices of degree `n - 1`.
pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&u| g.degree(u) + 1 == g.n()).collect()
}
