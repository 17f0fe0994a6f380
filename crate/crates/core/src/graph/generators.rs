//! Standard graph families. These panic on parameters that would give an
//! empty or disconnected graph.

use super::{Graph, Provenance};

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).unwrap_or_else(|e| panic!("invalid generator parameters: {e}"))
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(n, &edges).with_provenance(Provenance::Complete { n })
}

/// `P_n` on vertices `0-1-…-(n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    build(n, &edges)
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    build(n, &edges)
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    build(leaves + 1, &edges)
}

/// Cycle `C_rim` on `0..rim` plus a hub `rim` adjacent to all of it.
pub fn wheel(rim: usize) -> Graph {
    assert!(rim >= 3, "a wheel needs a rim of at least 3 vertices");
    let mut edges: Vec<_> = (0..rim).map(|v| (v, (v + 1) % rim)).collect();
    edges.extend((0..rim).map(|v| (v, rim)));
    build(rim + 1, &edges)
}

/// Complete multipartite graph with parts laid out consecutively in the
/// given order: part 0 is `0..parts[0]`, part 1 follows, and so on.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    build(n, &edges).with_provenance(Provenance::CompleteMultipartite { parts: sorted })
}

/// `K_{n,m}` with the `n`-side on `0..n` and the `m`-side on `n..n+m`.
pub fn complete_bipartite(n: usize, m: usize) -> Graph {
    complete_multipartite(&[n, m])
}

/// `G □ H`. Vertex `(a, b)` gets index `a * n(H) + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.m() + h.n() * g.m());
    for a in 0..g.n() {
        for &(b, c) in h.edges() {
            edges.push((a * nh + b, a * nh + c));
        }
    }
    for &(a, c) in g.edges() {
        for b in 0..nh {
            edges.push((a * nh + b, c * nh + b));
        }
    }
    build(g.n() * nh, &edges)
}

/// `P_n □ K_m`; vertex `(i, j)` with `i` in `0..n`, `j` in `0..m` is `i * m + j`.
pub fn path_times_complete(n: usize, m: usize) -> Graph {
    cartesian_product(&path(n), &complete(m))
        .with_provenance(Provenance::PathTimesComplete { n, m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::universal_vertices;

    fn degree_sequence(g: &Graph) -> Vec<usize> {
        let mut d: Vec<_> = (0..g.n()).map(|u| g.degree(u)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn p2_box_p2_is_c4() {
        let g = cartesian_product(&path(2), &path(2));
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert_eq!(degree_sequence(&g), vec![2, 2, 2, 2]);
        // 0-1-3-2-0
        assert_eq!(g, Graph::new(4, &[(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap());
    }

    #[test]
    fn prism_counts() {
        let g = path_times_complete(2, 3);
        assert_eq!((g.n(), g.m()), (6, 9));
        for n in 2..7 {
            for m in 2..6 {
                let g = path_times_complete(n, m);
                assert_eq!(g.n(), n * m);
                assert_eq!(g.m(), n * m * (m - 1) / 2 + (n - 1) * m);
            }
        }
    }

    #[test]
    fn product_degrees_add() {
        let g = wheel(4);
        let h = path(3);
        let p = cartesian_product(&g, &h);
        for a in 0..g.n() {
            for b in 0..h.n() {
                assert_eq!(p.degree(a * h.n() + b), g.degree(a) + h.degree(b));
            }
        }
    }

    #[test]
    fn multipartite_shapes() {
        let g = complete_multipartite(&[2, 2, 2]);
        assert_eq!((g.n(), g.m()), (6, 12));
        let k33 = complete_bipartite(3, 3);
        assert_eq!(k33.m(), 9);
        assert!(!k33.is_adjacent(0, 2));
        assert!(k33.is_adjacent(0, 3));
        assert_eq!(universal_vertices(&star(4)), vec![0]);
    }
}
