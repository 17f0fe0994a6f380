//! Explicit strong edge geodetic sets with their path assignments for
//! complete bipartite graphs, complete multipartite graphs and `P_n □ K_m`.
//! Every generator here produces a set whose size is the closed-form value
//! from [`crate::formulas`].

use std::collections::HashSet;

use thiserror::Error;

use crate::formulas::{FormulaError, MultipartiteSpec, PrismSpec};
use crate::graph::{complete_bipartite, complete_multipartite, path_times_complete, Graph};
use crate::verifier::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("K_n has a 1-factorization only for even n, got {n}")]
    OddOrder { n: usize },
    #[error("K_n needs at least 2 vertices for a 1-factorization, got {n}")]
    OrderTooSmall { n: usize },
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// Proper edge coloring of `K_n`, `n` even, with colors `0..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    color: Vec<usize>,
}

impl EdgeColoring {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> usize {
        self.n - 1
    }

    /// Color of edge `{i, j}`, `i != j`.
    pub fn color(&self, i: usize, j: usize) -> usize {
        assert_ne!(i, j, "no color on a loop");
        self.color[i * self.n + j]
    }

    /// Edges `(i, j)`, `i < j`, of each color.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut classes = vec![Vec::new(); self.colors()];
        for i in 0..self.n {
            for j in i + 1..self.n {
                classes[self.color(i, j)].push((i, j));
            }
        }
        classes
    }

    /// No two edges at a common vertex share a color.
    pub fn is_proper(&self) -> bool {
        (0..self.n).all(|v| {
            let mut seen = vec![false; self.colors()];
            (0..self.n)
                .filter(|&w| w != v)
                .all(|w| !std::mem::replace(&mut seen[self.color(v, w)], true))
        })
    }
}

/// The round-robin coloring of `K_n`: `c(ij) = (i + j) mod (n - 1)` for
/// `i, j <= n - 2`, and `c(i, n - 1) = 2i mod (n - 1)`.
pub fn one_factorization(n: usize) -> Result<EdgeColoring, ConstructionError> {
    if n % 2 == 1 {
        return Err(ConstructionError::OddOrder { n });
    }
    if n < 2 {
        return Err(ConstructionError::OrderTooSmall { n });
    }
    let q = n - 1;
    let mut color = vec![usize::MAX; n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            color[i * n + j] = if i == q {
                (2 * j) % q
            } else if j == q {
                (2 * i) % q
            } else {
                (i + j) % q
            };
        }
    }
    Ok(EdgeColoring { n, color })
}

/// A graph with an explicit strong edge geodetic set and its paths.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub witness: Witness,
}

impl Construction {
    pub fn set(&self) -> &[usize] {
        &self.witness.set
    }
}

type Triple = (usize, usize, Vec<usize>);

// Emits paths keyed by their pair, dropping a repeat of a pair already used.
#[derive(Default)]
struct PathFamily {
    used: HashSet<(usize, usize)>,
    paths: Vec<Triple>,
}

impl PathFamily {
    fn push(&mut self, path: Vec<usize>) {
        let (u, v) = (path[0], *path.last().unwrap());
        if self.used.insert((u.min(v), u.max(v))) {
            self.paths.push((u, v, path));
        }
    }

    fn extend(&mut self, paths: impl IntoIterator<Item = Triple>) {
        for (_, _, path) in paths {
            self.push(path);
        }
    }
}

// Paths `x_i y_j x_k` for `c(ik) = j < colored`, plus single edges from every
// x to `extra`. `xs.len()` is even.
fn even_cover(xs: &[usize], ys: &[usize], colored: usize, extra: Option<usize>) -> Vec<Triple> {
    let n = xs.len();
    let coloring = one_factorization(n).expect("even side");
    let mut out = Vec::new();
    if let Some(y) = extra {
        out.extend(xs.iter().map(|&x| (x, y, vec![x, y])));
    }
    for i in 0..n {
        for k in i + 1..n {
            let j = coloring.color(i, k);
            if j < colored {
                out.push((xs[i], xs[k], vec![xs[i], ys[j], xs[k]]));
            }
        }
    }
    out
}

/// Covers the complete bipartite graph between `xs` and `ys`,
/// `xs.len() >= ys.len() >= 2`, using all of `xs` plus the returned extra
/// vertices of `ys`.
fn bipartite_cover(xs: &[usize], ys: &[usize]) -> (Vec<usize>, Vec<Triple>) {
    let (n, m) = (xs.len(), ys.len());
    debug_assert!(n >= m && m >= 2);
    if n % 2 == 0 {
        return if n == m {
            let y = ys[n - 1];
            (vec![y], even_cover(xs, ys, n - 1, Some(y)))
        } else {
            (Vec::new(), even_cover(xs, ys, m, None))
        };
    }

    // Odd n: handle xs[..n-1] as in the even case, then patch x_{n-1}.
    let last = xs[n - 1];
    let inner = &xs[..n - 1];
    let (extras, mut paths) = if n == m {
        let y = ys[n - 2];
        let mut paths = even_cover(inner, &ys[..n - 1], n - 2, Some(y));
        paths.extend(xs.iter().map(|&x| (ys[n - 1], x, vec![ys[n - 1], x])));
        (vec![y, ys[n - 1]], paths)
    } else if n == m + 1 {
        let y = ys[m - 1];
        (vec![y], even_cover(inner, ys, m - 1, Some(y)))
    } else {
        (Vec::new(), even_cover(inner, ys, m, None))
    };
    let patched = m.min(n - 1);
    paths.extend((0..patched).map(|i| (last, xs[i], vec![last, ys[i], xs[i]])));
    (extras, paths)
}

/// `K_{n,m}` (larger side on `0..n`, smaller on `n..n+m`) with a minimum
/// strong edge geodetic set.
pub fn construct_bipartite(a: usize, b: usize) -> Result<Construction, ConstructionError> {
    let (n, m) = (a.max(b), a.min(b));
    if m < 2 {
        return Err(FormulaError::PartTooSmall { size: m }.into());
    }
    let graph = complete_bipartite(n, m);
    let xs: Vec<usize> = (0..n).collect();
    let ys: Vec<usize> = (n..n + m).collect();
    let (extras, paths) = bipartite_cover(&xs, &ys);
    let mut family = PathFamily::default();
    family.extend(paths);
    let set = xs.into_iter().chain(extras).collect();
    Ok(Construction {
        graph,
        witness: Witness::new(set, family.paths),
    })
}

/// `K_{n_1,…,n_k}` with a minimum strong edge geodetic set.
///
/// Parts are laid out in ascending size order. With two parts this is
/// [`construct_bipartite`] on `(n_2, n_1)`, so the larger part comes first.
pub fn construct_multipartite(spec: &MultipartiteSpec) -> Construction {
    let parts = spec.parts();
    if parts.len() == 2 {
        return construct_bipartite(parts[1], parts[0]).expect("parts >= 2");
    }
    let graph = complete_multipartite(parts);
    let mut ranges = Vec::with_capacity(parts.len());
    let mut start = 0;
    for &size in parts {
        ranges.push((start..start + size).collect::<Vec<usize>>());
        start += size;
    }

    let smallest = &ranges[0];
    let mut set: Vec<usize> = ranges[1..].concat();
    let mut family = PathFamily::default();
    for part in &ranges[1..] {
        let (extras, paths) = bipartite_cover(part, smallest);
        set.extend(extras);
        family.extend(paths);
    }
    for (i, a) in ranges.iter().enumerate().skip(1) {
        for b in &ranges[i + 1..] {
            for &u in a {
                for &v in b {
                    family.push(vec![u, v]);
                }
            }
        }
    }
    Construction {
        graph,
        witness: Witness::new(set, family.paths),
    }
}

/// `P_n □ K_m` with a minimum strong edge geodetic set.
///
/// Coordinates are 1-based here: `(i, j)` with `i` in `1..=n` on the path and
/// `j` in `1..=m` on the clique is vertex `(i - 1) * m + (j - 1)`.
pub fn construct_prism(spec: &PrismSpec) -> Construction {
    let PrismSpec { n, m, k, h } = *spec;
    let graph = path_times_complete(n, m);
    let at = |i: usize, j: usize| (i - 1) * m + (j - 1);
    // Along layer j from column s to column t.
    let layer = |j: usize, s: usize, t: usize| -> Vec<usize> {
        if s <= t {
            (s..=t).map(|i| at(i, j)).collect()
        } else {
            (t..=s).rev().map(|i| at(i, j)).collect()
        }
    };
    // From (s, ja) along layer ja to column c, across to jb, on to (t, jb).
    let cross = |ja: usize, s: usize, jb: usize, t: usize, c: usize| -> Vec<usize> {
        let mut p = layer(ja, s, c);
        p.extend(layer(jb, c, t));
        p
    };
    let sq = k * k;

    let mut set: Vec<usize> = (1..=k)
        .flat_map(|i| (1..=m).map(move |j| at(i * i, j)))
        .collect();
    let mut family = PathFamily::default();
    if sq > 1 {
        for j in 1..=m {
            family.push(layer(j, 1, sq));
        }
    }
    for y1 in 1..=m {
        for y2 in y1 + 1..=m {
            for i in 1..=k {
                family.push(vec![at(i * i, y1), at(i * i, y2)]);
                for l in 1..i {
                    let lo = (i - 1) * (i - 1);
                    family.push(cross(y1, l * l, y2, i * i, lo + l));
                    family.push(cross(y2, l * l, y1, i * i, i * (i - 1) + l));
                }
            }
        }
    }

    if h > 0 && h <= k {
        set.extend((2..=m).map(|j| at(n, j)));
        for y1 in 1..=m {
            for y2 in y1 + 1..=m {
                for i in 1..=h {
                    family.push(cross(y1, i * i, y2, n, sq + i));
                }
            }
        }
        for y in 2..=m {
            family.push(layer(y, 1, n));
        }
    } else if h > k {
        set.extend((1..=m).map(|j| at(n, j)));
        for y1 in 1..=m {
            for y2 in y1 + 1..=m {
                for i in 1..=k {
                    family.push(cross(y1, i * i, y2, n, sq + i));
                }
                for i in 1..=h - k {
                    family.push(cross(y1, n, y2, i * i, k * (k + 1) + i));
                }
            }
        }
        for j in 1..=m {
            family.push(layer(j, 1, n));
        }
    }

    Construction {
        graph,
        witness: Witness::new(set, family.paths),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{
        sge_complete_bipartite, sge_complete_multipartite, sge_path_times_complete,
    };
    use crate::verifier::validate_witness;

    fn assert_valid(c: &Construction) {
        let report = validate_witness(&c.graph, &c.witness).unwrap();
        assert!(report.valid, "{report:?}");
    }

    #[test]
    fn coloring_in_text_values() {
        let c = one_factorization(6).unwrap();
        assert_eq!(c.color(0, 2), 2);
        assert_eq!(c.color(1, 5), 2);
        assert_eq!(c.color(3, 4), 2);
        assert_eq!(c.classes()[2], vec![(0, 2), (1, 5), (3, 4)]);
    }

    #[test]
    fn small_colorings() {
        let c2 = one_factorization(2).unwrap();
        assert_eq!(c2.color(0, 1), 0);
        let c4 = one_factorization(4).unwrap();
        assert!(c4.is_proper());
        assert_eq!(
            c4.classes(),
            vec![
                vec![(0, 3), (1, 2)],
                vec![(0, 1), (2, 3)],
                vec![(0, 2), (1, 3)]
            ]
        );
        assert_eq!(
            one_factorization(5),
            Err(ConstructionError::OddOrder { n: 5 })
        );
        assert_eq!(
            one_factorization(0),
            Err(ConstructionError::OrderTooSmall { n: 0 })
        );
    }

    #[test]
    fn k66_paths_through_y2() {
        let c = construct_bipartite(6, 6).unwrap();
        assert_eq!(c.set().len(), 7);
        assert_valid(&c);
        let y2 = 6 + 2;
        let mut through: Vec<Vec<usize>> = c
            .witness
            .paths
            .iter()
            .filter(|p| p.path.vertices().len() == 3 && p.path.vertices()[1] == y2)
            .map(|p| p.path.vertices().to_vec())
            .collect();
        through.sort();
        assert_eq!(
            through,
            vec![vec![0, y2, 2], vec![1, y2, 5], vec![3, y2, 4]]
        );
    }

    #[test]
    fn bipartite_small_cases() {
        let c = construct_bipartite(5, 3).unwrap();
        assert_eq!(c.set().len(), 5);
        assert_valid(&c);
        let c = construct_bipartite(2, 2).unwrap();
        assert_eq!(c.set(), &[0, 1, 3]);
        assert_valid(&c);
        assert!(construct_bipartite(4, 1).is_err());
    }

    #[test]
    fn bipartite_sizes_match_formula() {
        for n in 2..=12 {
            for m in 2..=n {
                let c = construct_bipartite(n, m).unwrap();
                assert_eq!(
                    c.set().len(),
                    sge_complete_bipartite(n, m).unwrap(),
                    "({n},{m})"
                );
                assert_valid(&c);
            }
        }
    }

    #[test]
    fn multipartite_cases() {
        let c = construct_multipartite(&MultipartiteSpec::new([3, 3, 4]).unwrap());
        assert_eq!(c.set().len(), 9);
        assert_valid(&c);
        let spec = MultipartiteSpec::new([2, 3, 3]).unwrap();
        let c = construct_multipartite(&spec);
        assert_eq!(c.set().len(), sge_complete_multipartite(&spec));
        assert_valid(&c);
        let two = construct_multipartite(&MultipartiteSpec::new([2, 2]).unwrap());
        let direct = construct_bipartite(2, 2).unwrap();
        assert_eq!(two.graph, direct.graph);
        assert_eq!(two.witness, direct.witness);
    }

    #[test]
    fn prism_figures() {
        for (n, size) in [(16, 12), (19, 14), (22, 15)] {
            let spec = PrismSpec::new(n, 3).unwrap();
            let c = construct_prism(&spec);
            assert_eq!(c.set().len(), size);
            assert_eq!(sge_path_times_complete(&spec), size);
            assert_valid(&c);
        }
        // (1, y1) to (4, y2) crossing at column 2, for y1 = 1, y2 = 2
        let c = construct_prism(&PrismSpec::new(16, 3).unwrap());
        let at = |i: usize, j: usize| (i - 1) * 3 + (j - 1);
        let expected = vec![at(1, 1), at(2, 1), at(2, 2), at(3, 2), at(4, 2)];
        assert!(c
            .witness
            .paths
            .iter()
            .any(|p| p.path.vertices() == expected));
    }

    #[test]
    fn prism_paths_cross_layers_once() {
        for n in 2..=30 {
            for m in 3..=6 {
                let c = construct_prism(&PrismSpec::new(n, m).unwrap());
                for p in &c.witness.paths {
                    let crossings = p.path.steps().filter(|&(a, b)| a / m == b / m).count();
                    assert!(crossings <= 1);
                }
            }
        }
    }
}
