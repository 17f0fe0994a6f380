//! Closed-form strong edge geodetic numbers for complete graphs, complete
//! bipartite and multipartite graphs, and `P_n □ K_m`.
//!
//! Parameters outside the ranges where these values are established are
//! rejected rather than extrapolated; use the exact solver for those.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{universal_vertices, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("part of size {size} is too small: every part needs at least 2 vertices")]
    PartTooSmall { size: usize },
    #[error("a complete multipartite graph needs at least 2 parts, got {parts}")]
    TooFewParts { parts: usize },
    #[error("clique order {m} is too small: P_n x K_m needs m >= 3")]
    CliqueTooSmall { m: usize },
    #[error("path order {n} is too small: P_n x K_m needs n >= 2")]
    PathTooShort { n: usize },
}

/// Part sizes of a complete multipartite graph, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteSpec {
    parts: Vec<usize>,
}

impl MultipartiteSpec {
    /// Sorts `parts`; needs at least two parts, each of size at least 2.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self, FormulaError> {
        let mut parts = parts.into();
        parts.sort_unstable();
        if parts.len() < 2 {
            return Err(FormulaError::TooFewParts { parts: parts.len() });
        }
        if parts[0] < 2 {
            return Err(FormulaError::PartTooSmall { size: parts[0] });
        }
        Ok(MultipartiteSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Parameters of `P_n □ K_m` with `n = k² + h`, `0 <= h <= 2k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismSpec {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub h: usize,
}

impl PrismSpec {
    pub fn new(n: usize, m: usize) -> Result<Self, FormulaError> {
        if m < 3 {
            return Err(FormulaError::CliqueTooSmall { m });
        }
        if n < 2 {
            return Err(FormulaError::PathTooShort { n });
        }
        let k = n.isqrt();
        Ok(PrismSpec {
            n,
            m,
            k,
            h: n - k * k,
        })
    }
}

/// `sg_e(K_{n,m})`, arguments in either order.
pub fn sge_complete_bipartite(a: usize, b: usize) -> Result<usize, FormulaError> {
    let (n, m) = (a.max(b), a.min(b));
    if m < 2 {
        return Err(FormulaError::PartTooSmall { size: m });
    }
    Ok(if n % 2 == 0 {
        if n == m {
            n + 1
        } else {
            n
        }
    } else if n == m {
        n + 2
    } else if n == m + 1 {
        n + 1
    } else {
        n
    })
}

/// `sg_e(K_{n_1,…,n_k})`: all parts but the smallest are taken whole, plus
/// the number of extra vertices the smallest two parts call for.
pub fn sge_complete_multipartite(spec: &MultipartiteSpec) -> usize {
    let parts = spec.parts();
    let (n1, n2) = (parts[0], parts[1]);
    let rest: usize = parts[1..].iter().sum();
    rest + multipartite_extra(n1, n2)
}

/// Extra vertices of the smallest part needed on top of the other parts.
pub(crate) fn multipartite_extra(n1: usize, n2: usize) -> usize {
    match (n1.is_multiple_of(2), n2 - n1) {
        (true, 0 | 1) => 1,
        (false, 0) => 2,
        _ => 0,
    }
}

/// `sg_e(P_n □ K_m)`.
pub fn sge_path_times_complete(spec: &PrismSpec) -> usize {
    let PrismSpec { m, k, h, .. } = *spec;
    if h == 0 {
        m * k
    } else if h <= k {
        m * k + (m - 1)
    } else {
        m * k + m
    }
}

/// `sg_e(K_n) = n`, except `K_1`, whose empty edge set is covered by the
/// empty set.
pub fn sge_complete(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        n
    }
}

/// `n - 1` for graphs with exactly one universal vertex, `None` otherwise.
pub fn sge_single_universal(g: &Graph) -> Option<usize> {
    (universal_vertices(g).len() == 1).then(|| g.n() - 1)
}
