//! Strong edge geodetic sets.
//!
//! A vertex set `X` of a connected graph is a strong edge geodetic set when
//! every pair of vertices of `X` can be given at most one shortest path
//! between them so that the chosen paths cover every edge. This crate
//! decides that property, computes the minimum size `sg_e(G)` exactly for
//! small graphs, evaluates the known closed forms for complete
//! multipartite graphs and `P_n □ K_m`, and builds explicit optimal sets
//! for those families.

pub mod constructions;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod solver;
pub mod verifier;

pub use graph::{Graph, GraphError};
pub use solver::{sge_exact, sge_oracle, SgeResult, SolveError, SolverOptions};
pub use verifier::{validate_witness, Witness};
