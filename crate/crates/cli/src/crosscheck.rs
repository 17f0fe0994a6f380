//! Parameter sweeps comparing closed forms, constructions and search.

use anyhow::{anyhow, bail, ensure, Result};
use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;
use sge_core::constructions::{
    construct_bipartite, construct_multipartite, construct_prism, Construction,
};
use sge_core::formulas::{
    sge_complete_bipartite, sge_complete_multipartite, sge_path_times_complete, MultipartiteSpec,
    PrismSpec,
};
use sge_core::solver::{sge_exact, sge_oracle, SolveError, SolverOptions};
use sge_core::validate_witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Bipartite,
    Multipartite,
    Prism,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Bipartite { n: usize, m: usize },
    Multipartite(MultipartiteSpec),
    Prism(PrismSpec),
}

impl Instance {
    pub fn label(&self) -> String {
        match self {
            Instance::Bipartite { n, m } => format!("K_{{{n},{m}}}"),
            Instance::Multipartite(spec) => {
                let parts: Vec<String> = spec.parts().iter().map(|p| p.to_string()).collect();
                format!("K_{{{}}}", parts.join(","))
            }
            Instance::Prism(s) => format!("P_{} x K_{}", s.n, s.m),
        }
    }

    pub fn formula(&self) -> usize {
        match self {
            Instance::Bipartite { n, m } => {
                sge_complete_bipartite(*n, *m).expect("range keeps parts >= 2")
            }
            Instance::Multipartite(spec) => sge_complete_multipartite(spec),
            Instance::Prism(spec) => sge_path_times_complete(spec),
        }
    }

    pub fn construct(&self) -> Construction {
        match self {
            Instance::Bipartite { n, m } => {
                construct_bipartite(*n, *m).expect("range keeps parts >= 2")
            }
            Instance::Multipartite(spec) => construct_multipartite(spec),
            Instance::Prism(spec) => construct_prism(spec),
        }
    }
}

/// One `name=lo..hi` term; `hi` may name an earlier variable.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RangeTerm {
    name: String,
    lo: Bound,
    hi: Bound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Bound {
    Const(usize),
    Var(String),
}

impl Bound {
    fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        ensure!(!text.is_empty(), "empty range bound");
        Ok(match text.parse() {
            Ok(v) => Bound::Const(v),
            Err(_) => Bound::Var(text.to_string()),
        })
    }

    fn eval(&self, env: &[(String, usize)]) -> Result<usize> {
        match self {
            Bound::Const(v) => Ok(*v),
            Bound::Var(name) => env
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| *v)
                .ok_or_else(|| anyhow!("range bound `{name}` refers to an unbound variable")),
        }
    }
}

fn parse_range(text: &str) -> Result<Vec<RangeTerm>> {
    text.split(',')
        .map(|term| {
            let (name, span) = term
                .split_once('=')
                .ok_or_else(|| anyhow!("range term `{term}` is not `name=lo..hi`"))?;
            let (lo, hi) = match span.split_once("..") {
                Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
                None => (span, span),
            };
            Ok(RangeTerm {
                name: name.trim().to_string(),
                lo: Bound::parse(lo)?,
                hi: Bound::parse(hi)?,
            })
        })
        .collect()
}

// All assignments of the range variables, inclusive bounds, in nested order.
fn expand(terms: &[RangeTerm]) -> Result<Vec<Vec<(String, usize)>>> {
    let mut out = vec![Vec::new()];
    for term in terms {
        let mut next = Vec::new();
        for env in out {
            let (lo, hi) = (term.lo.eval(&env)?, term.hi.eval(&env)?);
            for v in lo..=hi {
                let mut e = env.clone();
                e.push((term.name.clone(), v));
                next.push(e);
            }
        }
        out = next;
    }
    Ok(out)
}

fn lookup(env: &[(String, usize)], name: &str) -> Result<usize> {
    env.iter()
        .find(|(n, _)| n == name)
        .map(|(_, v)| *v)
        .ok_or_else(|| anyhow!("range must bind `{name}`"))
}

/// Sorted part lists with every part in `2..=part_max`, between 2 and
/// `k_max` parts, summing to at most `sum_max`.
pub fn part_lists(sum_max: usize, part_max: usize, k_max: usize) -> Vec<Vec<usize>> {
    fn grow(
        cur: &mut Vec<usize>,
        sum: usize,
        lim: (usize, usize, usize),
        out: &mut Vec<Vec<usize>>,
    ) {
        let (sum_max, part_max, k_max) = lim;
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        if cur.len() == k_max {
            return;
        }
        let start = cur.last().copied().unwrap_or(2);
        for p in start..=part_max {
            if sum + p > sum_max {
                break;
            }
            cur.push(p);
            grow(cur, sum + p, lim, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), 0, (sum_max, part_max, k_max), &mut out);
    out
}

pub struct SweepParams {
    pub range: Option<String>,
    pub sum_max: usize,
    pub part_max: Option<usize>,
    pub k_max: Option<usize>,
}

pub fn instances(family: Family, params: &SweepParams) -> Result<Vec<Instance>> {
    match family {
        Family::Multipartite => {
            let parts = part_lists(
                params.sum_max,
                params.part_max.unwrap_or(params.sum_max),
                params.k_max.unwrap_or(usize::MAX),
            );
            Ok(parts
                .into_iter()
                .map(|p| Instance::Multipartite(MultipartiteSpec::new(p).expect("parts >= 2")))
                .collect())
        }
        Family::Bipartite | Family::Prism => {
            let default = if family == Family::Bipartite {
                "n=2..5,m=2..n"
            } else {
                "n=2..4,m=3"
            };
            let terms = parse_range(params.range.as_deref().unwrap_or(default))?;
            let mut out = Vec::new();
            for env in expand(&terms)? {
                let (n, m) = (lookup(&env, "n")?, lookup(&env, "m")?);
                out.push(if family == Family::Bipartite {
                    if m < 2 || n < 2 {
                        bail!(
                            "K_{{{n},{m}}} is outside the bipartite formula's range (parts >= 2)"
                        );
                    }
                    Instance::Bipartite {
                        n: n.max(m),
                        m: n.min(m),
                    }
                } else {
                    Instance::Prism(PrismSpec::new(n, m)?)
                });
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchKind {
    Oracle,
    Exact,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub instance: String,
    pub vertices: usize,
    pub formula: usize,
    pub construction_size: usize,
    pub construction_valid: bool,
    pub search: SearchKind,
    pub search_value: Option<usize>,
    pub budget_exhausted: bool,
    pub agree: bool,
}

pub struct Limits {
    pub oracle_max: usize,
    pub exact_max: usize,
    pub budget: u64,
}

pub fn check(instance: &Instance, limits: &Limits) -> Row {
    let formula = instance.formula();
    let c = instance.construct();
    let n = c.graph.n();
    let construction_valid = validate_witness(&c.graph, &c.witness).is_ok_and(|r| r.valid);
    let (search, outcome) = if n <= limits.oracle_max {
        (
            SearchKind::Oracle,
            Some(sge_oracle(&c.graph, limits.oracle_max)),
        )
    } else if n <= limits.exact_max {
        let opts = SolverOptions {
            budget: limits.budget,
            threads: 1,
        };
        (SearchKind::Exact, Some(sge_exact(&c.graph, &opts)))
    } else {
        (SearchKind::Skipped, None)
    };
    let (search_value, budget_exhausted) = match outcome {
        Some(Ok(r)) => (Some(r.value), false),
        Some(Err(SolveError::BudgetExhausted { .. })) => (None, true),
        Some(Err(SolveError::InstanceTooLarge { .. })) | None => (None, false),
    };
    let agree =
        construction_valid && c.set().len() == formula && search_value.is_none_or(|v| v == formula);
    Row {
        instance: instance.label(),
        vertices: n,
        formula,
        construction_size: c.set().len(),
        construction_valid,
        search,
        search_value,
        budget_exhausted,
        agree,
    }
}

pub fn run(instances: &[Instance], limits: &Limits, threads: usize) -> Result<Vec<Row>> {
    if threads <= 1 {
        return Ok(instances.iter().map(|i| check(i, limits)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?;
    Ok(pool.install(|| instances.par_iter().map(|i| check(i, limits)).collect()))
}
