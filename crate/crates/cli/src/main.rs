mod crosscheck;
mod input;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sge_core::constructions::{construct_bipartite, construct_multipartite, construct_prism};
use sge_core::formulas::{
    sge_complete, sge_complete_bipartite, sge_complete_multipartite, sge_path_times_complete,
    FormulaError, MultipartiteSpec, PrismSpec,
};
use sge_core::graph::DuplicatePolicy;
use sge_core::io::write_edge_list;
use sge_core::solver::{sge_exact, sge_oracle, SolveError, SolverOptions, ORACLE_MAX_VERTICES};
use sge_core::verifier::{validate_witness, Witness, DEFAULT_BUDGET};

use crate::crosscheck::{Family, Limits, SweepParams};
use crate::input::{read_graph, GraphFormat};
use crate::report::{fingerprint, BudgetUse, Exit, RunReport};

#[derive(Parser)]
#[command(
    name = "sge",
    version,
    about = "Strong edge geodetic sets: compute, verify, construct"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute sg_e of a graph exactly
    Compute {
        graph: PathBuf,
        /// Node-expansion budget for the search
        #[arg(long, env = "SGE_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Use the brute-force reference solver instead
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = ORACLE_MAX_VERTICES)]
        oracle_max: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
        format: GraphFormat,
        /// Reject repeated edges instead of merging them
        #[arg(long)]
        strict: bool,
        /// Include wall-clock time in the report
        #[arg(long)]
        timing: bool,
    },
    /// Check a witness (set plus paths) against a graph
    Verify {
        graph: PathBuf,
        witness: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
        format: GraphFormat,
    },
    /// Evaluate a closed-form value
    Formula {
        #[arg(value_enum)]
        family: FormulaFamily,
        params: Vec<usize>,
    },
    /// Build a graph with an explicit optimal set and check it
    Construct {
        #[arg(value_enum)]
        family: ConstructFamily,
        params: Vec<usize>,
        /// Write the graph as an edge list here
        #[arg(long)]
        emit_graph: Option<PathBuf>,
        /// Write the witness JSON here
        #[arg(long)]
        emit_witness: Option<PathBuf>,
    },
    /// Sweep a family comparing formula, construction and search
    Crosscheck {
        #[arg(long, value_enum)]
        family: Family,
        /// e.g. `n=2..5,m=2..n` (bipartite, prism)
        #[arg(long)]
        range: Option<String>,
        /// Largest total order of a part list (multipartite)
        #[arg(long, default_value_t = 9)]
        sum_max: usize,
        #[arg(long)]
        part_max: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
        /// Graphs up to this order are checked by the brute-force solver
        #[arg(long, default_value_t = ORACLE_MAX_VERTICES)]
        oracle_max: usize,
        /// Larger graphs up to this order are checked by the exact solver
        #[arg(long, default_value_t = 12)]
        exact_max: usize,
        #[arg(long, env = "SGE_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormulaFamily {
    Bipartite,
    Multipartite,
    Prism,
    Complete,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructFamily {
    Bipartite,
    Multipartite,
    Prism,
}

/// An error with the exit status it maps to.
struct Failure {
    exit: Exit,
    error: anyhow::Error,
}

impl Failure {
    fn input(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            exit: Exit::Input,
            error: error.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure {
            exit: Exit::Internal,
            error,
        }
    }
}

fn two_params(params: &[usize], family: &str) -> Result<(usize, usize), Failure> {
    match params {
        [a, b] => Ok((*a, *b)),
        _ => Err(Failure::input(anyhow::anyhow!(
            "{family} takes exactly two parameters, got {}",
            params.len()
        ))),
    }
}

fn formula_error(e: FormulaError) -> Failure {
    Failure::input(e)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn compute(
    graph: &Path,
    options: SolverOptions,
    oracle: Option<usize>,
    format: GraphFormat,
    duplicates: DuplicatePolicy,
    timing: bool,
) -> Result<(RunReport, Exit), Failure> {
    let g = read_graph(graph, format, duplicates).map_err(Failure::input)?;
    let start = Instant::now();
    let outcome = match oracle {
        Some(max) => sge_oracle(&g, max),
        None => sge_exact(&g, &options),
    };
    let elapsed = start.elapsed();
    let (result, exit, used) = match outcome {
        Ok(r) => {
            let used = r.nodes_expanded;
            let mut value = serde_json::to_value(&r).map_err(anyhow::Error::from)?;
            value["status"] = json!("solved");
            (value, Exit::Ok, used)
        }
        Err(SolveError::BudgetExhausted {
            lower,
            upper,
            nodes,
        }) => (
            json!({"status": "unknown", "lower": lower, "upper": upper}),
            Exit::Budget,
            nodes,
        ),
        Err(e @ SolveError::InstanceTooLarge { .. }) => return Err(Failure::input(e)),
    };
    let mut report = RunReport::new("compute", result);
    report.input_fingerprint = Some(fingerprint(&g));
    if oracle.is_none() {
        report.budget = Some(BudgetUse {
            limit: options.budget,
            used,
        });
    }
    if timing {
        report.timing_ms = Some(elapsed.as_secs_f64() * 1e3);
    }
    Ok((report, exit))
}

fn verify(graph: &Path, witness: &Path, format: GraphFormat) -> Result<(RunReport, Exit), Failure> {
    let g = read_graph(graph, format, DuplicatePolicy::Dedupe).map_err(Failure::input)?;
    let text = fs::read_to_string(witness)
        .with_context(|| format!("reading {}", witness.display()))
        .map_err(Failure::input)?;
    let w: Witness = serde_json::from_str(&text)
        .with_context(|| format!("parsing witness {}", witness.display()))
        .map_err(Failure::input)?;
    let (result, exit) = match validate_witness(&g, &w) {
        Ok(r) => {
            let exit = if r.valid { Exit::Ok } else { Exit::Failed };
            (serde_json::to_value(&r).map_err(anyhow::Error::from)?, exit)
        }
        Err(e) => (
            json!({"valid": false, "error": e.to_string()}),
            Exit::Failed,
        ),
    };
    let mut report = RunReport::new("verify", result);
    report.input_fingerprint = Some(fingerprint(&g));
    Ok((report, exit))
}

fn formula(family: FormulaFamily, params: &[usize]) -> Result<(RunReport, Exit), Failure> {
    let value = match family {
        FormulaFamily::Bipartite => {
            let (n, m) = two_params(params, "bipartite")?;
            sge_complete_bipartite(n, m).map_err(formula_error)?
        }
        FormulaFamily::Multipartite => {
            sge_complete_multipartite(&MultipartiteSpec::new(params).map_err(formula_error)?)
        }
        FormulaFamily::Prism => {
            let (n, m) = two_params(params, "prism")?;
            sge_path_times_complete(&PrismSpec::new(n, m).map_err(formula_error)?)
        }
        FormulaFamily::Complete => match params {
            [n] if *n >= 1 => sge_complete(*n),
            _ => {
                return Err(Failure::input(anyhow::anyhow!(
                    "complete takes one positive order"
                )))
            }
        },
    };
    let result = json!({"family": family_name(family), "params": params, "value": value});
    Ok((RunReport::new("formula", result), Exit::Ok))
}

fn family_name(family: FormulaFamily) -> &'static str {
    match family {
        FormulaFamily::Bipartite => "bipartite",
        FormulaFamily::Multipartite => "multipartite",
        FormulaFamily::Prism => "prism",
        FormulaFamily::Complete => "complete",
    }
}

fn construct(
    family: ConstructFamily,
    params: &[usize],
    emit_graph: Option<&Path>,
    emit_witness: Option<&Path>,
) -> Result<(RunReport, Exit), Failure> {
    let (construction, expected, name) = match family {
        ConstructFamily::Bipartite => {
            let (n, m) = two_params(params, "bipartite")?;
            let c = construct_bipartite(n, m).map_err(Failure::input)?;
            (
                c,
                sge_complete_bipartite(n, m).map_err(formula_error)?,
                "bipartite",
            )
        }
        ConstructFamily::Multipartite => {
            let spec = MultipartiteSpec::new(params).map_err(formula_error)?;
            (
                construct_multipartite(&spec),
                sge_complete_multipartite(&spec),
                "multipartite",
            )
        }
        ConstructFamily::Prism => {
            let (n, m) = two_params(params, "prism")?;
            let spec = PrismSpec::new(n, m).map_err(formula_error)?;
            (
                construct_prism(&spec),
                sge_path_times_complete(&spec),
                "prism",
            )
        }
    };
    let g = &construction.graph;
    let w = &construction.witness;
    let check = validate_witness(g, w).map_err(anyhow::Error::from)?;
    let self_verified = check.valid && w.set.len() == expected;

    if let Some(path) = emit_graph {
        write_file(path, &write_edge_list(g))?;
    }
    if let Some(path) = emit_witness {
        let json = serde_json::to_string(w).map_err(anyhow::Error::from)?;
        write_file(path, &(json + "\n"))?;
    }
    let mut result = json!({
        "family": name,
        "params": params,
        "vertices": g.n(),
        "edges": g.m(),
        "formula_value": expected,
        "set": w.set,
        "set_size": w.set.len(),
        "valid": check.valid,
        "self_verified": self_verified,
    });
    if emit_witness.is_none() {
        result["witness"] = serde_json::to_value(w).map_err(anyhow::Error::from)?;
    }
    let mut report = RunReport::new("construct", result);
    report.input_fingerprint = Some(fingerprint(g));
    let exit = if self_verified {
        Exit::Ok
    } else {
        Exit::Internal
    };
    if !self_verified {
        eprintln!("construction failed its own verification");
    }
    Ok((report, exit))
}

fn run(cli: Cli) -> Result<(RunReport, Exit), Failure> {
    match cli.command {
        Command::Compute {
            graph,
            budget,
            oracle,
            oracle_max,
            threads,
            format,
            strict,
            timing,
        } => {
            let duplicates = if strict {
                DuplicatePolicy::Reject
            } else {
                DuplicatePolicy::Dedupe
            };
            let options = SolverOptions { budget, threads };
            compute(
                &graph,
                options,
                oracle.then_some(oracle_max),
                format,
                duplicates,
                timing,
            )
        }
        Command::Verify {
            graph,
            witness,
            format,
        } => verify(&graph, &witness, format),
        Command::Formula { family, params } => formula(family, &params),
        Command::Construct {
            family,
            params,
            emit_graph,
            emit_witness,
        } => construct(
            family,
            &params,
            emit_graph.as_deref(),
            emit_witness.as_deref(),
        ),
        Command::Crosscheck {
            family,
            range,
            sum_max,
            part_max,
            k_max,
            oracle_max,
            exact_max,
            budget,
            threads,
        } => {
            let sweep = SweepParams {
                range,
                sum_max,
                part_max,
                k_max,
            };
            let instances = crosscheck::instances(family, &sweep).map_err(Failure::input)?;
            let limits = Limits {
                oracle_max,
                exact_max,
                budget,
            };
            let rows = crosscheck::run(&instances, &limits, threads)?;
            let disagreements = rows.iter().filter(|r| !r.agree).count();
            let exhausted = rows.iter().filter(|r| r.budget_exhausted).count();
            for r in rows.iter().filter(|r| !r.agree) {
                eprintln!("disagreement: {}", r.instance);
            }
            let exit = if disagreements > 0 {
                Exit::Failed
            } else if exhausted > 0 {
                Exit::Budget
            } else {
                Exit::Ok
            };
            let result = json!({
                "instances": rows.len(),
                "disagreements": disagreements,
                "budget_exhausted": exhausted,
                "rows": rows,
            });
            Ok((RunReport::new("crosscheck", result), exit))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, exit)) => {
            report.print();
            ExitCode::from(exit as u8)
        }
        Err(Failure { exit, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(exit as u8)
        }
    }
}
