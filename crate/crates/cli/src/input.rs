use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use sge_core::graph::DuplicatePolicy;
use sge_core::io::{parse_edge_list, parse_graph6};
use sge_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// `.g6`/`.graph6` files are graph6, otherwise sniff the first line
    Auto,
    Edgelist,
    Graph6,
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| {
            let fields: Vec<_> = l.split_whitespace().collect();
            fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok())
        })
}

fn parse_single_graph6(text: &str) -> Result<Graph> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    match lines.as_slice() {
        [line] => Ok(parse_graph6(line)?),
        [] => bail!("graph6 input is empty"),
        _ => bail!("graph6 input holds {} graphs, expected one", lines.len()),
    }
}

pub fn read_graph(path: &Path, format: GraphFormat, duplicates: DuplicatePolicy) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let graph6_ext = path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e == "g6" || e == "graph6");
    let format = match format {
        GraphFormat::Auto if graph6_ext => GraphFormat::Graph6,
        GraphFormat::Auto if looks_like_edge_list(&text) => GraphFormat::Edgelist,
        GraphFormat::Auto => GraphFormat::Graph6,
        f => f,
    };
    let graph = match format {
        GraphFormat::Edgelist => parse_edge_list(&text, duplicates)?,
        _ => parse_single_graph6(&text)?,
    };
    Ok(graph)
}
