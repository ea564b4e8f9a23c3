//! Text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based
//! endpoints. `#` starts a comment. Instance files append a final line
//! `k <budget>`.
//!
//! DIMACS: `p edge n m`, then `e u v` lines with 1-based endpoints; `c`
//! lines are comments. Edges listed in both directions are merged.

use std::fmt::Write;
use std::path::Path;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::extended_clique::ExtendedClique;
use crate::graph::{Edge, Graph};
use crate::reduction::EdsInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl Format {
    /// `.col` selects DIMACS; anything else is read as an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("col") => Format::Dimacs,
            _ => Format::EdgeList,
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} '{tok}'")))
}

/// Reads an edge list; a trailing `k` line is accepted and ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with_budget(text).map(|(g, _)| g)
}

/// Reads an instance file; the trailing `k` line is required.
pub fn parse_instance(text: &str) -> Result<EdsInstance> {
    let (graph, budget) = parse_edge_list_with_budget(text)?;
    let budget = budget.ok_or_else(|| parse_err(0, "missing 'k <budget>' line"))?;
    Ok(EdsInstance::new(graph, budget))
}

/// Reads an edge list and its optional trailing `k` line.
pub fn parse_edge_list_with_budget(text: &str) -> Result<(Graph, Option<usize>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut budget = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if budget.is_some() {
            return Err(parse_err(lineno, "content after the 'k' line"));
        }
        let mut toks = line.split_whitespace();
        if line.starts_with('k') {
            toks.next();
            budget = Some(number(toks.next(), lineno, "budget")?);
        } else if header.is_none() {
            let n = number(toks.next(), lineno, "vertex count")?;
            let m = number(toks.next(), lineno, "edge count")?;
            header = Some((n, m));
        } else {
            let u = number(toks.next(), lineno, "endpoint")?;
            let v = number(toks.next(), lineno, "endpoint")?;
            edges.push((u, v));
        }
        if toks.next().is_some() {
            return Err(parse_err(lineno, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing 'n m' header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok((Graph::new(n, edges)?, budget))
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                let kind = toks.next();
                if !matches!(kind, Some("edge") | Some("col")) {
                    return Err(parse_err(lineno, "expected 'p edge n m'"));
                }
                n = Some(number::<usize>(toks.next(), lineno, "vertex count")?);
                let _: usize = number(toks.next(), lineno, "edge count")?;
            }
            Some("e") => {
                if n.is_none() {
                    return Err(parse_err(lineno, "edge before 'p' line"));
                }
                let u: usize = number(toks.next(), lineno, "endpoint")?;
                let v: usize = number(toks.next(), lineno, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(lineno, "DIMACS vertices are 1-based"));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(lineno, format!("unknown line type '{other}'"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing 'p edge n m' line"))?;
    Graph::new(n, edges)
}

/// Canonical edge list: header, then edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    out.push_str(&write_edges(g.edges()));
    out
}

pub fn write_instance(inst: &EdsInstance) -> String {
    let mut out = write_edge_list(&inst.graph);
    writeln!(out, "k {}", inst.budget).unwrap();
    out
}

/// One `u v` line per edge, in the order given.
pub fn write_edges(edges: &[Edge]) -> String {
    edges.iter().fold(String::new(), |mut out, (u, v)| {
        writeln!(out, "{u} {v}").unwrap();
        out
    })
}

/// One `vertex color` line per vertex.
pub fn write_coloring(c: &Coloring) -> String {
    c.colors()
        .iter()
        .enumerate()
        .fold(String::new(), |mut out, (v, col)| {
            writeln!(out, "{v} {col}").unwrap();
            out
        })
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut colors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let v: usize = number(toks.next(), i + 1, "vertex")?;
        let c: usize = number(toks.next(), i + 1, "color")?;
        if v != colors.len() {
            return Err(parse_err(i + 1, format!("expected vertex {}", colors.len())));
        }
        colors.push(c);
    }
    Coloring::new(colors)
}

/// `I: v1 v2 ...` followed by one `M: u v` line per matching edge.
pub fn write_extended_clique(ec: &ExtendedClique) -> String {
    let mut out = String::from("I:");
    for v in ec.independent() {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    for (u, v) in ec.matching() {
        writeln!(out, "M: {u} {v}").unwrap();
    }
    out
}

pub fn parse_extended_clique(text: &str) -> Result<ExtendedClique> {
    let mut independent = Vec::new();
    let mut matching = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if let Some(rest) = line.strip_prefix("I:") {
            for tok in rest.split_whitespace() {
                independent.push(number(Some(tok), lineno, "vertex")?);
            }
        } else if let Some(rest) = line.strip_prefix("M:") {
            let mut toks = rest.split_whitespace();
            let u = number(toks.next(), lineno, "endpoint")?;
            let v = number(toks.next(), lineno, "endpoint")?;
            matching.push((u, v));
        } else if !line.trim().is_empty() {
            return Err(parse_err(lineno, "expected 'I:' or 'M:'"));
        }
    }
    Ok(ExtendedClique::new(independent, matching))
}
