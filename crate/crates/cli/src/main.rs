use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use cobigrundy::graph::random_bipartite_bounded;
use cobigrundy::io::{self, Format};
use cobigrundy::oracles::max_independent_set_exact;
use cobigrundy::verify::{run_suite, Fault, SuiteConfig};
use cobigrundy::{
    approx_grundy, find_bipartition, grundy_number_cobipartite, grundy_number_exact,
    max_extended_clique, maximum_matching, min_edge_dominating_exact, min_maximal_matching_exact,
    random_bipartite, reduce_eds_to_grundy, total_graph, EdsInstance, Graph,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "cobigrundy",
    version,
    about = "Grundy numbers of complements of bipartite graphs"
)]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grundy number. With --structural/--approx the input is the bipartite
    /// graph and the result is for its complement.
    Grundy {
        input: PathBuf,
        #[command(flatten)]
        mode: GrundyMode,
    },
    /// Write the complement of a bipartite graph and the threshold n - k.
    Reduce {
        input: PathBuf,
        /// Edge budget; defaults to the input's 'k' line.
        k: Option<usize>,
        /// Output path [default: <input stem>.complement.el]
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the identity suite over exhaustive and random corpora.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, alias = "seeds", default_value_t = 0)]
        seed: u64,
        /// Random bipartite instances (at most 9 vertices).
        #[arg(long, default_value_t = 500)]
        count: usize,
        /// Randomized edge dominating sets for the matching check.
        #[arg(long, default_value_t = 1000)]
        lemma_count: usize,
        /// Random instances with maximum degree 3 for the reduction check.
        #[arg(long, default_value_t = 200)]
        reduction_count: usize,
        /// Include elapsed time in the report.
        #[arg(long)]
        timing: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Generate a random bipartite graph with parts of size n1 and n2.
    Gen {
        n1: usize,
        n2: usize,
        p: f64,
        seed: u64,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        retries: usize,
        /// Output path [default: stdout]
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Minimum edge dominating set and minimum maximal matching.
    Eds { input: PathBuf },
    /// Total graph as an edge list.
    Total {
        input: PathBuf,
        /// Also compute the independence number of the total graph.
        #[arg(long)]
        alpha: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Maximum extended clique of the complement of a bipartite graph.
    Ec { input: PathBuf },
}

#[derive(Args)]
#[group(multiple = false)]
struct GrundyMode {
    /// Exact search on the graph as given.
    #[arg(long)]
    exact: bool,
    /// n minus the minimum maximal matching (default).
    #[arg(long)]
    structural: bool,
    /// Lower and upper bounds from a maximum matching.
    #[arg(long)]
    approx: bool,
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    n: usize,
    m: usize,
    results: BTreeMap<&'static str, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    details: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

impl RunReport {
    fn new(command: &'static str, g: &Graph) -> Self {
        RunReport {
            command,
            n: g.n(),
            m: g.m(),
            results: BTreeMap::new(),
            witness: None,
            details: None,
            elapsed_ms: None,
        }
    }

    fn set(&mut self, key: &'static str, value: impl Into<Value>) {
        self.results.insert(key, value.into());
    }

    fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string_pretty(self).unwrap());
            return;
        }
        println!("{}: n={} m={}", self.command, self.n, self.m);
        for (key, value) in &self.results {
            match value {
                Value::String(s) => println!("{key} = {s}"),
                other => println!("{key} = {other}"),
            }
        }
        if let Some(details) = &self.details {
            print_details(details);
        }
        if let Some(witness) = &self.witness {
            print!("{witness}");
        }
        if let Some(ms) = self.elapsed_ms {
            println!("elapsed: {ms} ms");
        }
    }
}

fn print_details(details: &Value) {
    if let Some(identities) = details.get("identities").and_then(Value::as_array) {
        for r in identities {
            println!(
                "{:<26} {:>7}/{:<7} {}",
                r["identity"].as_str().unwrap_or_default(),
                r["passed"],
                r["checked"],
                r["verdict"].as_str().unwrap_or_default()
            );
            for f in r.get("failures").and_then(Value::as_array).into_iter().flatten() {
                println!("    {}", f.as_str().unwrap_or_default());
            }
        }
    } else if let Some(map) = details.as_object() {
        for (key, value) in map {
            match value {
                Value::String(s) => println!("{key}: {s}"),
                other => println!("{key}: {other}"),
            }
        }
    }
}

struct Failure {
    code: u8,
    msg: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            code: EXIT_USAGE,
            msg: e.to_string(),
        }
    }
}

fn read_graph(path: &Path) -> Result<(Graph, Option<usize>), Failure> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = match Format::from_path(path) {
        Format::Dimacs => io::parse_dimacs(&text).map(|g| (g, None)),
        Format::EdgeList => io::parse_edge_list_with_budget(&text),
    };
    parsed.map_err(|e| format!("{}: {e}", path.display()).into())
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()).into()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn grundy(input: &Path, mode: &GrundyMode) -> Result<RunReport, Failure> {
    let (g, _) = read_graph(input)?;
    let mut report = RunReport::new("grundy", &g);
    if mode.exact {
        let (k, witness) = grundy_number_exact(&g)?;
        report.set("Gamma", k);
        report.witness = Some(io::write_coloring(&witness));
    } else if mode.approx {
        let bounds = approx_grundy(&g)?;
        let part = find_bipartition(&g)?;
        report.set("chi", bounds.lower);
        report.set("mu", maximum_matching(&g, &part)?.len());
        report.set("lower", bounds.lower);
        report.set("upper", bounds.upper.to_string());
    } else {
        let (k, witness) = grundy_number_cobipartite(&g)?;
        report.set("Gamma", k);
        report.set("gamma_prime", g.n() - k);
        let ec = max_extended_clique(&g)?;
        report.witness = Some(format!(
            "{}{}",
            io::write_extended_clique(&ec),
            io::write_coloring(&witness)
        ));
    }
    Ok(report)
}

fn reduce(input: &Path, k: Option<usize>, output: Option<&Path>) -> Result<RunReport, Failure> {
    let (g, file_k) = read_graph(input)?;
    let k = k.or(file_k).ok_or("no budget: pass k or add a 'k' line to the input")?;
    let target = reduce_eds_to_grundy(&EdsInstance::new(g.clone(), k))?;
    let out = match output {
        Some(p) => p.to_path_buf(),
        None => {
            let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("graph");
            input.with_file_name(format!("{stem}.complement.el"))
        }
    };
    write_output(Some(&out), &io::write_edge_list(target.graph()))?;
    let mut report = RunReport::new("reduce", &g);
    report.details = Some(json!({
        "k": k,
        "threshold": target.threshold(),
        "output": out.display().to_string(),
    }));
    Ok(report)
}

fn eds(input: &Path) -> Result<RunReport, Failure> {
    let (g, _) = read_graph(input)?;
    let eds = min_edge_dominating_exact(&g)?;
    let mmm = min_maximal_matching_exact(&g)?;
    let mut report = RunReport::new("eds", &g);
    report.set("gamma_prime", mmm.len());
    report.witness = Some(format!(
        "# minimum edge dominating set\n{}# minimum maximal matching\n{}",
        io::write_edges(eds.edges()),
        io::write_edges(mmm.edges())
    ));
    Ok(report)
}

fn total(input: &Path, alpha: bool, output: Option<&Path>) -> Result<RunReport, Failure> {
    let (g, _) = read_graph(input)?;
    let (t, _) = total_graph(&g);
    let mut report = RunReport::new("total", &g);
    if alpha {
        report.set("alpha_total", max_independent_set_exact(&t)?.len());
    }
    match output {
        Some(p) => {
            write_output(Some(p), &io::write_edge_list(&t))?;
            report.details = Some(json!({ "output": p.display().to_string() }));
        }
        None => report.witness = Some(io::write_edge_list(&t)),
    }
    Ok(report)
}

fn ec(input: &Path) -> Result<RunReport, Failure> {
    let (g, _) = read_graph(input)?;
    let ec = max_extended_clique(&g)?;
    let mut report = RunReport::new("ec", &g);
    report.set("Gamma", ec.size());
    report.witness = Some(io::write_extended_clique(&ec));
    Ok(report)
}

fn gen(
    n1: usize,
    n2: usize,
    p: f64,
    seed: u64,
    max_degree: Option<usize>,
    retries: usize,
    output: Option<&Path>,
) -> Result<Option<RunReport>, Failure> {
    let (g, _) = match max_degree {
        Some(d) => random_bipartite_bounded(n1, n2, p, seed, d, retries)?,
        None => random_bipartite(n1, n2, p, seed)?,
    };
    let text = io::write_edge_list(&g);
    match output {
        Some(path) => {
            write_output(Some(path), &text)?;
            let mut report = RunReport::new("gen", &g);
            report.details = Some(json!({ "output": path.display().to_string() }));
            Ok(Some(report))
        }
        None => {
            print!("{text}");
            Ok(None)
        }
    }
}

fn run(cli: &Cli) -> Result<Option<RunReport>, Failure> {
    let start = Instant::now();
    let mut timed = true;
    let mut report = match &cli.command {
        Command::Grundy { input, mode } => grundy(input, mode)?,
        Command::Reduce { input, k, output } => reduce(input, *k, output.as_deref())?,
        Command::Eds { input } => eds(input)?,
        Command::Total { input, alpha, output } => total(input, *alpha, output.as_deref())?,
        Command::Ec { input } => ec(input)?,
        Command::Gen {
            n1,
            n2,
            p,
            seed,
            max_degree,
            retries,
            output,
        } => match gen(*n1, *n2, *p, *seed, *max_degree, *retries, output.as_deref())? {
            Some(r) => r,
            None => return Ok(None),
        },
        Command::Verify {
            max_n,
            seed,
            count,
            lemma_count,
            reduction_count,
            timing,
            inject_fault,
        } => {
            let config = SuiteConfig {
                max_n: *max_n,
                seed: *seed,
                count: *count,
                lemma_count: *lemma_count,
                reduction_count: *reduction_count,
                fault: inject_fault.then_some(Fault::StructuralOffByOne),
            };
            let suite = run_suite(&config)?;
            let mut report = RunReport {
                command: "verify",
                n: config.max_n,
                m: 0,
                results: BTreeMap::new(),
                witness: None,
                details: Some(serde_json::to_value(&suite).unwrap()),
                elapsed_ms: None,
            };
            report.set("verdict", suite.verdict.to_string());
            timed = *timing;
            report
        }
    };
    if timed {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    Ok(Some(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Some(report)) => {
            report.print(cli.json);
            let failed = report
                .results
                .get("verdict")
                .is_some_and(|v| v.as_str() == Some("FAIL"));
            if failed {
                ExitCode::from(EXIT_FAIL)
            } else {
                ExitCode::SUCCESS
            }
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
