use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cobigrundy::io::parse_edge_list;
use cobigrundy::{is_grundy, max_degree_filter, Coloring, Graph};
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cobigrundy"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn fixtures() -> (TempDir, PathBuf, PathBuf, PathBuf, PathBuf) {
    let dir = TempDir::new().unwrap();
    let p4 = write(dir.path(), "p4.el", "4 3\n0 1\n1 2\n2 3\n");
    let k3 = write(dir.path(), "k3.el", "3 3\n0 1\n1 2\n0 2\n");
    let c6 = write(dir.path(), "c6.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    let empty3 = write(dir.path(), "empty3.el", "3 0\n");
    (dir, p4, k3, c6, empty3)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn witness_coloring(witness: &str) -> Coloring {
    let colors = witness
        .lines()
        .filter(|l| !l.starts_with("I:") && !l.starts_with("M:"))
        .map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap())
        .collect();
    Coloring::new(colors).unwrap()
}

#[test]
fn grundy_structural_reports_witness() {
    let (_dir, p4, ..) = fixtures();
    let report = json(&["grundy", "--structural", s(&p4)]);
    assert_eq!(report["results"]["Gamma"], 3);
    assert_eq!(report["results"]["gamma_prime"], 1);
    let witness = report["witness"].as_str().unwrap();
    assert!(witness.starts_with("I: 0 3\nM: 1 2\n"));
    let c = witness_coloring(witness);
    assert!(is_grundy(&Graph::path(4).complement(), &c).unwrap());
}

#[test]
fn grundy_approx_prints_exact_rationals() {
    let (_dir, p4, _, c6, _) = fixtures();
    let report = json(&["grundy", "--approx", s(&p4)]);
    assert_eq!(report["results"]["lower"], 2);
    assert_eq!(report["results"]["upper"], "3");
    let report = json(&["grundy", "--approx", s(&c6)]);
    assert_eq!(report["results"]["lower"], 3);
    assert_eq!(report["results"]["upper"], "9/2");
    let text = String::from_utf8(run(&["grundy", "--approx", s(&p4)]).stdout).unwrap();
    assert!(text.contains("upper = 3\n"));
}

#[test]
fn grundy_exact_on_general_graph() {
    let (_dir, _, k3, ..) = fixtures();
    assert_eq!(json(&["grundy", "--exact", s(&k3)])["results"]["Gamma"], 3);
}

#[test]
fn structural_and_exact_agree_on_bipartite_inputs() {
    let dir = TempDir::new().unwrap();
    for seed in 0..15 {
        let g = write(dir.path(), "g.el", &gen_text(&["3", "4", "0.5", &seed.to_string()]));
        let structural = json(&["grundy", "--structural", s(&g)]);
        let c = write(dir.path(), "c.el", "");
        let out = run(&["reduce", s(&g), "0", "-o", s(&c)]);
        assert!(out.status.success());
        let exact = json(&["grundy", "--exact", s(&c)]);
        assert_eq!(structural["results"]["Gamma"], exact["results"]["Gamma"]);
    }
}

#[test]
fn non_bipartite_input_is_a_usage_error() {
    let (_dir, _, k3, ..) = fixtures();
    let out = run(&["grundy", "--structural", s(&k3)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd cycle"));
    assert_eq!(run(&["reduce", s(&k3), "1"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.el", "3 2\n0 1\n");
    assert_eq!(run(&["grundy", s(&bad)]).status.code(), Some(2));
    assert_eq!(run(&["grundy", "missing.el"]).status.code(), Some(2));
    assert_eq!(run(&["nope"]).status.code(), Some(2));
    assert_eq!(run(&["grundy", "--exact", "--approx", "x.el"]).status.code(), Some(2));
}

#[test]
fn reduce_writes_complement_and_threshold() {
    let (dir, p4, _, c6, empty3) = fixtures();
    let report = json(&["reduce", s(&p4), "1"]);
    assert_eq!(report["details"]["threshold"], 3);
    let written = dir.path().join("p4.complement.el");
    let text = fs::read_to_string(&written).unwrap();
    assert_eq!(text, "4 3\n0 2\n0 3\n1 3\n");
    assert_eq!(parse_edge_list(&text).unwrap(), Graph::path(4).complement());

    assert_eq!(json(&["reduce", s(&empty3), "0"])["details"]["threshold"], 3);
    assert_eq!(
        parse_edge_list(&fs::read_to_string(dir.path().join("empty3.complement.el")).unwrap()).unwrap(),
        Graph::complete(3)
    );
    assert_eq!(json(&["reduce", s(&c6), "2"])["details"]["threshold"], 4);
}

#[test]
fn reduce_reads_budget_from_instance_file() {
    let dir = TempDir::new().unwrap();
    let inst = write(dir.path(), "inst.el", "4 3\n0 1\n1 2\n2 3\nk 1\n");
    assert_eq!(json(&["reduce", s(&inst)])["details"]["threshold"], 3);
    let plain = write(dir.path(), "plain.el", "2 1\n0 1\n");
    assert_eq!(run(&["reduce", s(&plain)]).status.code(), Some(2));
}

fn gen_text(args: &[&str]) -> String {
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gen_examples() {
    let g = parse_edge_list(&gen_text(&["2", "2", "1.0", "7"])).unwrap();
    assert_eq!(g, Graph::complete_bipartite(2, 2));
    assert_eq!(gen_text(&["3", "3", "0.5", "42"]), gen_text(&["3", "3", "0.5", "42"]));
    let bounded = parse_edge_list(&gen_text(&["4", "4", "0.9", "1", "--max-degree", "3"])).unwrap();
    assert!(max_degree_filter(&bounded, 3));
    let out = run(&["gen", "3", "3", "1.0", "0", "--max-degree", "2", "--retries", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["gen", "1", "1", "2.0", "0"]).status.code(), Some(2));
}

#[test]
fn gen_output_file_round_trips() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.el");
    let out = run(&["gen", "4", "5", "0.4", "3", "-o", s(&path)]);
    assert!(out.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text, gen_text(&["4", "5", "0.4", "3"]));
    let g = parse_edge_list(&text).unwrap();
    assert_eq!(cobigrundy::io::write_edge_list(&g), text);
}

#[test]
fn eds_ec_and_total_commands() {
    let (dir, p4, ..) = fixtures();
    let report = json(&["eds", s(&p4)]);
    assert_eq!(report["results"]["gamma_prime"], 1);
    assert!(report["witness"].as_str().unwrap().contains("1 2\n"));

    let report = json(&["ec", s(&p4)]);
    assert_eq!(report["results"]["Gamma"], 3);
    assert_eq!(report["witness"], "I: 0 3\nM: 1 2\n");

    let out = dir.path().join("t.el");
    let report = json(&["total", s(&p4), "--alpha", "-o", s(&out)]);
    assert_eq!(report["results"]["alpha_total"], 3);
    let t = parse_edge_list(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(t, cobigrundy::total_graph(&Graph::path(4)).0);
}

#[test]
fn dimacs_input_is_detected_by_extension() {
    let dir = TempDir::new().unwrap();
    let col = write(dir.path(), "p4.col", "c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    assert_eq!(json(&["grundy", "--structural", s(&col)])["results"]["Gamma"], 3);
}

#[test]
fn verify_trivial_and_corrupted_runs() {
    let out = run(&["verify", "--count", "0", "--max-n", "1", "--lemma-count", "0", "--reduction-count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "--count", "0", "--max-n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "--max-n", "3", "--count", "5", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
    assert_eq!(run(&["verify", "--max-n", "9"]).status.code(), Some(2));
}
