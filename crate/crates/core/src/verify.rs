//! Corpus-wide verification of the Grundy identities.
//!
//! Every identity is checked exactly (no tolerances) over an exhaustive
//! corpus of small labeled bipartite graphs plus seeded random instances.
//! Instances are processed in parallel, but results are merged in
//! instance order so the report is a pure function of the configuration.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{grundy_number_exact, is_grundy};
use crate::error::Result;
use crate::extended_clique::{
    approx_grundy, extended_clique_from_coloring, grundy_number_cobipartite, max_extended_clique,
    validate,
};
use crate::graph::{max_degree_filter, sample_bipartite, total_graph, Graph};
use crate::matching::{
    eds_to_matching, is_edge_dominating, min_edge_dominating_exact, min_maximal_matching_exact,
    EdgeDominatingSet, Matching,
};
use crate::oracles::{
    enumerate_bipartite_graphs, enumerate_graphs, grundy_exact_by_colorings,
    grundy_exact_by_orderings, max_extended_clique_brute, max_independent_set_exact,
    COLORINGS_CAP,
};
use crate::reduction::{
    eds_from_extended_clique, extended_clique_from_eds, verify_reduction, EdsInstance, Verdict,
};

/// Vertex bound for random bipartite instances.
pub const RANDOM_MAX_N: usize = 9;
/// Vertex bound for the random graphs hosting edge dominating sets.
pub const LEMMA_MAX_N: usize = 12;
/// Vertex bound for random bounded-degree reduction instances.
pub const REDUCTION_MAX_N: usize = 10;
pub const REDUCTION_MAX_DEGREE: usize = 3;
const REDUCTION_RETRIES: usize = 100_000;
const MAX_REPORTED_FAILURES: usize = 5;

/// Deliberate solver corruption, used to check that the harness fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fault {
    /// Report one more than the structural Grundy number.
    StructuralOffByOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    /// Exhaustive corpus covers all labeled bipartite graphs on `1..=max_n` vertices.
    pub max_n: usize,
    pub seed: u64,
    /// Random bipartite instances with at most [`RANDOM_MAX_N`] vertices.
    pub count: usize,
    /// Randomized edge dominating sets for the matching lemma.
    pub lemma_count: usize,
    /// Random bounded-degree instances for the reduction check.
    pub reduction_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 6,
            seed: 0,
            count: 500,
            lemma_count: 1000,
            reduction_count: 200,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// Ordering oracle, total-graph independence, extended-clique oracle,
    /// `n - γ′`, structural and exact Grundy numbers all agree.
    FourWay,
    /// Both Grundy oracles agree on every small graph.
    OracleCrossValidation,
    /// `n - μ <= Γ <= 3 (n - μ) / 2`.
    ApproximationSandwich,
    /// The path on four vertices meets the upper bound.
    RatioTightness,
    /// EDS to matching conversion keeps domination and does not grow.
    MatchingLemma,
    /// `γ′ <= k` iff `Γ >= n - k` for every budget.
    ReductionEquivalence,
    /// Every emitted witness passes its validator.
    WitnessValidity,
}

const ALL_IDENTITIES: [Identity; 7] = [
    Identity::FourWay,
    Identity::OracleCrossValidation,
    Identity::ApproximationSandwich,
    Identity::RatioTightness,
    Identity::MatchingLemma,
    Identity::ReductionEquivalence,
    Identity::WitnessValidity,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub identity: Identity,
    pub checked: usize,
    pub passed: usize,
    pub verdict: Verdict,
    /// The first few failures, in instance order.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub exhaustive_instances: usize,
    pub identities: Vec<IdentityResult>,
    pub verdict: Verdict,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    pub fn identity(&self, id: Identity) -> &IdentityResult {
        self.identities.iter().find(|r| r.identity == id).unwrap()
    }
}

struct Check {
    identity: Identity,
    ok: bool,
    detail: String,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn record(&mut self, identity: Identity, ok: bool, detail: impl FnOnce() -> String) {
        let detail = if ok { String::new() } else { detail() };
        self.0.push(Check { identity, ok, detail });
    }

    fn record_result(&mut self, identity: Identity, label: &str, r: Result<bool>) {
        match r {
            Ok(ok) => self.record(identity, ok, || label.to_string()),
            Err(e) => self.record(identity, false, || format!("{label}: {e}")),
        }
    }
}

/// Runs every identity over the configured corpus.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let exhaustive: Vec<Graph> = enumerate_bipartite_graphs(config.max_n)?
        .map(|(g, _)| g)
        .collect();
    let random: Vec<Graph> = (0..config.count)
        .map(|i| random_instance(config.seed, i))
        .collect::<Result<_>>()?;
    let bounded: Vec<Graph> = (0..config.reduction_count)
        .map(|i| bounded_instance(config.seed, i))
        .collect::<Result<_>>()?;
    let cross_n = config.max_n.min(COLORINGS_CAP);
    let small: Vec<Graph> = (1..=cross_n)
        .map(enumerate_graphs)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let fault = config.fault;
    let mut batches: Vec<Checks> = Vec::new();
    batches.extend(
        exhaustive
            .par_iter()
            .enumerate()
            .map(|(i, b)| corpus_checks(b, &format!("exhaustive #{i}"), fault, true))
            .collect::<Vec<_>>(),
    );
    batches.extend(
        random
            .par_iter()
            .enumerate()
            .map(|(i, b)| corpus_checks(b, &format!("random #{i}"), fault, false))
            .collect::<Vec<_>>(),
    );
    batches.push(tightness_check());
    batches.extend(
        small
            .par_iter()
            .enumerate()
            .map(|(i, g)| cross_validation_check(g, i))
            .collect::<Vec<_>>(),
    );
    batches.extend(
        (0..config.lemma_count)
            .into_par_iter()
            .map(|i| lemma_check(config.seed, i))
            .collect::<Vec<_>>(),
    );
    batches.extend(
        bounded
            .par_iter()
            .enumerate()
            .map(|(i, b)| reduction_checks(b, &format!("bounded #{i}")))
            .collect::<Vec<_>>(),
    );

    let mut identities: Vec<IdentityResult> = ALL_IDENTITIES
        .iter()
        .map(|&identity| IdentityResult {
            identity,
            checked: 0,
            passed: 0,
            verdict: Verdict::Pass,
            failures: Vec::new(),
        })
        .collect();
    for check in batches.into_iter().flat_map(|c| c.0) {
        let slot = identities
            .iter_mut()
            .find(|r| r.identity == check.identity)
            .unwrap();
        slot.checked += 1;
        if check.ok {
            slot.passed += 1;
        } else {
            slot.verdict = Verdict::Fail;
            if slot.failures.len() < MAX_REPORTED_FAILURES {
                slot.failures.push(check.detail);
            }
        }
    }
    let verdict = Verdict::from_bool(identities.iter().all(|r| r.verdict.is_pass()));
    Ok(SuiteReport {
        config: config.clone(),
        exhaustive_instances: exhaustive.len(),
        identities,
        verdict,
    })
}

fn instance_rng(seed: u64, stream: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream << 32 | index as u64);
    rng
}

/// The `index`-th random bipartite instance: at most [`RANDOM_MAX_N`]
/// vertices, a random split and a random edge probability.
pub fn random_instance(seed: u64, index: usize) -> Result<Graph> {
    let mut rng = instance_rng(seed, 1, index);
    let n = rng.gen_range(1..=RANDOM_MAX_N);
    let n1 = rng.gen_range(0..=n);
    let p = rng.gen_range(0.0..=1.0);
    sample_bipartite(&mut rng, n1, n - n1, p).map(|(g, _)| g)
}

/// The `index`-th bounded-degree bipartite instance: at most
/// [`REDUCTION_MAX_N`] vertices, every degree at most [`REDUCTION_MAX_DEGREE`].
pub fn bounded_instance(seed: u64, index: usize) -> Result<Graph> {
    let mut rng = instance_rng(seed, 2, index);
    let n = rng.gen_range(1..=REDUCTION_MAX_N);
    let n1 = rng.gen_range(0..=n);
    let p = rng.gen_range(0.0..0.6);
    for _ in 0..REDUCTION_RETRIES {
        let (g, _) = sample_bipartite(&mut rng, n1, n - n1, p)?;
        if max_degree_filter(&g, REDUCTION_MAX_DEGREE) {
            return Ok(g);
        }
    }
    Err(crate::error::Error::RetriesExhausted(REDUCTION_RETRIES))
}

/// The `index`-th randomized edge dominating set: a random maximal
/// matching of a random graph plus a random selection of further edges.
pub fn lemma_instance(seed: u64, index: usize) -> (Graph, EdgeDominatingSet) {
    let mut rng = instance_rng(seed, 3, index);
    let n = rng.gen_range(1..=LEMMA_MAX_N);
    let p = rng.gen_range(0.05..0.95);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, edges).expect("generated edges are valid");
    let mut order = g.edges().to_vec();
    order.shuffle(&mut rng);
    let mut used = vec![false; n];
    let mut set = Vec::new();
    for &(u, v) in &order {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            set.push((u, v));
        }
    }
    let extra = rng.gen_range(0.0..=1.0);
    for &e in &order {
        if !set.contains(&e) && rng.gen_bool(extra) {
            set.push(e);
        }
    }
    (g, EdgeDominatingSet::new(set))
}

fn corpus_checks(b: &Graph, label: &str, fault: Option<Fault>, exhaustive: bool) -> Checks {
    let mut checks = Checks::default();
    let at = |what: &str| format!("{label} {what} (n={}, edges={:?})", b.n(), b.edges());
    match corpus_values(b, &mut checks, &at, fault) {
        Ok(()) => {}
        Err(e) => checks.record(Identity::FourWay, false, || at(&format!("error: {e}"))),
    }
    if exhaustive {
        checks.0.extend(reduction_checks(b, label).0);
    }
    checks
}

fn corpus_values(
    b: &Graph,
    checks: &mut Checks,
    at: &dyn Fn(&str) -> String,
    fault: Option<Fault>,
) -> Result<()> {
    let n = b.n();
    let complement = b.complement();
    let by_orderings = grundy_exact_by_orderings(&complement)?;
    let (total, _) = total_graph(b);
    let alpha_total = max_independent_set_exact(&total)?.len();
    let ec_brute = max_extended_clique_brute(b)?;
    let mmm = min_maximal_matching_exact(b)?;
    let (mut structural, witness) = grundy_number_cobipartite(b)?;
    if fault == Some(Fault::StructuralOffByOne) {
        structural += 1;
    }
    let (exact, exact_witness) = grundy_number_exact(&complement)?;
    let values = [by_orderings, alpha_total, ec_brute, n - mmm.len(), structural, exact];
    checks.record(Identity::FourWay, values.iter().all(|&v| v == values[0]), || {
        at(&format!(
            "orderings={by_orderings} alpha_total={alpha_total} ec_brute={ec_brute} n-gamma'={} structural={structural} exact={exact}",
            n - mmm.len()
        ))
    });

    let bounds = approx_grundy(b)?;
    checks.record(Identity::ApproximationSandwich, bounds.contains(by_orderings as u64), || {
        at(&format!("Gamma={by_orderings} lower={} upper={}", bounds.lower, bounds.upper))
    });

    let w = Identity::WitnessValidity;
    checks.record_result(
        w,
        &at("structural coloring"),
        is_grundy(&complement, &witness).map(|ok| ok && witness.num_colors() == structural),
    );
    checks.record_result(
        w,
        &at("exact coloring"),
        is_grundy(&complement, &exact_witness).map(|ok| ok && exact_witness.num_colors() == exact),
    );
    let ec = max_extended_clique(b)?;
    checks.record_result(
        w,
        &at("maximum extended clique"),
        validate(b, &ec).map(|ok| ok && ec.size() == n - mmm.len()),
    );
    let back = extended_clique_from_coloring(b, &witness)?;
    checks.record_result(
        w,
        &at("extended clique read from coloring"),
        validate(b, &back).map(|ok| ok && back.size() >= ec.size()),
    );
    checks.record_result(w, &at("minimum maximal matching"), is_edge_dominating(b, mmm.edges()));
    let eds = min_edge_dominating_exact(b)?;
    checks.record_result(
        w,
        &at("minimum edge dominating set"),
        is_edge_dominating(b, eds.edges()).map(|ok| ok && eds.len() == mmm.len()),
    );
    let from_eds = extended_clique_from_eds(b, &eds)?;
    checks.record_result(
        w,
        &at("extended clique from EDS"),
        validate(b, &from_eds).map(|ok| ok && from_eds.size() == n - eds.len()),
    );
    let to_eds = eds_from_extended_clique(b, &ec)?;
    checks.record_result(
        w,
        &at("EDS from extended clique"),
        is_edge_dominating(b, to_eds.edges()).map(|ok| ok && to_eds.len() <= n - ec.size()),
    );
    Ok(())
}

fn reduction_checks(b: &Graph, label: &str) -> Checks {
    let mut checks = Checks::default();
    for k in 0..=b.n() {
        let detail = |what: String| format!("{label} k={k} {what} (n={}, edges={:?})", b.n(), b.edges());
        match verify_reduction(&EdsInstance::new(b.clone(), k)) {
            Ok(r) => checks.record(Identity::ReductionEquivalence, r.verdict.is_pass(), || {
                detail(format!(
                    "gamma'={} Gamma={} Gamma_exact={} lhs={} rhs={}",
                    r.gamma_prime, r.gamma, r.gamma_exact, r.lhs, r.rhs
                ))
            }),
            Err(e) => checks.record(Identity::ReductionEquivalence, false, || detail(e.to_string())),
        }
    }
    checks
}

fn tightness_check() -> Checks {
    let mut checks = Checks::default();
    let p4 = Graph::path(4);
    let ok = match (grundy_number_cobipartite(&p4), approx_grundy(&p4)) {
        (Ok((gamma, _)), Ok(bounds)) => {
            gamma == 3
                && bounds.lower == 2
                && num_rational::Ratio::from_integer(gamma as u64) == bounds.upper
        }
        _ => false,
    };
    checks.record(Identity::RatioTightness, ok, || "P4 does not meet 3/2 * chi".into());
    checks
}

fn cross_validation_check(g: &Graph, index: usize) -> Checks {
    let mut checks = Checks::default();
    let outcome = grundy_exact_by_orderings(g).and_then(|a| Ok((a, grundy_exact_by_colorings(g)?)));
    checks.record(
        Identity::OracleCrossValidation,
        matches!(outcome, Ok((a, b)) if a == b),
        || format!("graph #{index} (n={}, edges={:?}): {outcome:?}", g.n(), g.edges()),
    );
    checks
}

fn lemma_check(seed: u64, index: usize) -> Checks {
    let mut checks = Checks::default();
    let (g, d) = lemma_instance(seed, index);
    let label = format!("lemma #{index} (n={}, |D|={})", g.n(), d.len());
    let outcome = eds_to_matching(&g, &d).and_then(|m: Matching| {
        let matching_ok = Matching::new(m.edges().iter().copied()).is_ok();
        Ok(matching_ok && is_edge_dominating(&g, m.edges())? && m.len() <= d.len())
    });
    checks.record_result(Identity::MatchingLemma, &label, outcome);
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            max_n: 4,
            seed: 11,
            count: 20,
            lemma_count: 30,
            reduction_count: 10,
            fault: None,
        }
    }

    #[test]
    fn small_suite_passes() {
        let report = run_suite(&small()).unwrap();
        assert!(report.passed(), "{report:#?}");
        assert_eq!(report.exhaustive_instances, 1 + 2 + 7 + 41);
        assert_eq!(report.identity(Identity::MatchingLemma).checked, 30);
        assert_eq!(report.identity(Identity::RatioTightness).checked, 1);
    }

    #[test]
    fn injected_fault_is_caught() {
        let config = SuiteConfig {
            fault: Some(Fault::StructuralOffByOne),
            ..small()
        };
        let report = run_suite(&config).unwrap();
        assert!(!report.passed());
        let four_way = report.identity(Identity::FourWay);
        assert_eq!(four_way.passed, 0);
        assert!(!four_way.failures.is_empty());
    }

    #[test]
    fn trivial_configuration_passes() {
        let config = SuiteConfig {
            max_n: 1,
            count: 0,
            lemma_count: 0,
            reduction_count: 0,
            ..SuiteConfig::default()
        };
        assert!(run_suite(&config).unwrap().passed());
    }

    #[test]
    fn generators_are_deterministic_and_bounded() {
        for i in 0..50 {
            let g = random_instance(4, i).unwrap();
            assert!(g.n() <= RANDOM_MAX_N);
            assert_eq!(g, random_instance(4, i).unwrap());
            let h = bounded_instance(4, i).unwrap();
            assert!(h.n() <= REDUCTION_MAX_N && max_degree_filter(&h, REDUCTION_MAX_DEGREE));
            let (lg, d) = lemma_instance(4, i);
            assert!(lg.n() <= LEMMA_MAX_N);
            assert!(is_edge_dominating(&lg, d.edges()).unwrap());
        }
    }
}
