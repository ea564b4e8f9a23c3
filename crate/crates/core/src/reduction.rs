//! The reduction from minimum edge domination on bipartite graphs to the
//! Grundy number of their complements, in both directions.
//!
//! `(b, k)` has an edge dominating set of size at most `k` exactly when
//! `complement(b)` has Grundy number at least `n - k`.

use serde::Serialize;

use crate::coloring::grundy_number_exact;
use crate::error::{Error, Result};
use crate::extended_clique::{grundy_number_cobipartite, validate, ExtendedClique};
use crate::graph::{find_bipartition, Graph};
use crate::matching::{eds_to_matching, min_maximal_matching_exact, EdgeDominatingSet};

/// "Does `graph` have an edge dominating set with at most `budget` edges?"
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdsInstance {
    pub graph: Graph,
    pub budget: usize,
}

impl EdsInstance {
    pub fn new(graph: Graph, budget: usize) -> Self {
        EdsInstance { graph, budget }
    }
}

/// "Is the Grundy number of `graph` at least `threshold`?"
///
/// `graph` is always the complement of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyInstance {
    graph: Graph,
    threshold: i64,
}

impl GrundyInstance {
    pub fn new(graph: Graph, threshold: i64) -> Result<Self> {
        find_bipartition(&graph.complement())?;
        Ok(GrundyInstance { graph, threshold })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// May be zero or negative when the budget is at least `n`.
    pub fn threshold(&self) -> i64 {
        self.threshold
    }
}

/// Maps `(b, k)` to `(complement(b), n - k)`.
pub fn reduce_eds_to_grundy(inst: &EdsInstance) -> Result<GrundyInstance> {
    find_bipartition(&inst.graph)?;
    Ok(GrundyInstance {
        graph: inst.graph.complement(),
        threshold: inst.graph.n() as i64 - inst.budget as i64,
    })
}

/// An extended clique of size `n - |M|` from an edge dominating set `d`,
/// where `M` is the dominating matching obtained from `d`.
pub fn extended_clique_from_eds(b: &Graph, d: &EdgeDominatingSet) -> Result<ExtendedClique> {
    let m = eds_to_matching(b, d)?;
    let ec = ExtendedClique::new(m.unmatched(b.n()), m.edges().iter().copied());
    debug_assert!(validate(b, &ec)?);
    Ok(ec)
}

/// An edge dominating set of size at most `n - size(ec)`.
///
/// Isolated uncovered vertices are first folded into `I`. Every other
/// vertex outside `I` and the matching contributes its least incident edge.
pub fn eds_from_extended_clique(b: &Graph, ec: &ExtendedClique) -> Result<EdgeDominatingSet> {
    if !validate(b, ec)? {
        return Err(Error::InvalidExtendedClique(
            "not an extended clique of the graph".into(),
        ));
    }
    let n = b.n();
    let mut used = vec![false; n];
    for &v in ec.independent() {
        used[v] = true;
    }
    for &(u, v) in ec.matching() {
        used[u] = true;
        used[v] = true;
    }
    let mut edges = ec.matching().to_vec();
    for v in (0..n).filter(|&v| !used[v]) {
        if let Some(&w) = b.neighbors(v).first() {
            edges.push((v, w));
        }
    }
    Ok(EdgeDominatingSet::new(edges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Outcome of checking one `(b, k)` pair on both sides of the reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub k: usize,
    pub gamma_prime: usize,
    /// `n - γ′(b)`.
    #[serde(rename = "Gamma")]
    pub gamma: usize,
    /// Grundy number of the complement by exact search.
    #[serde(rename = "Gamma_exact")]
    pub gamma_exact: usize,
    /// `γ′(b) <= k`
    pub lhs: bool,
    /// `Γ >= n - k`
    pub rhs: bool,
    pub verdict: Verdict,
}

/// Decides both sides of the reduction with exact solvers.
///
/// The verdict is PASS when the two decisions agree and the structural
/// Grundy number equals the one found by exact search on the complement.
pub fn verify_reduction(inst: &EdsInstance) -> Result<ReductionReport> {
    let b = &inst.graph;
    find_bipartition(b)?;
    let n = b.n();
    let gamma_prime = min_maximal_matching_exact(b)?.len();
    let (gamma, _) = grundy_number_cobipartite(b)?;
    let (gamma_exact, _) = grundy_number_exact(&b.complement())?;
    let lhs = gamma_prime <= inst.budget;
    let rhs = gamma as i64 >= n as i64 - inst.budget as i64;
    Ok(ReductionReport {
        n,
        k: inst.budget,
        gamma_prime,
        gamma,
        gamma_exact,
        lhs,
        rhs,
        verdict: Verdict::from_bool(lhs == rhs && gamma == gamma_exact),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{is_edge_dominating, min_edge_dominating_exact};
    use crate::extended_clique::max_extended_clique;
    use crate::graph::random_bipartite_bounded;

    #[test]
    fn reduce_examples() {
        let g = reduce_eds_to_grundy(&EdsInstance::new(Graph::path(4), 1)).unwrap();
        assert_eq!((g.graph(), g.threshold()), (&Graph::path(4).complement(), 3));
        let g = reduce_eds_to_grundy(&EdsInstance::new(Graph::empty(3), 0)).unwrap();
        assert_eq!((g.graph(), g.threshold()), (&Graph::complete(3), 3));
        let g = reduce_eds_to_grundy(&EdsInstance::new(Graph::cycle(6), 2)).unwrap();
        assert_eq!(g.threshold(), 4);
        let g = reduce_eds_to_grundy(&EdsInstance::new(Graph::path(2), 5)).unwrap();
        assert_eq!(g.threshold(), -3);
        assert!(reduce_eds_to_grundy(&EdsInstance::new(Graph::complete(3), 1)).is_err());
    }

    #[test]
    fn grundy_instance_requires_cobipartite_graph() {
        assert!(GrundyInstance::new(Graph::path(4).complement(), 3).is_ok());
        // complement of C5 is C5
        assert!(GrundyInstance::new(Graph::cycle(5), 3).is_err());
    }

    #[test]
    fn clique_from_eds_examples() {
        let ec = extended_clique_from_eds(&Graph::path(4), &EdgeDominatingSet::new([(1, 2)])).unwrap();
        assert_eq!(ec, ExtendedClique::new([0, 3], [(1, 2)]));
        let d = EdgeDominatingSet::new([(0, 1), (3, 4)]);
        let ec = extended_clique_from_eds(&Graph::cycle(6), &d).unwrap();
        assert_eq!(ec, ExtendedClique::new([2, 5], [(0, 1), (3, 4)]));
        assert_eq!(ec.size(), 4);
        let ec = extended_clique_from_eds(&Graph::path(2), &EdgeDominatingSet::new([(0, 1)])).unwrap();
        assert_eq!(ec, ExtendedClique::new([], [(0, 1)]));
        assert_eq!(
            extended_clique_from_eds(&Graph::path(4), &EdgeDominatingSet::new([(0, 1)])),
            Err(Error::NotDominating)
        );
    }

    #[test]
    fn eds_from_clique_examples() {
        let p4 = Graph::path(4);
        let d = eds_from_extended_clique(&p4, &ExtendedClique::new([0, 3], [(1, 2)])).unwrap();
        assert_eq!(d.edges(), &[(1, 2)]);
        let c6 = Graph::cycle(6);
        let d = eds_from_extended_clique(&c6, &ExtendedClique::new([2, 5], [(0, 1), (3, 4)])).unwrap();
        assert_eq!(d.edges(), &[(0, 1), (3, 4)]);
        let d = eds_from_extended_clique(&p4, &ExtendedClique::new([], [(1, 2)])).unwrap();
        assert_eq!(d.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert!(eds_from_extended_clique(&p4, &ExtendedClique::new([0, 1], [])).is_err());
    }

    #[test]
    fn isolated_vertices_are_absorbed() {
        let b = Graph::new(4, [(0, 1)]).unwrap();
        let d = eds_from_extended_clique(&b, &ExtendedClique::new([], [(0, 1)])).unwrap();
        assert_eq!(d.edges(), &[(0, 1)]);
        let d = eds_from_extended_clique(&b, &ExtendedClique::new([], [])).unwrap();
        assert_eq!(d.edges(), &[(0, 1)]);
    }

    #[test]
    fn verify_examples() {
        let r = verify_reduction(&EdsInstance::new(Graph::path(4), 1)).unwrap();
        assert!(r.lhs && r.rhs && r.verdict.is_pass());
        assert_eq!((r.gamma_prime, r.gamma, r.gamma_exact), (1, 3, 3));
        let r = verify_reduction(&EdsInstance::new(Graph::path(4), 0)).unwrap();
        assert!(!r.lhs && !r.rhs && r.verdict.is_pass());
        let r = verify_reduction(&EdsInstance::new(Graph::empty(3), 0)).unwrap();
        assert!(r.lhs && r.rhs && r.verdict.is_pass());
    }

    #[test]
    fn constructions_are_optimal_on_bounded_degree_samples() {
        for seed in 0..30 {
            let (b, _) = random_bipartite_bounded(4, 5, 0.4, seed, 3, 10_000).unwrap();
            let n = b.n();
            let eds = min_edge_dominating_exact(&b).unwrap();
            let ec = extended_clique_from_eds(&b, &eds).unwrap();
            assert_eq!(ec.size(), n - eds.len());
            assert_eq!(ec.size(), max_extended_clique(&b).unwrap().size());
            let back = eds_from_extended_clique(&b, &ec).unwrap();
            assert!(is_edge_dominating(&b, back.edges()).unwrap());
            assert_eq!(back.len(), eds.len());
            for k in 0..=n {
                assert!(verify_reduction(&EdsInstance::new(b.clone(), k)).unwrap().verdict.is_pass());
            }
        }
    }
}
