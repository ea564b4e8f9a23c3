//! Matchings and edge dominating sets.
//!
//! A matching dominates every edge exactly when it is maximal, so the
//! minimum maximal matching and the minimum edge dominating set have the
//! same size. Both exact minimizers here search edge subsets in
//! lexicographic order, smallest size first.

use std::collections::BTreeSet;

use crate::coloring::bits;
use crate::error::{check_cap, Error, Result};
use crate::graph::{normalize, Bipartition, Edge, Graph};

/// Largest edge count accepted by the exact minimizers.
pub const EDGE_SEARCH_CAP: usize = 48;

/// A set of pairwise vertex-disjoint edges, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let edges = sorted_set(edges);
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u == v || !seen.insert(u) || !seen.insert(v) {
                return Err(Error::NotAMatching(format!("vertex reused by edge ({u}, {v})")));
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `covered[v]` is true when some matching edge ends at `v`.
    pub fn covered(&self, n: usize) -> Vec<bool> {
        covered(&self.edges, n)
    }

    /// Vertices of `0..n` not covered by the matching.
    pub fn unmatched(&self, n: usize) -> Vec<usize> {
        let covered = self.covered(n);
        (0..n).filter(|&v| !covered[v]).collect()
    }
}

/// A set of edges, sorted; domination is checked against a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeDominatingSet {
    edges: Vec<Edge>,
}

impl EdgeDominatingSet {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Self {
        EdgeDominatingSet {
            edges: sorted_set(edges),
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl From<Matching> for EdgeDominatingSet {
    fn from(m: Matching) -> Self {
        EdgeDominatingSet { edges: m.edges }
    }
}

fn sorted_set(edges: impl IntoIterator<Item = Edge>) -> Vec<Edge> {
    let mut edges: Vec<Edge> = edges.into_iter().map(normalize).collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

fn covered(edges: &[Edge], n: usize) -> Vec<bool> {
    let mut covered = vec![false; n];
    for &(u, v) in edges {
        covered[u] = true;
        covered[v] = true;
    }
    covered
}

fn check_subset(g: &Graph, edges: &[Edge]) -> Result<()> {
    match edges.iter().find(|&&e| g.edge_index(e).is_none()) {
        Some(&e) => Err(Error::ForeignEdge(e)),
        None => Ok(()),
    }
}

/// Maximum-cardinality matching of bipartite `b` by augmenting paths.
///
/// X vertices are processed in ascending order and neighbors are scanned
/// in ascending order, so the result is deterministic.
pub fn maximum_matching(b: &Graph, part: &Bipartition) -> Result<Matching> {
    part.validate(b)?;
    let n = b.n();
    let mut mate = vec![usize::MAX; n];
    for &x in part.x() {
        let mut visited = vec![false; n];
        augment(b, x, &mut mate, &mut visited);
    }
    let edges = part
        .x()
        .iter()
        .filter(|&&x| mate[x] != usize::MAX)
        .map(|&x| normalize((x, mate[x])));
    Ok(Matching { edges: sorted_set(edges) })
}

fn augment(b: &Graph, x: usize, mate: &mut [usize], visited: &mut [bool]) -> bool {
    for &y in b.neighbors(x) {
        if visited[y] {
            continue;
        }
        visited[y] = true;
        if mate[y] == usize::MAX || augment(b, mate[y], mate, visited) {
            mate[y] = x;
            mate[x] = y;
            return true;
        }
    }
    false
}

/// True iff every edge of `g` shares an endpoint with a member of `d`.
pub fn is_edge_dominating(g: &Graph, d: &[Edge]) -> Result<bool> {
    let d = sorted_set(d.iter().copied());
    check_subset(g, &d)?;
    let covered = covered(&d, g.n());
    Ok(g.edges().iter().all(|&(u, v)| covered[u] || covered[v]))
}

/// True iff `m` is a matching of `g` to which no edge of `g` can be added.
pub fn is_maximal_matching(g: &Graph, m: &[Edge]) -> Result<bool> {
    let m = Matching::new(m.iter().copied())?;
    check_subset(g, m.edges())?;
    let covered = m.covered(g.n());
    Ok(g.edges().iter().all(|&(u, v)| covered[u] || covered[v]))
}

/// Minimum edge dominating set; the lexicographically least among those of minimum size.
pub fn min_edge_dominating_exact(g: &Graph) -> Result<EdgeDominatingSet> {
    min_edge_dominating_exact_capped(g, EDGE_SEARCH_CAP)
}

pub fn min_edge_dominating_exact_capped(g: &Graph, cap: usize) -> Result<EdgeDominatingSet> {
    let edges = EdgeSearch::new(g, cap)?.minimum(false);
    Ok(EdgeDominatingSet { edges })
}

/// Minimum maximal matching; the lexicographically least among those of minimum size.
pub fn min_maximal_matching_exact(g: &Graph) -> Result<Matching> {
    min_maximal_matching_exact_capped(g, EDGE_SEARCH_CAP)
}

pub fn min_maximal_matching_exact_capped(g: &Graph, cap: usize) -> Result<Matching> {
    let edges = EdgeSearch::new(g, cap)?.minimum(true);
    Ok(Matching { edges })
}

struct EdgeSearch<'a> {
    g: &'a Graph,
    // dom[e]: edges sharing an endpoint with e, e included
    dom: Vec<u64>,
    all: u64,
    reach: u32,
}

impl<'a> EdgeSearch<'a> {
    fn new(g: &'a Graph, cap: usize) -> Result<Self> {
        check_cap("edges for exact edge-set search", cap.min(64), g.m())?;
        let m = g.m();
        let mut at_vertex = vec![0u64; g.n()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            at_vertex[u] |= 1 << i;
            at_vertex[v] |= 1 << i;
        }
        let dom = g
            .edges()
            .iter()
            .map(|&(u, v)| at_vertex[u] | at_vertex[v])
            .collect();
        let delta = g.max_degree() as u32;
        Ok(EdgeSearch {
            g,
            dom,
            all: crate::coloring::full_mask(m),
            reach: (2 * delta).saturating_sub(1).max(1),
        })
    }

    fn minimum(&self, matching_only: bool) -> Vec<Edge> {
        let m = self.g.m();
        if m == 0 {
            return Vec::new();
        }
        let lower = (m as u32).div_ceil(self.reach) as usize;
        for size in lower..=m {
            let mut chosen = Vec::with_capacity(size);
            if self.extend(0, size, 0, 0, matching_only, &mut chosen) {
                return chosen.iter().map(|&i| self.g.edges()[i]).collect();
            }
        }
        unreachable!("the full edge set dominates itself")
    }

    fn extend(
        &self,
        start: usize,
        left: usize,
        dominated: u64,
        picked: u64,
        matching_only: bool,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let open = self.all & !dominated;
        if open == 0 {
            return true;
        }
        if left == 0 || (open.count_ones() as usize) > left * self.reach as usize {
            return false;
        }
        // The least undominated edge needs a dominator among the edges still selectable.
        let first_open = open.trailing_zeros() as usize;
        let selectable = self.all & !crate::coloring::full_mask(start);
        if self.dom[first_open] & selectable == 0 {
            return false;
        }
        for e in bits(selectable) {
            if matching_only && self.dom[e] & picked != 0 {
                continue;
            }
            chosen.push(e);
            if self.extend(e + 1, left - 1, dominated | self.dom[e], picked | 1 << e, matching_only, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Turns an edge dominating set into a dominating matching no larger than it.
///
/// While two members share an endpoint, take the lexicographically first
/// such pair `e1 < e2`. If dropping `e1` (or else `e2`) keeps the set
/// dominating, drop it. Otherwise remove `e1` and add the least edge left
/// undominated; both its endpoints are uncovered, so it touches no member.
/// Each step either shrinks the set or removes an adjacent pair, so the
/// loop terminates.
pub fn eds_to_matching(g: &Graph, d: &EdgeDominatingSet) -> Result<Matching> {
    check_subset(g, d.edges())?;
    if !is_edge_dominating(g, d.edges())? {
        return Err(Error::NotDominating);
    }
    let mut set: BTreeSet<Edge> = d.edges().iter().copied().collect();
    while let Some((e1, e2)) = first_adjacent_pair(&set) {
        let without = |e: Edge| -> Vec<Edge> { set.iter().copied().filter(|&f| f != e).collect() };
        let rest1 = without(e1);
        if first_undominated(g, &rest1).is_none() {
            set.remove(&e1);
            continue;
        }
        if first_undominated(g, &without(e2)).is_none() {
            set.remove(&e2);
            continue;
        }
        let fresh = first_undominated(g, &rest1).unwrap();
        set.remove(&e1);
        set.insert(fresh);
    }
    Matching::new(set)
}

fn first_adjacent_pair(set: &BTreeSet<Edge>) -> Option<(Edge, Edge)> {
    let list: Vec<Edge> = set.iter().copied().collect();
    for (i, &a) in list.iter().enumerate() {
        for &b in &list[i + 1..] {
            if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                return Some((a, b));
            }
        }
    }
    None
}

fn first_undominated(g: &Graph, set: &[Edge]) -> Option<Edge> {
    let covered = covered(set, g.n());
    g.edges().iter().copied().find(|&(u, v)| !covered[u] && !covered[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_bipartition, random_bipartite};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn subsets(g: &Graph) -> impl Iterator<Item = Vec<Edge>> + '_ {
        (0u64..1 << g.m()).map(move |mask| {
            bits(mask).map(|i| g.edges()[i]).collect()
        })
    }

    fn is_matching(edges: &[Edge]) -> bool {
        Matching::new(edges.iter().copied()).is_ok()
    }

    fn brute_min_eds(g: &Graph) -> usize {
        subsets(g)
            .filter(|s| is_edge_dominating(g, s).unwrap())
            .map(|s| s.len())
            .min()
            .unwrap()
    }

    // Include/exclude every edge, tracking used vertices.
    fn brute_max_matching(g: &Graph) -> usize {
        fn rec(edges: &[Edge], used: u64) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = rec(rest, used);
                    if used >> u & 1 == 0 && used >> v & 1 == 0 {
                        skip.max(1 + rec(rest, used | 1 << u | 1 << v))
                    } else {
                        skip
                    }
                }
            }
        }
        rec(g.edges(), 0)
    }

    fn small_graphs(n_max: usize) -> Vec<Graph> {
        let mut out = Vec::new();
        for n in 0..=n_max {
            let pairs: Vec<Edge> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                out.push(Graph::new(n, edges).unwrap());
            }
        }
        out
    }

    #[test]
    fn matching_constructor_rejects_shared_endpoints() {
        assert!(Matching::new([(0, 1), (1, 2)]).is_err());
        let m = Matching::new([(3, 2), (0, 1)]).unwrap();
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(m.unmatched(5), vec![4]);
    }

    #[test]
    fn maximum_matching_examples() {
        let cases = [
            (Graph::path(4), 2),
            (Graph::complete_bipartite(3, 3), 3),
            (Graph::complete_bipartite(1, 3), 1),
            (Graph::empty(3), 0),
        ];
        for (g, size) in cases {
            let part = find_bipartition(&g).unwrap();
            let m = maximum_matching(&g, &part).unwrap();
            assert_eq!(m.len(), size);
            assert!(m.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
        }
        assert_eq!(
            maximum_matching(&Graph::path(4), &find_bipartition(&Graph::path(4)).unwrap())
                .unwrap()
                .edges(),
            &[(0, 1), (2, 3)]
        );
        let bad = Bipartition::new(vec![0, 1], vec![2, 3]);
        assert!(maximum_matching(&Graph::path(4), &bad).is_err());
    }

    #[test]
    fn maximum_matching_matches_brute_force() {
        for g in small_graphs(7) {
            let Ok(part) = find_bipartition(&g) else { continue };
            assert_eq!(maximum_matching(&g, &part).unwrap().len(), brute_max_matching(&g));
        }
    }

    #[test]
    fn edge_domination_examples() {
        let p4 = Graph::path(4);
        assert!(is_edge_dominating(&p4, &[(1, 2)]).unwrap());
        assert!(!is_edge_dominating(&p4, &[(0, 1)]).unwrap());
        assert!(is_edge_dominating(&p4, p4.edges()).unwrap());
        assert_eq!(is_edge_dominating(&p4, &[(0, 2)]), Err(Error::ForeignEdge((0, 2))));
    }

    #[test]
    fn maximal_matching_examples() {
        assert!(is_maximal_matching(&Graph::path(4), &[(1, 2)]).unwrap());
        assert!(!is_maximal_matching(&Graph::cycle(4), &[(0, 1)]).unwrap());
        assert!(is_maximal_matching(&Graph::empty(3), &[]).unwrap());
        assert!(matches!(
            is_maximal_matching(&Graph::path(4), &[(0, 1), (1, 2)]),
            Err(Error::NotAMatching(_))
        ));
    }

    #[test]
    fn matching_dominates_iff_maximal() {
        for g in small_graphs(6) {
            if g.m() > 10 {
                continue;
            }
            for s in subsets(&g).filter(|s| is_matching(s)) {
                assert_eq!(
                    is_edge_dominating(&g, &s).unwrap(),
                    is_maximal_matching(&g, &s).unwrap()
                );
            }
        }
    }

    #[test]
    fn exact_minimizer_examples() {
        let p4 = Graph::path(4);
        assert_eq!(min_edge_dominating_exact(&p4).unwrap().edges(), &[(1, 2)]);
        assert_eq!(min_edge_dominating_exact(&Graph::cycle(6)).unwrap().len(), 2);
        assert_eq!(min_edge_dominating_exact(&Graph::path(2)).unwrap().edges(), &[(0, 1)]);
        assert_eq!(min_maximal_matching_exact(&p4).unwrap().edges(), &[(1, 2)]);
        assert_eq!(
            min_maximal_matching_exact(&Graph::cycle(6)).unwrap().edges(),
            &[(0, 1), (3, 4)]
        );
        assert!(min_maximal_matching_exact(&Graph::empty(4)).unwrap().is_empty());
        assert!(matches!(
            min_edge_dominating_exact_capped(&Graph::complete(5), 9),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn exact_minimizers_match_brute_force() {
        for g in small_graphs(6) {
            if g.m() > 11 {
                continue;
            }
            let eds = min_edge_dominating_exact(&g).unwrap();
            let mmm = min_maximal_matching_exact(&g).unwrap();
            let brute = brute_min_eds(&g);
            assert_eq!(eds.len(), brute);
            assert_eq!(mmm.len(), brute);
            assert!(is_edge_dominating(&g, eds.edges()).unwrap());
            assert!(is_maximal_matching(&g, mmm.edges()).unwrap());
            // lexicographically least witness of minimum size
            let least = subsets(&g)
                .filter(|s| s.len() == brute && is_edge_dominating(&g, s).unwrap())
                .min()
                .unwrap();
            assert_eq!(eds.edges(), least.as_slice());
        }
    }

    #[test]
    fn eds_to_matching_examples() {
        let p4 = Graph::path(4);
        let m = eds_to_matching(&p4, &EdgeDominatingSet::new([(0, 1), (1, 2)])).unwrap();
        assert_eq!(m.edges(), &[(1, 2)]);

        let c6 = Graph::cycle(6);
        let already = EdgeDominatingSet::new([(0, 1), (3, 4)]);
        assert_eq!(eds_to_matching(&c6, &already).unwrap().edges(), already.edges());

        let d = EdgeDominatingSet::new([(0, 1), (1, 2), (3, 4)]);
        let m = eds_to_matching(&c6, &d).unwrap();
        assert!(m.len() <= 3);
        assert!(is_edge_dominating(&c6, m.edges()).unwrap());

        assert_eq!(
            eds_to_matching(&p4, &EdgeDominatingSet::new([(0, 1)])),
            Err(Error::NotDominating)
        );
        assert_eq!(
            eds_to_matching(&p4, &EdgeDominatingSet::new([(0, 3)])),
            Err(Error::ForeignEdge((0, 3)))
        );
    }

    #[test]
    fn eds_to_matching_on_random_supersets() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let d: Vec<Edge> = g.edges().iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
            let d: Vec<Edge> = if is_edge_dominating(&g, &d).unwrap() { d } else { g.edges().to_vec() };
            let m = eds_to_matching(&g, &EdgeDominatingSet::new(d.clone())).unwrap();
            assert!(is_edge_dominating(&g, m.edges()).unwrap());
            assert!(m.len() <= d.len());
        }
    }

    #[test]
    fn random_bipartite_minimizers_agree() {
        for seed in 0..40 {
            let (g, _) = random_bipartite(4, 5, 0.45, seed).unwrap();
            let eds = min_edge_dominating_exact(&g).unwrap();
            let mmm = min_maximal_matching_exact(&g).unwrap();
            assert_eq!(eds.len(), mmm.len());
            let converted = eds_to_matching(&g, &eds).unwrap();
            assert_eq!(converted.len(), eds.len());
        }
    }
}
