//! Simple undirected graphs over `0..n`, bipartitions, complements and total graphs.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Unordered vertex pair, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Orders the endpoints of `(u, v)`.
pub fn normalize((u, v): Edge) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// An undirected simple graph on the vertices `0..n`.
///
/// The edge list is kept sorted and deduplicated, so two graphs are equal
/// exactly when their vertex counts and edge sets agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalizing endpoint order and dropping duplicate edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(normalize((u, v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, edges)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_sorted(n, edges)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are in range")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(a + b, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&normalize(e)).ok()
    }

    /// Neighborhood bitmasks, one `u64` per vertex. Only valid for `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &w| acc | 1 << w))
            .collect()
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// The graph on the same vertices whose edges are exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.m());
        for u in 0..self.n {
            let mut nbrs = self.adj[u].iter().peekable();
            for v in u + 1..self.n {
                while nbrs.next_if(|&&w| w < v).is_some() {}
                if nbrs.next_if_eq(&&v).is_none() {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_sorted(self.n, edges)
    }

    /// True iff every vertex has degree at most `bound`.
    pub fn max_degree_at_most(&self, bound: usize) -> bool {
        self.adj.iter().all(|list| list.len() <= bound)
    }
}

pub(crate) fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::InvalidPermutation(n));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPermutation(n));
        }
    }
    Ok(())
}

/// True iff every vertex of `g` has degree at most `bound`.
pub fn max_degree_filter(g: &Graph, bound: usize) -> bool {
    g.max_degree_at_most(bound)
}

/// The two sides of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl Bipartition {
    /// Builds a bipartition from its two sides; both are sorted.
    pub fn new(mut x: Vec<usize>, mut y: Vec<usize>) -> Self {
        x.sort_unstable();
        y.sort_unstable();
        Bipartition { x, y }
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    /// `true` for vertices in X. Panics on out-of-range vertices.
    pub fn in_x(&self, v: usize) -> bool {
        self.x.binary_search(&v).is_ok()
    }

    /// Checks that the sides partition `0..n` and every edge crosses them.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidBipartition(msg));
        let mut side = vec![None; g.n()];
        for (part, flag) in [(&self.x, true), (&self.y, false)] {
            for &v in part {
                if v >= g.n() {
                    return invalid(format!("vertex {v} out of range"));
                }
                if side[v].replace(flag).is_some() {
                    return invalid(format!("vertex {v} listed twice"));
                }
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return invalid(format!("vertex {v} is in neither side"));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| side[u] == side[v]) {
            return invalid(format!("edge ({u}, {v}) lies inside one side"));
        }
        Ok(())
    }
}

/// Two-colors `g` by breadth-first search.
///
/// Components are visited in ascending order of their least vertex, which
/// is always placed in X. A non-bipartite graph yields
/// [`Error::OddCycle`] with the vertices of an odd cycle in cycle order.
pub fn find_bipartition(g: &Graph) -> Result<Bipartition> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(true);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return Err(Error::OddCycle(odd_cycle(&parent, u, w))),
                    Some(_) => {}
                }
            }
        }
    }
    let (x, y): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| side[v] == Some(true));
    Ok(Bipartition { x, y })
}

// Closes the BFS tree paths from `u` and `w` at their lowest common ancestor.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let to_root = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let mut pu = to_root(u);
    let mut pw = to_root(w);
    let mut lca = usize::MAX;
    while let (Some(&a), Some(&b)) = (pu.last(), pw.last()) {
        if a != b {
            break;
        }
        lca = a;
        pu.pop();
        pw.pop();
    }
    let mut cycle = vec![lca];
    cycle.extend(pu.iter().rev());
    cycle.extend(pw.iter());
    cycle
}

/// What a vertex of a total graph stands for in the original graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TotalVertex {
    Vertex(usize),
    Edge(Edge),
}

/// Back-mapping from total-graph vertices to original vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalGraphMap {
    origin: Vec<TotalVertex>,
}

impl TotalGraphMap {
    pub fn origin(&self, t: usize) -> TotalVertex {
        self.origin[t]
    }

    pub fn len(&self) -> usize {
        self.origin.len()
    }

    pub fn is_empty(&self) -> bool {
        self.origin.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = TotalVertex> + '_ {
        self.origin.iter().copied()
    }
}

/// Builds the total graph `T(g)`.
///
/// Vertices `0..n` are the original vertices; the edges of `g`, in
/// lexicographic order, become vertices `n, n + 1, ...`. Two original
/// vertices are adjacent when they are adjacent in `g`, two edges when they
/// share an endpoint, and a vertex and an edge when the vertex is an
/// endpoint of the edge.
pub fn total_graph(g: &Graph) -> (Graph, TotalGraphMap) {
    let n = g.n();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    // Edges meeting at a vertex form a clique in T(g).
    for v in 0..n {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| n + g.edge_index((v, w)).expect("neighbor edge exists"))
            .collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    let origin = (0..n)
        .map(TotalVertex::Vertex)
        .chain(g.edges().iter().map(|&e| TotalVertex::Edge(e)))
        .collect();
    let total = Graph::new(n + g.m(), edges).expect("total graph edges are valid");
    (total, TotalGraphMap { origin })
}

/// Random bipartite graph with X = `0..n1`, Y = `n1..n1+n2`.
///
/// Each of the `n1 * n2` cross pairs is included independently with
/// probability `p`, drawn in lexicographic pair order from a ChaCha8
/// stream seeded with `seed`.
pub fn random_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Result<(Graph, Bipartition)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_bipartite(&mut rng, n1, n2, p)
}

/// Like [`random_bipartite`] but redraws from the same stream until every
/// degree is at most `max_degree`, giving up after `retries` draws.
pub fn random_bipartite_bounded(
    n1: usize,
    n2: usize,
    p: f64,
    seed: u64,
    max_degree: usize,
    retries: usize,
) -> Result<(Graph, Bipartition)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..retries {
        let (g, part) = sample_bipartite(&mut rng, n1, n2, p)?;
        if max_degree_filter(&g, max_degree) {
            return Ok((g, part));
        }
    }
    Err(Error::RetriesExhausted(retries))
}

pub(crate) fn sample_bipartite<R: Rng>(
    rng: &mut R,
    n1: usize,
    n2: usize,
    p: f64,
) -> Result<(Graph, Bipartition)> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut edges = Vec::new();
    for u in 0..n1 {
        for v in n1..n1 + n2 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let part = Bipartition::new((0..n1).collect(), (n1..n1 + n2).collect());
    Ok((Graph::from_sorted(n1 + n2, edges), part))
}
