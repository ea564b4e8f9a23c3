//! Brute-force solvers used to certify the structural identities.
//!
//! Nothing here calls into the coloring, matching or extended-clique
//! solvers; only the [`Graph`] type is shared.

use crate::error::{check_cap, Result};
use crate::graph::{find_bipartition, Bipartition, Edge, Graph};

pub const INDEPENDENT_SET_CAP: usize = 64;
pub const ORDERINGS_CAP: usize = 9;
pub const COLORINGS_CAP: usize = 6;
pub const EXTENDED_CLIQUE_CAP: usize = 16;
pub const ENUMERATION_CAP: usize = 7;

fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn low_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

/// A maximum independent set of `g`, in ascending order.
///
/// Branch and bound over vertex bitmasks: a vertex with at most one
/// remaining neighbor is always taken, otherwise the branch is on the
/// lowest vertex of largest remaining degree.
pub fn max_independent_set_exact(g: &Graph) -> Result<Vec<usize>> {
    check_cap("vertices for independent set search", INDEPENDENT_SET_CAP, g.n())?;
    let adj = adjacency(g);
    let mut best = 0u64;
    mis_branch(&adj, low_mask(g.n()), 0, &mut best);
    Ok((0..g.n()).filter(|&v| best >> v & 1 == 1).collect())
}

fn mis_branch(adj: &[u64], cand: u64, chosen: u64, best: &mut u64) {
    if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    if cand == 0 {
        *best = chosen;
        return;
    }
    let mut pick = None;
    let mut widest = (0u32, 0usize);
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d <= 1 {
            pick = Some(v);
            break;
        }
        if d > widest.0 {
            widest = (d, v);
        }
    }
    match pick {
        Some(v) => mis_branch(adj, cand & !(adj[v] | 1 << v), chosen | 1 << v, best),
        None => {
            let v = widest.1;
            mis_branch(adj, cand & !(adj[v] | 1 << v), chosen | 1 << v, best);
            mis_branch(adj, cand & !(1 << v), chosen, best);
        }
    }
}

/// Largest number of colors first-fit uses over all `n!` vertex orders.
pub fn grundy_exact_by_orderings(g: &Graph) -> Result<usize> {
    check_cap("vertices for ordering enumeration", ORDERINGS_CAP, g.n())?;
    let n = g.n();
    let mut state = Orderings {
        adj: adjacency(g),
        color: vec![0; n],
        best: 0,
        n,
    };
    state.extend(0, 0);
    Ok(state.best)
}

struct Orderings {
    adj: Vec<u64>,
    color: Vec<usize>,
    best: usize,
    n: usize,
}

impl Orderings {
    fn extend(&mut self, placed: u64, top: usize) {
        if placed.count_ones() as usize == self.n {
            self.best = self.best.max(top);
            return;
        }
        for v in 0..self.n {
            if self.best == self.n {
                return;
            }
            if placed >> v & 1 == 1 {
                continue;
            }
            let mut seen = 0u64;
            let mut nb = self.adj[v] & placed;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << self.color[w];
            }
            // colors start at 1, so bit 0 is always free
            let c = (!(seen | 1)).trailing_zeros() as usize;
            self.color[v] = c;
            self.extend(placed | 1 << v, top.max(c));
            self.color[v] = 0;
        }
    }
}

/// Largest `k` such that some assignment of colors from `1..=n` is a
/// Grundy `k`-coloring. Assignments are enumerated vertex by vertex; a
/// partial assignment with a monochromatic edge is abandoned early.
pub fn grundy_exact_by_colorings(g: &Graph) -> Result<usize> {
    check_cap("vertices for coloring enumeration", COLORINGS_CAP, g.n())?;
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut best = 0;
    assign(g, 0, &mut colors, &mut best);
    Ok(best)
}

fn assign(g: &Graph, v: usize, colors: &mut [usize], best: &mut usize) {
    let n = g.n();
    if v == n {
        if let Some(k) = grundy_colors(g, colors) {
            *best = (*best).max(k);
        }
        return;
    }
    for c in 1..=n {
        if g.neighbors(v).iter().any(|&w| w < v && colors[w] == c) {
            continue;
        }
        colors[v] = c;
        assign(g, v + 1, colors, best);
    }
    colors[v] = 0;
}

// Number of colors if `colors` is a Grundy coloring of `g`.
fn grundy_colors(g: &Graph, colors: &[usize]) -> Option<usize> {
    let k = colors.iter().copied().max().unwrap_or(0);
    if (1..=k).any(|c| !colors.contains(&c)) {
        return None;
    }
    for v in 0..g.n() {
        for lower in 1..colors[v] {
            if !g.neighbors(v).iter().any(|&w| colors[w] == lower) {
                return None;
            }
        }
        if g.neighbors(v).iter().any(|&w| colors[w] == colors[v]) {
            return None;
        }
    }
    Some(k)
}

/// Largest `|I| + |M|` over independent sets `I` and matchings `M` of `b`
/// that avoid each other.
///
/// Every matching is enumerated; for each, the largest independent subset
/// of the uncovered vertices is read from a table over all vertex subsets.
pub fn max_extended_clique_brute(b: &Graph) -> Result<usize> {
    check_cap("vertices for extended clique enumeration", EXTENDED_CLIQUE_CAP, b.n())?;
    let n = b.n();
    let adj = adjacency(b);
    // alpha[mask]: independence number of the subgraph induced by mask
    let mut alpha = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let without = mask & !(1 << v);
        let with = without & !(adj[v] as usize);
        alpha[mask] = alpha[without].max(1 + alpha[with]);
    }
    let mut best = 0;
    matchings(b.edges(), 0, 0, &mut |used, size| {
        let free = low_mask(n) as usize & !(used as usize);
        best = best.max(size + alpha[free] as usize);
    });
    Ok(best)
}

fn matchings(edges: &[Edge], used: u64, size: usize, visit: &mut impl FnMut(u64, usize)) {
    match edges.split_first() {
        None => visit(used, size),
        Some((&(u, v), rest)) => {
            matchings(rest, used, size, visit);
            if used & (1 << u | 1 << v) == 0 {
                matchings(rest, used | 1 << u | 1 << v, size + 1, visit);
            }
        }
    }
}

/// Every labeled graph on exactly `n` vertices, by ascending edge mask
/// over the lexicographically ordered vertex pairs.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_cap("vertices for graph enumeration", ENUMERATION_CAP, n)?;
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("pairs are valid edges")
    }))
}

/// Every labeled bipartite graph on `1..=max_n` vertices with its
/// bipartition, ordered by vertex count and then by edge mask.
pub fn enumerate_bipartite_graphs(max_n: usize) -> Result<impl Iterator<Item = (Graph, Bipartition)>> {
    check_cap("vertices for graph enumeration", ENUMERATION_CAP, max_n)?;
    let per_n = (1..=max_n).map(|n| enumerate_graphs(n).expect("within cap"));
    Ok(per_n
        .flatten()
        .filter_map(|g| find_bipartition(&g).ok().map(|part| (g, part))))
}
