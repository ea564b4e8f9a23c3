//! Proper and Grundy colorings, first-fit, and exact Grundy numbers.

use std::collections::HashMap;

use crate::error::{check_cap, Error, Result};
use crate::graph::{check_permutation, Bipartition, Graph};
use crate::matching::maximum_matching;

/// Largest graph accepted by [`grundy_number_exact`].
pub const GRUNDY_EXACT_CAP: usize = 24;

/// A total vertex coloring with colors starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    /// `colors[v]` is the color of vertex `v`. Zero is rejected.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor(v));
        }
        Ok(Coloring { colors })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Number of vertices covered.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// The largest color used, `k`.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Color classes; entry `i` holds the vertices of color `i + 1` in ascending order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors()];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    fn check_total(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::PartialColoring {
                expected: g.n(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// True iff no edge of `g` joins two vertices of the same color.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_total(g)?;
    Ok(g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

/// True iff `c` is a proper coloring whose classes `1..=k` are all
/// non-empty and every vertex of color `j` has a neighbor of each color
/// `i < j`.
pub fn is_grundy(g: &Graph, c: &Coloring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    let k = c.num_colors();
    if c.classes().iter().any(Vec::is_empty) {
        return Ok(false);
    }
    let mut seen = vec![false; k + 1];
    for v in 0..g.n() {
        seen.iter_mut().for_each(|s| *s = false);
        for &w in g.neighbors(v) {
            seen[c.color(w)] = true;
        }
        if !(1..c.color(v)).all(|i| seen[i]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First-fit coloring: vertices are taken in `order`, each receiving the
/// smallest color not already used by a colored neighbor.
pub fn greedy_color(g: &Graph, order: &[usize]) -> Result<Coloring> {
    check_permutation(order, g.n())?;
    let mut colors = vec![0usize; g.n()];
    let mut taken = vec![false; g.n() + 2];
    for &v in order {
        for &w in g.neighbors(v) {
            taken[colors[w]] = true;
        }
        colors[v] = (1..).find(|&c| !taken[c]).unwrap();
        for &w in g.neighbors(v) {
            taken[colors[w]] = false;
        }
    }
    Ok(Coloring { colors })
}

/// Exact Grundy number of `g` with a witness coloring, for `g.n() <= GRUNDY_EXACT_CAP`.
pub fn grundy_number_exact(g: &Graph) -> Result<(usize, Coloring)> {
    grundy_number_exact_capped(g, GRUNDY_EXACT_CAP)
}

/// [`grundy_number_exact`] with an explicit vertex cap (at most 64).
///
/// In a Grundy coloring each class `i` is a maximal independent set of the
/// subgraph left after removing classes `1..i`, and every such peeling
/// sequence is a Grundy coloring. The search maximizes the number of
/// peeling steps, memoized on the set of remaining vertices. At every
/// step the maximal independent sets are tried in lexicographic order and
/// the first one reaching the best value is kept, which fixes the witness.
pub fn grundy_number_exact_capped(g: &Graph, cap: usize) -> Result<(usize, Coloring)> {
    check_cap("vertices for exact Grundy search", cap.min(64), g.n())?;
    let mut search = PeelSearch {
        adj: g.masks(),
        memo: HashMap::new(),
    };
    let all = full_mask(g.n());
    let k = search.longest(all);

    let mut colors = vec![0usize; g.n()];
    let mut rest = all;
    let mut color = 0;
    while rest != 0 {
        let class = search.memo[&rest].1;
        color += 1;
        for v in bits(class) {
            colors[v] = color;
        }
        rest &= !class;
    }
    debug_assert_eq!(color, k);
    Ok((k, Coloring { colors }))
}

struct PeelSearch {
    adj: Vec<u64>,
    // remaining set -> (longest peel, first class of an optimal peel)
    memo: HashMap<u64, (usize, u64)>,
}

impl PeelSearch {
    fn longest(&mut self, rest: u64) -> usize {
        if rest == 0 {
            return 0;
        }
        if let Some(&(k, _)) = self.memo.get(&rest) {
            return k;
        }
        // A vertex of color j has j - 1 neighbors below it.
        let bound = bits(rest)
            .map(|v| (self.adj[v] & rest).count_ones() as usize + 1)
            .max()
            .unwrap();
        let mut classes = Vec::new();
        maximal_independent_sets(&self.adj, 0, rest, 0, &mut classes);
        let mut best = (0, 0);
        for class in classes {
            let k = 1 + self.longest(rest & !class);
            if k > best.0 {
                best = (k, class);
                if k == bound {
                    break;
                }
            }
        }
        self.memo.insert(rest, best);
        best.0
    }
}

// Bron-Kerbosch without pivoting on the complement, so sets come out in lexicographic order.
fn maximal_independent_sets(adj: &[u64], chosen: u64, mut cand: u64, mut excl: u64, out: &mut Vec<u64>) {
    if cand == 0 {
        if excl == 0 {
            out.push(chosen);
        }
        return;
    }
    for v in bits(cand) {
        let keep = !(adj[v] | 1 << v);
        maximal_independent_sets(adj, chosen | 1 << v, cand & keep, excl & keep, out);
        cand &= !(1 << v);
        excl |= 1 << v;
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Set bits of `mask` in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Chromatic number of `complement(b)` for bipartite `b`, computed as
/// `n - μ(b)`: color classes of the complement are single vertices or
/// edges of `b`, so the fewest classes use as many disjoint `b`-edges as
/// possible.
pub fn chromatic_number_cobipartite(b: &Graph, part: &Bipartition) -> Result<usize> {
    let matching = maximum_matching(b, part)?;
    Ok(b.n() - matching.len())
}
