//! Extended cliques of complements of bipartite graphs.
//!
//! Throughout, `b` is the bipartite graph and the Grundy coloring lives on
//! `complement(b)`. An extended clique is a pair `(I, M)` with `I`
//! independent in `b`, `M` a matching of `b`, and no edge of `M` touching
//! `I`. Its size `|I| + |M|` is the number of colors in the Grundy
//! coloring it induces, and the largest size equals `n - γ′(b)`.

use num_rational::Ratio;

use crate::coloring::{is_grundy, Coloring};
use crate::error::{Error, Result};
use crate::graph::{find_bipartition, normalize, Edge, Graph};
use crate::matching::{maximum_matching, min_maximal_matching_exact, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtendedClique {
    independent: Vec<usize>,
    matching: Vec<Edge>,
}

impl ExtendedClique {
    /// Sorts and deduplicates both parts; validity is checked by [`validate`].
    pub fn new(
        independent: impl IntoIterator<Item = usize>,
        matching: impl IntoIterator<Item = Edge>,
    ) -> Self {
        let mut independent: Vec<usize> = independent.into_iter().collect();
        independent.sort_unstable();
        independent.dedup();
        let mut matching: Vec<Edge> = matching.into_iter().map(normalize).collect();
        matching.sort_unstable();
        matching.dedup();
        ExtendedClique {
            independent,
            matching,
        }
    }

    pub fn independent(&self) -> &[usize] {
        &self.independent
    }

    pub fn matching(&self) -> &[Edge] {
        &self.matching
    }

    /// `|I| + |M|`.
    pub fn size(&self) -> usize {
        self.independent.len() + self.matching.len()
    }
}

/// Checks the three extended-clique conditions against `b`.
///
/// Vertices outside `0..n` and pairs that are not edges of `b` are errors
/// rather than a `false` verdict.
pub fn validate(b: &Graph, ec: &ExtendedClique) -> Result<bool> {
    let n = b.n();
    if let Some(&v) = ec.independent.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if let Some(&e) = ec.matching.iter().find(|&&(u, v)| !b.has_edge(u, v)) {
        return Err(Error::ForeignEdge(e));
    }
    let mut used = vec![false; n];
    for &v in &ec.independent {
        used[v] = true;
    }
    if ec
        .independent
        .iter()
        .any(|&u| b.neighbors(u).iter().any(|&w| used[w]))
    {
        return Ok(false);
    }
    for &(u, v) in &ec.matching {
        if used[u] || used[v] {
            return Ok(false);
        }
        used[u] = true;
        used[v] = true;
    }
    Ok(true)
}

/// A maximum extended clique of bipartite `b`: a minimum maximal matching
/// together with every vertex it leaves uncovered.
pub fn max_extended_clique(b: &Graph) -> Result<ExtendedClique> {
    find_bipartition(b)?;
    let m = min_maximal_matching_exact(b)?;
    Ok(ExtendedClique::new(m.unmatched(b.n()), m.edges().iter().copied()))
}

/// The Grundy coloring of `complement(b)` induced by `ec`.
///
/// Matching edges take colors `1..=|M|` in lexicographic order, then the
/// vertices of `I` take the next colors in ascending order. Remaining
/// vertices are added by first-fit in ascending order.
pub fn coloring_from_extended_clique(b: &Graph, ec: &ExtendedClique) -> Result<Coloring> {
    find_bipartition(b)?;
    if !validate(b, ec)? {
        return Err(Error::InvalidExtendedClique(
            "not an extended clique of the graph".into(),
        ));
    }
    let n = b.n();
    let mut colors = vec![0usize; n];
    let mut next = 0;
    for &(u, v) in &ec.matching {
        next += 1;
        colors[u] = next;
        colors[v] = next;
    }
    for &v in &ec.independent {
        next += 1;
        colors[v] = next;
    }
    // Complement neighbors of v are the non-neighbors in b.
    let mut taken = vec![false; n + 2];
    for v in 0..n {
        if colors[v] != 0 {
            continue;
        }
        taken.iter_mut().for_each(|t| *t = false);
        for w in (0..n).filter(|&w| w != v && !b.has_edge(v, w)) {
            taken[colors[w]] = true;
        }
        colors[v] = (1..).find(|&c| !taken[c]).unwrap();
    }
    Coloring::new(colors)
}

/// Reads an extended clique off a Grundy coloring of `complement(b)`:
/// singleton classes form `I` and two-vertex classes form `M`.
pub fn extended_clique_from_coloring(b: &Graph, c: &Coloring) -> Result<ExtendedClique> {
    let complement = b.complement();
    if c.len() != b.n() {
        return Err(Error::PartialColoring {
            expected: b.n(),
            got: c.len(),
        });
    }
    let classes = c.classes();
    if let Some((i, class)) = classes.iter().enumerate().find(|(_, cl)| cl.len() > 2) {
        return Err(Error::OversizedClass {
            color: i + 1,
            size: class.len(),
        });
    }
    if !is_grundy(&complement, c)? {
        return Err(Error::NotGrundy);
    }
    let mut independent = Vec::new();
    let mut matching = Vec::new();
    for class in classes {
        match class[..] {
            [v] => independent.push(v),
            [u, v] => matching.push((u, v)),
            _ => unreachable!("Grundy classes are non-empty"),
        }
    }
    Ok(ExtendedClique::new(independent, matching))
}

/// Grundy number of `complement(b)` as `n - γ′(b)`, with a witness coloring.
pub fn grundy_number_cobipartite(b: &Graph) -> Result<(usize, Coloring)> {
    let ec = max_extended_clique(b)?;
    let witness = coloring_from_extended_clique(b, &ec)?;
    debug_assert_eq!(witness.num_colors(), ec.size());
    Ok((ec.size(), witness))
}

/// Polynomial bounds on the Grundy number of `complement(b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrundyBounds {
    /// Chromatic number of the complement, `n - μ(b)`.
    pub lower: u64,
    /// `3 * lower / 2`, reduced.
    pub upper: Ratio<u64>,
}

impl GrundyBounds {
    pub fn contains(&self, grundy: u64) -> bool {
        self.lower <= grundy && Ratio::from_integer(grundy) <= self.upper
    }
}

/// `lower <= Γ(complement(b)) <= 3 * lower / 2`, from a maximum matching.
pub fn approx_grundy(b: &Graph) -> Result<GrundyBounds> {
    let part = find_bipartition(b)?;
    let mu: Matching = maximum_matching(b, &part)?;
    let lower = (b.n() - mu.len()) as u64;
    Ok(GrundyBounds {
        lower,
        upper: Ratio::new(3 * lower, 2),
    })
}
