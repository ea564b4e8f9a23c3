//! Grundy numbers of complements of bipartite graphs.
//!
//! For a bipartite graph `b` on `n` vertices the Grundy number of its
//! complement can be computed four ways that must agree: the largest
//! first-fit coloring, the largest extended clique, the independence
//! number of the total graph `T(b)`, and `n` minus the size of a minimum
//! maximal matching of `b`. This crate implements each route, the
//! conversions between colorings, extended cliques and edge dominating
//! sets, the 3/2 approximation from a maximum matching, and a suite that
//! checks all of them against brute-force oracles.
//!
//! ```
//! use cobigrundy::{grundy_number_cobipartite, Graph};
//!
//! let p4 = Graph::path(4);
//! let (gamma, witness) = grundy_number_cobipartite(&p4).unwrap();
//! assert_eq!(gamma, 3);
//! assert_eq!(witness.num_colors(), 3);
//! ```

pub mod coloring;
pub mod error;
pub mod extended_clique;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracles;
pub mod reduction;
pub mod verify;

pub use coloring::{
    chromatic_number_cobipartite, greedy_color, grundy_number_exact, is_grundy, is_proper,
    Coloring,
};
pub use error::{Error, Result};
pub use extended_clique::{
    approx_grundy, coloring_from_extended_clique, extended_clique_from_coloring,
    grundy_number_cobipartite, max_extended_clique, ExtendedClique, GrundyBounds,
};
pub use graph::{
    find_bipartition, max_degree_filter, random_bipartite, total_graph, Bipartition, Edge, Graph,
    TotalGraphMap, TotalVertex,
};
pub use matching::{
    eds_to_matching, is_edge_dominating, is_maximal_matching, maximum_matching,
    min_edge_dominating_exact, min_maximal_matching_exact, EdgeDominatingSet, Matching,
};
pub use reduction::{
    eds_from_extended_clique, extended_clique_from_eds, reduce_eds_to_grundy, verify_reduction,
    EdsInstance, GrundyInstance, ReductionReport, Verdict,
};
pub use num_rational::Ratio;
