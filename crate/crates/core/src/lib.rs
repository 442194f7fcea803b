//! Coalition structure generation for weighted graph games.
//!
//! Agents are the vertices of an undirected graph with rational edge weights;
//! a coalition is worth the total weight of the edges it induces, and a
//! coalition structure (a partition of the vertices) is worth the sum over its
//! coalitions. This crate finds optimal structures exactly on small, forest
//! and low-treewidth instances, and approximately elsewhere by covering the
//! positive edges with few *feasible sets*.
//!
//! ```
//! use wgg_core::{approx::cover_and_pick, exact::brute_force_opt, io::parse_graph};
//!
//! let g = parse_graph("3 3\n0 1 2\n1 2 3\n0 2 -4\n").unwrap();
//! assert_eq!(brute_force_opt(&g).unwrap().value.to_string(), "3");
//! let approx = cover_and_pick(&g);
//! assert!(approx.meets_guarantee());
//! ```

pub mod approx;
pub mod decomp;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod io;
pub mod report;
pub mod structure;
pub mod weight;

#[cfg(test)]
mod test_graphs;

pub use error::{Error, Result};
pub use graph::{normalize_graph, Edge, WeightedGraph};
pub use report::{Algorithm, SolveReport};
pub use structure::{
    coalition_value, positive_weight_sum, structure_value, validate_structure, CoalitionStructure,
};
pub use weight::Weight;

/// Runs any solver by name. `epsilon` is required by the bounded-degree
/// solver only; the tree-decomposition solver uses the min-fill heuristic.
pub fn solve(
    g: &WeightedGraph,
    algorithm: Algorithm,
    epsilon: Option<&Weight>,
    seed: u64,
) -> Result<SolveReport> {
    match algorithm {
        Algorithm::Brute => exact::brute_force_opt(g),
        Algorithm::Forest => exact::forest_exact(g),
        Algorithm::Treewidth => {
            exact::treewidth_exact(g, &decomp::heuristic_tree_decomposition(g))
        }
        Algorithm::Cover => Ok(approx::cover_and_pick(g)),
        Algorithm::BoundedDegree => {
            let eps = epsilon.ok_or_else(|| {
                Error::InvalidParameter("bounded-degree needs an epsilon".into())
            })?;
            approx::bounded_degree_solve(g, eps, seed)
        }
    }
}
