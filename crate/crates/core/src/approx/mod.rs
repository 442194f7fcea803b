//! Approximation by covering E⁺ with feasible sets and keeping the best
//! achieving partition.
//!
//! The guarantee of every solver here is `value ≥ W⁺ / k` where `k` is the
//! number of sets actually produced, reported in
//! [`SolveReport::feasible_set_count`].

mod bounded;
mod cover;
mod feasible;

pub use bounded::{bounded_degree_solve, palette_size, randomized_edge_coloring, EdgeColoring};
pub use cover::{cover_and_pick, feasible_cover};
pub use feasible::{
    forest_to_feasible_sets, is_feasible, matching_to_partition, star_union_to_feasible_sets,
    FeasibleSet,
};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::report::SolveReport;
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    Cover,
    BoundedDegree { epsilon: Weight, seed: u64 },
}

impl Strategy {
    /// `cover` or `bounded-degree`; the latter needs an epsilon (seed defaults to 0).
    pub fn parse(name: &str, epsilon: Option<Weight>, seed: Option<u64>) -> Result<Self> {
        match name {
            "cover" => Ok(Strategy::Cover),
            "bounded-degree" => Ok(Strategy::BoundedDegree {
                epsilon: epsilon.ok_or_else(|| {
                    Error::InvalidParameter("bounded-degree needs an epsilon".into())
                })?,
                seed: seed.unwrap_or(0),
            }),
            other => Err(Error::UnknownStrategy(other.to_string())),
        }
    }
}

pub fn approx_solve(g: &WeightedGraph, strategy: &Strategy) -> Result<SolveReport> {
    match strategy {
        Strategy::Cover => Ok(cover_and_pick(g)),
        Strategy::BoundedDegree { epsilon, seed } => bounded_degree_solve(g, epsilon, *seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::triangle;

    #[test]
    fn dispatch() {
        let g = triangle();
        let r = approx_solve(&g, &Strategy::parse("cover", None, None).unwrap()).unwrap();
        assert_eq!(r.value, Weight::from(3));

        let s = Strategy::parse("bounded-degree", Some(Weight::from(1)), Some(7)).unwrap();
        let a = approx_solve(&g, &s).unwrap();
        let b = approx_solve(&g, &s).unwrap();
        assert_eq!(a.without_timing(), b.without_timing());
        assert!(a.meets_guarantee());

        let empty = WeightedGraph::empty(0);
        assert_eq!(approx_solve(&empty, &s).unwrap().value, Weight::zero());
        assert_eq!(approx_solve(&empty, &Strategy::Cover).unwrap().value, Weight::zero());
    }

    #[test]
    fn unknown_strategy() {
        assert_eq!(
            Strategy::parse("ptas", None, None),
            Err(Error::UnknownStrategy("ptas".into()))
        );
        assert!(Strategy::parse("bounded-degree", None, None).is_err());
    }
}
