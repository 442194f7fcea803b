
use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::report::{Algorithm, SolveReport, Stopwatch};
use crate::structure::CoalitionStructure;

/// Optimal structure of a forest: the connected components of E⁺.
///
/// A negative edge can never join two vertices of one positive component
/// without closing a cycle, so every positive edge is kept and every negative
/// one is cut; the value is exactly W⁺.
pub fn forest_exact(g: &WeightedGraph) -> Result<SolveReport> {
    let started = Stopwatch::start();
    if !g.is_forest() {
        return Err(Error::Cycle);
    }
    let mut uf = UnionFind::<usize>::new(g.n());
    for e in g.positive_edges() {
        uf.union(e.u, e.v);
    }
    let labels: Vec<usize> = (0..g.n()).map(|v| uf.find(v)).collect();
    Ok(SolveReport::new(
        g,
        Algorithm::Forest,
        CoalitionStructure::from_labels(&labels),
        started,
    ))
}
