//! Feasible sets: subsets of E⁺ that some partition keeps intact while
//! separating the endpoints of every negative edge.

use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;

use crate::decomp::{forest_to_star_unions, pair, EdgePair, StarUnion, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::structure::CoalitionStructure;
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibleSet {
    /// Sorted positive edges.
    pub edges: Vec<EdgePair>,
    /// A partition achieving the edges.
    pub partition: CoalitionStructure,
}

impl FeasibleSet {
    /// Total weight of the set's edges.
    pub fn weight(&self, g: &WeightedGraph) -> Weight {
        self.edges
            .iter()
            .filter_map(|&(a, b)| g.weight(a, b))
            .sum()
    }

    /// Checks the defining property directly against the partition: each set
    /// edge lies inside a coalition and every negative edge crosses.
    pub fn achieved_by_partition(&self, g: &WeightedGraph) -> bool {
        self.partition.n() == g.n()
            && self.edges.iter().all(|&(a, b)| {
                g.weight(a, b).is_some_and(Weight::is_positive) && self.partition.same(a, b)
            })
            && g.negative_edges().all(|e| !self.partition.same(e.u, e.v))
    }
}

fn check_positive(g: &WeightedGraph, edges: &[EdgePair]) -> Result<()> {
    for &(a, b) in edges {
        if !g.weight(a, b).is_some_and(Weight::is_positive) {
            return Err(Error::NotPositiveEdge(a, b));
        }
    }
    Ok(())
}

/// An edge set is feasible iff no negative edge has both endpoints in one
/// connected component of `(V, edges)`. On success the components (plus
/// singletons) are returned as the witness partition.
pub fn is_feasible(g: &WeightedGraph, edges: &[EdgePair]) -> Result<Option<CoalitionStructure>> {
    check_positive(g, edges)?;
    let mut uf = UnionFind::<usize>::new(g.n());
    for &(a, b) in edges {
        uf.union(a, b);
    }
    if g.negative_edges().any(|e| uf.equiv(e.u, e.v)) {
        return Ok(None);
    }
    let labels: Vec<usize> = (0..g.n()).map(|v| uf.find(v)).collect();
    Ok(Some(CoalitionStructure::from_labels(&labels)))
}

fn normalized(edges: &[EdgePair]) -> Vec<EdgePair> {
    let mut out: Vec<EdgePair> = edges.iter().map(|&(a, b)| pair(a, b)).collect();
    out.sort_unstable();
    out
}

/// One two-vertex coalition per matching edge. Feasible because the graph
/// holds at most one edge per pair, so no negative edge can share a pair with
/// a matched positive edge.
pub fn matching_to_partition(g: &WeightedGraph, matching: &[EdgePair]) -> Result<FeasibleSet> {
    let edges = normalized(matching);
    check_positive(g, &edges)?;
    let mut labels: Vec<usize> = (0..g.n()).collect();
    let mut used = vec![false; g.n()];
    for &(a, b) in &edges {
        for x in [a, b] {
            if std::mem::replace(&mut used[x], true) {
                return Err(Error::NotAMatching(x));
            }
        }
        labels[b] = a;
    }
    Ok(FeasibleSet { edges, partition: CoalitionStructure::from_labels(&labels) })
}

/// Covers a star union with at most χ−1 feasible sets. Leaf colors are
/// indexed relative to their center's color (skipping it), and set `j` joins
/// every center with its leaves of relative color `j`. Those leaves share a
/// color, so a proper coloring guarantees no edge among them.
pub fn star_union_to_feasible_sets(
    g: &WeightedGraph,
    stars: &StarUnion,
    coloring: &VertexColoring,
) -> Result<Vec<FeasibleSet>> {
    if coloring.color.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "coloring covers {} vertices, graph has {}",
            coloring.color.len(),
            g.n()
        )));
    }
    if let Some((a, b)) = coloring.conflict(g) {
        return Err(Error::ImproperColoring(a, b));
    }
    check_positive(g, &stars.edges())?;

    let mut groups: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for s in &stars.stars {
        let cc = coloring.color[s.center];
        for &leaf in &s.leaves {
            let lc = coloring.color[leaf];
            let rel = if lc < cc { lc } else { lc - 1 };
            groups.entry(rel).or_default().push((s.center, leaf));
        }
    }
    Ok(groups
        .into_values()
        .map(|members| {
            let mut labels: Vec<usize> = (0..g.n()).collect();
            for &(c, l) in &members {
                labels[l] = c;
            }
            FeasibleSet {
                edges: normalized(&members),
                partition: CoalitionStructure::from_labels(&labels),
            }
        })
        .collect())
}

/// Two star unions by depth parity, each covered via the coloring: at most
/// 2(χ−1) sets.
pub fn forest_to_feasible_sets(
    g: &WeightedGraph,
    forest: &[EdgePair],
    coloring: &VertexColoring,
) -> Result<Vec<FeasibleSet>> {
    let (blue, red) = forest_to_star_unions(forest)?;
    let mut sets = star_union_to_feasible_sets(g, &blue, coloring)?;
    sets.extend(star_union_to_feasible_sets(g, &red, coloring)?);
    Ok(sets)
}
