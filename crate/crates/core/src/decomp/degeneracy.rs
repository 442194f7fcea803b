use std::collections::BTreeSet;

use crate::graph::WeightedGraph;

/// Min-degree peeling order of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    /// Vertices in removal order.
    pub order: Vec<usize>,
    /// Degree of `order[i]` in the graph that remained when it was removed.
    pub residual: Vec<usize>,
    /// The degeneracy: largest residual degree seen.
    pub d: usize,
}

impl DegeneracyOrdering {
    /// `position[v]` = index of `v` in the removal order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Start of a suffix of the order whose induced subgraph has minimum
    /// degree exactly `d`, which certifies that no ordering does better.
    pub fn core_start(&self) -> usize {
        self.residual.iter().position(|&r| r == self.d).unwrap_or(0)
    }
}

/// Repeatedly removes a vertex of minimum remaining degree, smallest id first.
pub fn degeneracy_ordering(g: &WeightedGraph) -> DegeneracyOrdering {
    peel(&g.adjacency())
}

pub(crate) fn peel(adj: &[Vec<usize>]) -> DegeneracyOrdering {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut residual = Vec::with_capacity(n);
    let mut d = 0;
    while let Some((k, v)) = queue.pop_first() {
        removed[v] = true;
        order.push(v);
        residual.push(k);
        d = d.max(k);
        for &x in &adj[v] {
            if !removed[x] {
                queue.remove(&(deg[x], x));
                deg[x] -= 1;
                queue.insert((deg[x], x));
            }
        }
    }
    DegeneracyOrdering { order, residual, d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::{cycle, complete, path};

    #[test]
    fn known_degeneracies() {
        assert_eq!(degeneracy_ordering(&path(6)).d, 1);
        assert_eq!(degeneracy_ordering(&cycle(5)).d, 2);
        assert_eq!(degeneracy_ordering(&complete(4)).d, 3);
        assert_eq!(degeneracy_ordering(&WeightedGraph::empty(3)).d, 0);
    }

    #[test]
    fn ties_break_toward_smallest_id() {
        let o = degeneracy_ordering(&cycle(4));
        assert_eq!(o.order, vec![0, 1, 2, 3]);
        assert_eq!(o.residual, vec![2, 1, 1, 0]);
    }

    #[test]
    fn later_neighbors_bounded_by_d() {
        let g = complete(5);
        let o = degeneracy_ordering(&g);
        let pos = o.positions();
        for v in 0..g.n() {
            let later = g.neighbors(v).iter().filter(|&&(x, _)| pos[x] > pos[v]).count();
            assert!(later <= o.d);
        }
        assert_eq!(o.core_start(), 0);
    }
}
