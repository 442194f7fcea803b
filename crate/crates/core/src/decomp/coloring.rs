use crate::decomp::DegeneracyOrdering;
use crate::graph::WeightedGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    pub color: Vec<usize>,
    pub num_colors: usize,
}

impl VertexColoring {
    /// First edge (of either sign) whose endpoints share a color.
    pub fn conflict(&self, g: &WeightedGraph) -> Option<(usize, usize)> {
        g.edges()
            .iter()
            .find(|e| self.color[e.u] == self.color[e.v])
            .map(|e| (e.u, e.v))
    }
}

/// Colors vertices in reverse peeling order with the smallest color unused by
/// already-colored neighbors. Uses at most `d + 1` colors.
pub fn greedy_coloring(g: &WeightedGraph, ordering: &DegeneracyOrdering) -> VertexColoring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let width = (0..n).map(|v| g.degree(v)).max().unwrap_or(0) + 1;
    let mut taken = vec![usize::MAX; width];
    let mut num_colors = 0;
    for &v in ordering.order.iter().rev() {
        for &(x, _) in g.neighbors(v) {
            let c = color[x];
            if c < taken.len() {
                taken[c] = v;
            }
        }
        let c = (0..taken.len())
            .find(|&c| taken[c] != v)
            .expect("fewer colored neighbors than slots");
        color[v] = c;
        num_colors = num_colors.max(c + 1);
    }
    VertexColoring { color, num_colors }
}
