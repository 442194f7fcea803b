//! Forest cover of the positive edges and the split of a forest into two
//! star unions.

use std::collections::{BTreeMap, HashMap, VecDeque};

use petgraph::unionfind::UnionFind;

use crate::decomp::degeneracy::peel;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// An undirected edge as an ordered pair `(min, max)`.
pub type EdgePair = (usize, usize);

pub(crate) fn pair(a: usize, b: usize) -> EdgePair {
    (a.min(b), a.max(b))
}

/// Disjoint forests whose union is E⁺.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestCover {
    pub classes: Vec<Vec<EdgePair>>,
    /// Degeneracy of the positive subgraph.
    pub positive_degeneracy: usize,
}

/// Orients every positive edge from its earlier-peeled endpoint to the later
/// one (degeneracy order of G⁺). Class `i` takes the `i`-th out-edge of every
/// vertex, out-edges ranked by neighbor id; each class is a forest because
/// every vertex contributes at most one edge to it along an acyclic orientation.
pub fn forest_cover_positive(g: &WeightedGraph) -> ForestCover {
    let adj = g.positive_adjacency();
    let ordering = peel(&adj);
    let pos = ordering.positions();
    let mut classes: Vec<Vec<EdgePair>> = vec![Vec::new(); ordering.d];
    for v in 0..g.n() {
        // adjacency lists are sorted by neighbor id
        let outs = adj[v].iter().filter(|&&x| pos[x] > pos[v]);
        for (i, &x) in outs.enumerate() {
            classes[i].push(pair(v, x));
        }
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    ForestCover { classes, positive_degeneracy: ordering.d }
}

/// True when the edges contain no cycle.
pub fn is_acyclic(edges: &[EdgePair]) -> bool {
    let mut ids = HashMap::new();
    for &(a, b) in edges {
        for x in [a, b] {
            let next = ids.len();
            ids.entry(x).or_insert(next);
        }
    }
    let mut uf = UnionFind::<usize>::new(ids.len());
    edges.iter().all(|&(a, b)| uf.union(ids[&a], ids[&b]))
}

/// Structural star-union test: acyclic, and no simple path with three edges.
/// In a forest such a path exists exactly when some edge has both endpoints of
/// degree at least two.
pub fn is_star_union(edges: &[EdgePair]) -> bool {
    if !is_acyclic(edges) {
        return false;
    }
    let mut deg: HashMap<usize, usize> = HashMap::new();
    for &(a, b) in edges {
        *deg.entry(a).or_default() += 1;
        *deg.entry(b).or_default() += 1;
    }
    edges.iter().all(|(a, b)| deg[a] == 1 || deg[b] == 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

/// Vertex-disjoint stars.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StarUnion {
    pub stars: Vec<Star>,
}

impl StarUnion {
    pub fn edges(&self) -> Vec<EdgePair> {
        let mut out: Vec<EdgePair> = self
            .stars
            .iter()
            .flat_map(|s| s.leaves.iter().map(move |&l| pair(s.center, l)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    fn from_children(children: BTreeMap<usize, Vec<usize>>) -> Self {
        StarUnion {
            stars: children
                .into_iter()
                .map(|(center, mut leaves)| {
                    leaves.sort_unstable();
                    Star { center, leaves }
                })
                .collect(),
        }
    }
}

/// Splits a forest by BFS depth parity, rooting each tree at its smallest
/// vertex. Edges whose deeper endpoint sits at odd depth form the first union
/// (blue), the rest the second (red).
pub fn forest_to_star_unions(forest: &[EdgePair]) -> Result<(StarUnion, StarUnion)> {
    if !is_acyclic(forest) {
        return Err(Error::Cycle);
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in forest {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }
    let mut depth: HashMap<usize, usize> = HashMap::new();
    let mut blue: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut red: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let roots: Vec<usize> = adj.keys().copied().collect();
    for root in roots {
        if depth.contains_key(&root) {
            continue;
        }
        depth.insert(root, 0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let dv = depth[&v];
            for &x in &adj[&v] {
                if depth.contains_key(&x) {
                    continue;
                }
                depth.insert(x, dv + 1);
                queue.push_back(x);
                let side = if (dv + 1) % 2 == 1 { &mut blue } else { &mut red };
                side.entry(v).or_default().push(x);
            }
        }
    }
    Ok((StarUnion::from_children(blue), StarUnion::from_children(red)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::normalize_graph;
    use crate::test_graphs::{cycle, path, star};

    #[test]
    fn tree_is_one_class() {
        let g = path(5);
        let cover = forest_cover_positive(&g);
        assert_eq!(cover.classes.len(), 1);
        assert_eq!(cover.classes[0], vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn four_cycle_two_forests() {
        let cover = forest_cover_positive(&cycle(4));
        assert_eq!(cover.classes.len(), 2);
        let mut all: Vec<EdgePair> = cover.classes.concat();
        all.sort_unstable();
        assert_eq!(all, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(cover.classes.iter().all(|c| is_acyclic(c)));
    }

    #[test]
    fn empty_positive_part() {
        let g = normalize_graph(3, [(0, 1, (-1).into())]).unwrap();
        assert!(forest_cover_positive(&g).classes.is_empty());
    }

    #[test]
    fn path_alternates() {
        let p = [(0, 1), (1, 2), (2, 3), (3, 4)];
        let (blue, red) = forest_to_star_unions(&p).unwrap();
        assert_eq!(blue.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(red.edges(), vec![(1, 2), (3, 4)]);
        assert!(is_star_union(&blue.edges()) && is_star_union(&red.edges()));
    }

    #[test]
    fn star_stays_whole() {
        let g = star(3);
        let edges: Vec<EdgePair> = g.edges().iter().map(|e| e.key()).collect();
        let (blue, red) = forest_to_star_unions(&edges).unwrap();
        assert_eq!(blue.edges(), edges);
        assert!(red.is_empty());
        assert_eq!(blue.stars, vec![Star { center: 0, leaves: vec![1, 2, 3] }]);
    }

    #[test]
    fn single_edge_and_cycle_rejection() {
        let (blue, red) = forest_to_star_unions(&[(3, 7)]).unwrap();
        assert_eq!(blue.edges(), vec![(3, 7)]);
        assert!(red.is_empty());
        assert_eq!(
            forest_to_star_unions(&[(0, 1), (1, 2), (0, 2)]),
            Err(Error::Cycle)
        );
    }

    #[test]
    fn star_criterion() {
        assert!(is_star_union(&[(0, 1), (0, 2), (3, 4)]));
        assert!(!is_star_union(&[(0, 1), (1, 2), (2, 3)]));
        assert!(!is_star_union(&[(0, 1), (1, 2), (0, 2)]));
    }
}
