use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted vertex sets.
    pub bags: Vec<Vec<usize>>,
    /// Tree edges between bag indices.
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one (`-1` is reported as 0 for the empty graph).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    /// Checks the three decomposition properties and that the bag graph is a tree.
    pub fn validate(&self, g: &WeightedGraph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        let nb = self.bags.len();
        if g.n() > 0 && nb == 0 {
            return bad("no bags".into());
        }
        if nb > 0 && self.tree_edges.len() != nb - 1 {
            return bad(format!("{} bags but {} tree edges", nb, self.tree_edges.len()));
        }
        let mut uf = UnionFind::<usize>::new(nb);
        for &(a, b) in &self.tree_edges {
            if a >= nb || b >= nb {
                return bad(format!("tree edge ({a}, {b}) names a missing bag"));
            }
            if !uf.union(a, b) {
                return bad("bag graph has a cycle".into());
            }
        }
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (i, bag) in self.bags.iter().enumerate() {
            if !bag.windows(2).all(|w| w[0] < w[1]) {
                return bad(format!("bag {i} is not strictly sorted"));
            }
            for &v in bag {
                if v >= g.n() {
                    return bad(format!("bag {i} holds unknown vertex {v}"));
                }
                holders[v].push(i);
            }
        }
        if let Some(v) = holders.iter().position(Vec::is_empty) {
            return bad(format!("vertex {v} is in no bag"));
        }
        for e in g.edges() {
            if !holders[e.u].iter().any(|&i| self.bags[i].binary_search(&e.v).is_ok()) {
                return bad(format!("edge ({}, {}) is in no bag", e.u, e.v));
            }
        }
        // bags holding v must induce a connected subtree
        for (v, hold) in holders.iter().enumerate() {
            let mut inside = vec![false; nb];
            for &i in hold {
                inside[i] = true;
            }
            let mut uf = UnionFind::<usize>::new(nb);
            let mut merges = 0;
            for &(a, b) in &self.tree_edges {
                if inside[a] && inside[b] && uf.union(a, b) {
                    merges += 1;
                }
            }
            if merges + 1 != hold.len() {
                return bad(format!("bags holding vertex {v} are not connected"));
            }
        }
        Ok(())
    }
}

/// Min-fill elimination, then the usual clique tree: the bag of `v` hangs
/// off the bag of its earliest-eliminated remaining neighbor.
pub fn heuristic_tree_decomposition(g: &WeightedGraph) -> TreeDecomposition {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = g
        .adjacency()
        .into_iter()
        .map(|l| l.into_iter().collect())
        .collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut bag_of = vec![Vec::new(); n];

    let fill = |adj: &[BTreeSet<usize>], v: usize| -> usize {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        let mut missing = 0;
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if !adj[nb[i]].contains(&nb[j]) {
                    missing += 1;
                }
            }
        }
        missing
    };

    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (fill(&adj, v), adj[v].len(), v))
            .expect("a live vertex remains");
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let (a, b) = (nb[i], nb[j]);
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &x in &nb {
            adj[x].remove(&v);
        }
        alive[v] = false;
        let mut bag = nb;
        bag.push(v);
        bag.sort_unstable();
        bag_of[v] = bag;
        order.push(v);
    }

    let mut step = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        step[v] = i;
    }
    let mut tree_edges = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        if i + 1 == n {
            break;
        }
        let parent = bag_of[v]
            .iter()
            .filter(|&&x| x != v)
            .map(|&x| step[x])
            .min()
            .unwrap_or(i + 1);
        tree_edges.push((i, parent));
    }
    let bags = order.iter().map(|&v| std::mem::take(&mut bag_of[v])).collect();
    TreeDecomposition { bags, tree_edges }
}
