//! The game instance: an undirected graph with exact rational edge weights.

use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::weight::Weight;

/// A normalized undirected edge, `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: Weight,
}

impl Edge {
    pub fn key(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

/// Normalized weighted graph. Edges are unique per unordered pair, never
/// zero-weight, and stored sorted by `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    // (neighbor, edge index), sorted by neighbor
    adj: Vec<Vec<(usize, usize)>>,
    // sign of each edge, so sign filters never touch the big integers
    positive: Vec<bool>,
}

/// Builds a [`WeightedGraph`], summing parallel edges and dropping edges whose
/// merged weight is zero.
pub fn normalize_graph<I>(n: usize, raw: I) -> Result<WeightedGraph>
where
    I: IntoIterator<Item = (usize, usize, Weight)>,
{
    let mut merged: BTreeMap<(usize, usize), Weight> = BTreeMap::new();
    for (a, b, w) in raw {
        for x in [a, b] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let key = (a.min(b), a.max(b));
        *merged.entry(key).or_default() += w;
    }
    let edges: Vec<Edge> = merged
        .into_iter()
        .filter(|(_, w)| !w.is_zero())
        .map(|((u, v), w)| Edge { u, v, w })
        .collect();
    Ok(WeightedGraph::from_sorted_edges(n, edges))
}

impl WeightedGraph {
    fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let positive = edges.iter().map(|e| e.w.is_positive()).collect();
        WeightedGraph { n, edges, adj, positive }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        WeightedGraph::from_sorted_edges(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> &Edge {
        &self.edges[idx]
    }

    /// `(neighbor, edge index)` pairs in ascending neighbor order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<&Edge> {
        let list = self.adj.get(a)?;
        list.binary_search_by_key(&b, |&(x, _)| x)
            .ok()
            .map(|i| &self.edges[list[i].1])
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<&Weight> {
        self.edge_between(a, b).map(|e| &e.w)
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        self.positive[idx]
    }

    pub fn positive_edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().zip(&self.positive).filter(|(_, &p)| p).map(|(e, _)| e)
    }

    /// Zero-weight edges never survive normalization, so these are the
    /// non-positive ones.
    pub fn negative_edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().zip(&self.positive).filter(|(_, &p)| !p).map(|(e, _)| e)
    }

    /// Adjacency lists (neighbor ids only) of the whole graph.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        self.adj
            .iter()
            .map(|l| l.iter().map(|&(x, _)| x).collect())
            .collect()
    }

    /// Adjacency lists restricted to positive edges.
    pub fn positive_adjacency(&self) -> Vec<Vec<usize>> {
        self.adj
            .iter()
            .map(|l| {
                l.iter()
                    .filter(|&&(_, i)| self.positive[i])
                    .map(|&(x, _)| x)
                    .collect()
            })
            .collect()
    }

    /// The spanning subgraph made of positive edges only.
    pub fn positive_subgraph(&self) -> WeightedGraph {
        WeightedGraph::from_sorted_edges(self.n, self.positive_edges().cloned().collect())
    }

    pub fn positive_degree(&self, v: usize) -> usize {
        self.adj[v]
            .iter()
            .filter(|&&(_, i)| self.positive[i])
            .count()
    }

    /// Δ: the largest number of positive edges at any vertex.
    pub fn max_positive_degree(&self) -> usize {
        let mut deg = vec![0; self.n];
        for e in self.positive_edges() {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::<usize>::new(self.n);
        self.edges.iter().all(|e| uf.union(e.u, e.v))
    }

    pub fn raw_edges(&self) -> impl Iterator<Item = (usize, usize, Weight)> + '_ {
        self.edges.iter().map(|e| (e.u, e.v, e.w.clone()))
    }
}

impl serde::Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = s.serialize_tuple(3)?;
        t.serialize_element(&self.u)?;
        t.serialize_element(&self.v)?;
        t.serialize_element(&self.w)?;
        t.end()
    }
}
