//! Exact solver over a tree decomposition.
//!
//! The decomposition is first normalized into a nice one (leaf, introduce,
//! forget and binary join nodes, empty root). A DP state is the restriction of
//! the coalition structure to the current bag, stored as a restricted-growth
//! label string over the sorted bag. Edge weights are credited when the later
//! of their endpoints is introduced; join nodes subtract the in-bag weight that
//! both children credited.

use std::collections::{BTreeMap, VecDeque};

use crate::decomp::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::report::{Algorithm, SolveReport, Stopwatch};
use crate::structure::CoalitionStructure;
use crate::weight::{IntegerScale, Weight};

/// Maximum number of bag partitions per node, Bell(width + 1).
pub const STATE_LIMIT: u128 = 1_000_000;

#[derive(Clone, Debug)]
enum Kind {
    Leaf,
    Introduce { v: usize, child: usize },
    Forget { v: usize, child: usize },
    Join { left: usize, right: usize },
}

#[derive(Clone, Debug)]
struct NiceNode {
    kind: Kind,
    bag: Vec<usize>,
}

type State = Vec<u8>;

struct Entry {
    value: i128,
    // child state, kept for forget nodes where the choice is not derivable
    from: Option<State>,
}

/// Bell number B(k), saturating at `u128::MAX`.
pub fn bell(k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("rows are nonempty"));
        for &x in &row {
            let prev = *next.last().expect("just pushed");
            next.push(prev.saturating_add(x));
        }
        row = next;
    }
    row[0]
}

fn canonical(labels: &mut [u8]) {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    for l in labels.iter_mut() {
        if map[*l as usize] == u8::MAX {
            map[*l as usize] = next;
            next += 1;
        }
        *l = map[*l as usize];
    }
}

fn block_count(s: &[u8]) -> u8 {
    s.iter().copied().max().map_or(0, |m| m + 1)
}

struct Builder<'a> {
    td: &'a TreeDecomposition,
    nodes: Vec<NiceNode>,
}

impl Builder<'_> {
    fn push(&mut self, kind: Kind, bag: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag });
        self.nodes.len() - 1
    }

    /// Forgets then introduces single vertices until the bag equals `target`.
    fn morph(&mut self, mut node: usize, target: &[usize]) -> usize {
        let current = self.nodes[node].bag.clone();
        let mut bag = current.clone();
        for &v in current.iter().filter(|v| target.binary_search(v).is_err()) {
            bag.retain(|&x| x != v);
            node = self.push(Kind::Forget { v, child: node }, bag.clone());
        }
        for &v in target.iter().filter(|v| current.binary_search(v).is_err()) {
            let at = bag.partition_point(|&x| x < v);
            bag.insert(at, v);
            node = self.push(Kind::Introduce { v, child: node }, bag.clone());
        }
        node
    }

    /// Returns the root, whose bag is empty.
    fn build(mut self) -> (Vec<NiceNode>, usize) {
        let nb = self.td.bags.len();
        let mut adj = vec![Vec::new(); nb];
        for &(a, b) in &self.td.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![usize::MAX; nb];
        let mut order = Vec::with_capacity(nb);
        let mut seen = vec![false; nb];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(b) = queue.pop_front() {
            order.push(b);
            for &c in &adj[b] {
                if !seen[c] {
                    seen[c] = true;
                    parent[c] = b;
                    queue.push_back(c);
                }
            }
        }
        let mut top: Vec<Option<usize>> = vec![None; nb];
        for &b in order.iter().rev() {
            let target = self.td.bags[b].clone();
            let children: Vec<usize> = adj[b].iter().copied().filter(|&c| parent[c] == b).collect();
            let mut acc: Option<usize> = None;
            for c in children {
                let from = top[c].expect("children are built first");
                let node = self.morph(from, &target);
                acc = Some(match acc {
                    None => node,
                    Some(left) => self.push(Kind::Join { left, right: node }, target.clone()),
                });
            }
            let node = match acc {
                Some(node) => node,
                None => {
                    let leaf = self.push(Kind::Leaf, Vec::new());
                    self.morph(leaf, &target)
                }
            };
            top[b] = Some(node);
        }
        let root = self.morph(top[0].expect("root bag built"), &[]);
        (self.nodes, root)
    }
}

/// Exact optimum using any valid decomposition of `g`.
pub fn treewidth_exact(g: &WeightedGraph, td: &TreeDecomposition) -> Result<SolveReport> {
    let started = Stopwatch::start();
    td.validate(g)?;
    let states = bell(td.width() + 1);
    if states > STATE_LIMIT {
        return Err(Error::WidthTooLarge { width: td.width(), states, limit: STATE_LIMIT });
    }
    if g.n() == 0 {
        return Ok(SolveReport::new(g, Algorithm::Treewidth, CoalitionStructure::singletons(0), started));
    }
    let scale = IntegerScale::fit(g.edges().iter().map(|e| &e.w))?;
    let w = |a: usize, b: usize| g.weight(a, b).map_or(0, |x| scale.scale(x));

    let (nodes, root) = Builder { td, nodes: Vec::new() }.build();
    let mut tables: Vec<BTreeMap<State, Entry>> = Vec::with_capacity(nodes.len());
    for node in &nodes {
        let mut table: BTreeMap<State, Entry> = BTreeMap::new();
        let mut offer = |key: State, value: i128, from: Option<State>| {
            match table.get(&key) {
                Some(e) if e.value >= value => {}
                _ => {
                    table.insert(key, Entry { value, from });
                }
            }
        };
        match node.kind {
            Kind::Leaf => offer(Vec::new(), 0, None),
            Kind::Introduce { v, child } => {
                let at = node.bag.binary_search(&v).expect("introduced vertex in bag");
                let child_bag = &nodes[child].bag;
                let weights: Vec<i128> = child_bag.iter().map(|&u| w(u, v)).collect();
                for (key, e) in &tables[child] {
                    let blocks = block_count(key);
                    for b in 0..=blocks {
                        let credit: i128 = key
                            .iter()
                            .zip(&weights)
                            .filter(|(&l, _)| l == b)
                            .map(|(_, &x)| x)
                            .sum();
                        let mut next = key.clone();
                        next.insert(at, b);
                        canonical(&mut next);
                        offer(next, e.value + credit, None);
                    }
                }
            }
            Kind::Forget { v, child } => {
                let at = nodes[child].bag.binary_search(&v).expect("forgotten vertex in child bag");
                for (key, e) in &tables[child] {
                    let mut next = key.clone();
                    next.remove(at);
                    canonical(&mut next);
                    offer(next, e.value, Some(key.clone()));
                }
            }
            Kind::Join { left, right } => {
                let bag = &node.bag;
                for (key, l) in &tables[left] {
                    if let Some(r) = tables[right].get(key) {
                        let mut inside = 0i128;
                        for i in 0..bag.len() {
                            for j in i + 1..bag.len() {
                                if key[i] == key[j] {
                                    inside += w(bag[i], bag[j]);
                                }
                            }
                        }
                        offer(key.clone(), l.value + r.value - inside, None);
                    }
                }
            }
        }
        tables.push(table);
    }

    let optimum = tables[root]
        .get(&Vec::new())
        .expect("root has the empty state")
        .value;

    // top-down: map each node's block labels to global coalition ids
    let mut labels = vec![usize::MAX; g.n()];
    let mut fresh = 0usize;
    let mut stack: Vec<(usize, State, Vec<usize>)> = vec![(root, Vec::new(), Vec::new())];
    while let Some((id, key, ids)) = stack.pop() {
        let node = &nodes[id];
        match node.kind {
            Kind::Leaf => {}
            Kind::Join { left, right } => {
                stack.push((left, key.clone(), ids.clone()));
                stack.push((right, key, ids));
            }
            Kind::Introduce { v, child } => {
                let at = node.bag.binary_search(&v).expect("introduced vertex in bag");
                let mut child_key = key.clone();
                child_key.remove(at);
                let raw = child_key.clone();
                canonical(&mut child_key);
                // raw keeps the parent's labels for the surviving vertices
                let mut child_ids = vec![usize::MAX; block_count(&child_key) as usize];
                for (c, r) in child_key.iter().zip(&raw) {
                    child_ids[*c as usize] = ids[*r as usize];
                }
                stack.push((child, child_key, child_ids));
            }
            Kind::Forget { v, child } => {
                let entry = &tables[id][&key];
                let child_key = entry.from.clone().expect("forget entries record their source");
                let at = nodes[child].bag.binary_search(&v).expect("forgotten vertex in child bag");
                let mut child_ids = vec![usize::MAX; block_count(&child_key) as usize];
                let mut parent_pos = 0;
                for (i, &c) in child_key.iter().enumerate() {
                    if i == at {
                        continue;
                    }
                    child_ids[c as usize] = ids[key[parent_pos] as usize];
                    parent_pos += 1;
                }
                let own = child_key[at] as usize;
                if child_ids[own] == usize::MAX {
                    child_ids[own] = fresh;
                    fresh += 1;
                }
                labels[v] = child_ids[own];
                stack.push((child, child_key, child_ids));
            }
        }
    }
    debug_assert!(labels.iter().all(|&l| l != usize::MAX));
    let report = SolveReport::new(
        g,
        Algorithm::Treewidth,
        CoalitionStructure::from_labels(&labels),
        started,
    );
    debug_assert_eq!(report.value, scale.unscale(optimum));
    Ok(report)
}

/// Optimal value only, without reconstructing a structure.
pub fn treewidth_value(g: &WeightedGraph, td: &TreeDecomposition) -> Result<Weight> {
    treewidth_exact(g, td).map(|r| r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::heuristic_tree_decomposition;
    use crate::graph::normalize_graph;
    use crate::structure::positive_weight_sum;
    use crate::test_graphs::{path, triangle};

    #[test]
    fn bell_numbers() {
        let expect = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (k, &b) in expect.iter().enumerate() {
            assert_eq!(bell(k), b);
        }
    }

    #[test]
    fn canonical_relabels() {
        let mut s = vec![2, 0, 2, 1];
        canonical(&mut s);
        assert_eq!(s, vec![0, 1, 0, 2]);
    }

    #[test]
    fn triangle_single_bag() {
        let g = triangle();
        let td = TreeDecomposition { bags: vec![vec![0, 1, 2]], tree_edges: vec![] };
        let r = treewidth_exact(&g, &td).unwrap();
        assert_eq!(r.value, Weight::from(3));
        assert_eq!(r.structure.coalitions(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn four_cycle_with_one_negative_edge() {
        let g = normalize_graph(
            4,
            [(0, 1, 1.into()), (1, 2, 1.into()), (2, 3, 1.into()), (3, 0, (-1).into())],
        )
        .unwrap();
        let td = TreeDecomposition {
            bags: vec![vec![0, 1, 2], vec![0, 2, 3]],
            tree_edges: vec![(0, 1)],
        };
        // the +1 edges form the path 0-1-2-3, so keeping all three would put
        // the -1 edge (3,0) inside a coalition: the optimum is 2, not W+ = 3
        let r = treewidth_exact(&g, &td).unwrap();
        assert_eq!(r.value, Weight::from(2));
        assert_eq!(r.value, crate::exact::brute_force_opt(&g).unwrap().value);
        let td = heuristic_tree_decomposition(&g);
        assert_eq!(treewidth_value(&g, &td).unwrap(), Weight::from(2));
    }

    #[test]
    fn forest_matches_positive_sum() {
        let g = normalize_graph(
            6,
            [(0, 1, 2.into()), (1, 2, (-1).into()), (2, 3, 4.into()), (4, 5, (-3).into())],
        )
        .unwrap();
        let td = heuristic_tree_decomposition(&g);
        assert_eq!(td.width(), 1);
        assert_eq!(treewidth_value(&g, &td).unwrap(), positive_weight_sum(&g));
        assert_eq!(treewidth_value(&path(5), &heuristic_tree_decomposition(&path(5))).unwrap(), Weight::from(4));
    }

    #[test]
    fn guards() {
        let g = triangle();
        let bad = TreeDecomposition { bags: vec![vec![0, 1], vec![2]], tree_edges: vec![(0, 1)] };
        assert!(matches!(treewidth_exact(&g, &bad), Err(Error::InvalidDecomposition(_))));

        let n = 14;
        let g = WeightedGraph::empty(n);
        let wide = TreeDecomposition { bags: vec![(0..n).collect()], tree_edges: vec![] };
        assert!(matches!(treewidth_exact(&g, &wide), Err(Error::WidthTooLarge { .. })));
    }
}
