//! Randomized decomposition of E⁺ into at most ⌈(2+ε)Δ⌉ matchings.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::approx::feasible::matching_to_partition;
use crate::decomp::EdgePair;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::report::{Algorithm, SolveReport, Stopwatch};
use crate::structure::CoalitionStructure;
use crate::weight::Weight;

/// Proper coloring of the positive edges: every color class is a matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    /// Positive edges in processing order, ascending `(min, max)`.
    pub edges: Vec<EdgePair>,
    /// `color[i]` is the color of `edges[i]`.
    pub color: Vec<usize>,
    /// Number of colors available.
    pub palette: usize,
    /// How many edges needed the linear-scan fallback.
    pub fallbacks: usize,
}

impl EdgeColoring {
    /// Color classes, indexed by color; some may be empty.
    pub fn classes(&self) -> Vec<Vec<EdgePair>> {
        let mut out = vec![Vec::new(); self.palette];
        for (e, &c) in self.edges.iter().zip(&self.color) {
            out[c].push(*e);
        }
        out
    }

    pub fn is_proper(&self, n: usize) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .zip(&self.color)
            .all(|(&(a, b), &c)| c < self.palette && seen.insert((a, c)) && seen.insert((b, c)))
            && self.edges.iter().all(|&(a, b)| a < n && b < n)
    }
}

/// `⌈(2+ε)Δ⌉`.
pub fn palette_size(epsilon: &Weight, max_degree: usize) -> Result<usize> {
    if !epsilon.is_positive() {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {epsilon}")));
    }
    let factor = &Weight::from(2) + epsilon;
    factor
        .mul_int(max_degree as i64)
        .ceil()
        .to_usize()
        .ok_or_else(|| Error::InvalidParameter(format!("epsilon {epsilon} is too large")))
}

fn retry_cap(epsilon: &Weight) -> usize {
    // 64 · ⌈2/ε⌉ random draws before falling back to a scan
    let two_over = Weight::from_ratio(Weight::from(2).as_ratio() / epsilon.as_ratio());
    64 * two_over.ceil().to_usize().unwrap_or(usize::MAX / 64).max(1)
}

/// Colors already taken at each vertex, kept sorted in one flat array with a
/// fixed slot of `Δ` entries per vertex.
struct UsedColors {
    slots: Vec<u32>,
    len: Vec<u32>,
    width: usize,
}

impl UsedColors {
    fn new(n: usize, width: usize) -> Self {
        UsedColors { slots: vec![0; n * width], len: vec![0; n], width }
    }

    fn of(&self, v: usize) -> &[u32] {
        let start = v * self.width;
        &self.slots[start..start + self.len[v] as usize]
    }

    fn contains(&self, v: usize, c: usize) -> bool {
        self.of(v).binary_search(&(c as u32)).is_ok()
    }

    fn insert(&mut self, v: usize, c: usize) {
        let at = self.of(v).binary_search(&(c as u32)).unwrap_err();
        let (start, len) = (v * self.width, self.len[v] as usize);
        self.slots.copy_within(start + at..start + len, start + at + 1);
        self.slots[start + at] = c as u32;
        self.len[v] += 1;
    }
}

/// Colors each positive edge, in ascending order, with a uniformly random
/// color not yet used at either endpoint. At most 2(Δ−1) colors are blocked
/// out of (2+ε)Δ, so a draw succeeds with probability at least ε/2.
pub fn randomized_edge_coloring(g: &WeightedGraph, epsilon: &Weight, seed: u64) -> Result<EdgeColoring> {
    let delta = g.max_positive_degree();
    let palette = palette_size(epsilon, delta)?;
    if palette > u32::MAX as usize {
        return Err(Error::InvalidParameter(format!("epsilon {epsilon} gives a palette of {palette} colors")));
    }
    let cap = retry_cap(epsilon);
    let edges: Vec<EdgePair> = g.positive_edges().map(|e| e.key()).collect();
    let mut used = UsedColors::new(g.n(), delta);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut color = Vec::with_capacity(edges.len());
    let mut fallbacks = 0;
    for &(a, b) in &edges {
        let free = |c: &usize, used: &UsedColors| !used.contains(a, *c) && !used.contains(b, *c);
        let mut pick = None;
        for _ in 0..cap {
            let c = rng.gen_range(0..palette);
            if free(&c, &used) {
                pick = Some(c);
                break;
            }
        }
        let c = match pick {
            Some(c) => c,
            None => {
                fallbacks += 1;
                (0..palette)
                    .find(|c| free(c, &used))
                    .expect("palette exceeds the colors blocked at both endpoints")
            }
        };
        used.insert(a, c);
        used.insert(b, c);
        color.push(c);
    }
    Ok(EdgeColoring { edges, color, palette, fallbacks })
}

/// Picks the heaviest matching of [`randomized_edge_coloring`]. The classes
/// cover E⁺, so the pick is worth at least W⁺/k for `k` nonempty classes.
pub fn bounded_degree_solve(g: &WeightedGraph, epsilon: &Weight, seed: u64) -> Result<SolveReport> {
    let started = Stopwatch::start();
    if !epsilon.is_positive() {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {epsilon}")));
    }
    let coloring = randomized_edge_coloring(g, epsilon, seed)?;
    // class weights in one pass; coloring.edges follows g.positive_edges()
    let mut class_weights: Vec<Vec<&Weight>> = vec![Vec::new(); coloring.palette];
    for (e, &c) in g.positive_edges().zip(&coloring.color) {
        class_weights[c].push(&e.w);
    }
    let mut best: Option<(Weight, usize)> = None;
    let mut nonempty = 0;
    for (i, ws) in class_weights.iter().enumerate() {
        if ws.is_empty() {
            continue;
        }
        nonempty += 1;
        let w: Weight = ws.iter().copied().sum();
        if best.as_ref().is_none_or(|(bw, _)| w > *bw) {
            best = Some((w, i));
        }
    }
    let structure = match best {
        Some((_, i)) => {
            let class: Vec<EdgePair> = coloring
                .edges
                .iter()
                .zip(&coloring.color)
                .filter(|&(_, &c)| c == i)
                .map(|(&e, _)| e)
                .collect();
            matching_to_partition(g, &class)?.partition
        }
        None => CoalitionStructure::singletons(g.n()),
    };
    let mut report = SolveReport::new(g, Algorithm::BoundedDegree, structure, started);
    report.feasible_set_count = Some(nonempty);
    report.epsilon = Some(epsilon.clone());
    report.seed = Some(seed);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::normalize_graph;
    use crate::test_graphs::{path, star, triangle};

    fn eps(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn palette_arithmetic_is_exact() {
        assert_eq!(palette_size(&eps("0.5"), 8).unwrap(), 20);
        assert_eq!(palette_size(&eps("1"), 3).unwrap(), 9);
        assert_eq!(palette_size(&eps("1/3"), 3).unwrap(), 7);
        assert_eq!(palette_size(&eps("0.1"), 1).unwrap(), 3);
        assert!(palette_size(&eps("0"), 3).is_err());
        assert!(palette_size(&eps("-1"), 3).is_err());
    }

    #[test]
    fn star_k13() {
        let g = star(3);
        let c = randomized_edge_coloring(&g, &eps("1"), 3).unwrap();
        assert_eq!(c.palette, 9);
        assert!(c.is_proper(g.n()));
        let r = bounded_degree_solve(&g, &eps("1"), 3).unwrap();
        assert_eq!(r.value, Weight::from(1));
        assert_eq!(r.feasible_set_count, Some(3));
        assert!(r.meets_guarantee());
    }

    #[test]
    fn single_edge_is_optimal() {
        let r = bounded_degree_solve(&path(2), &eps("0.25"), 11).unwrap();
        assert_eq!(r.value, Weight::from(1));
    }

    #[test]
    fn perfect_matching_input() {
        let g = normalize_graph(6, [(0, 1, 2.into()), (2, 3, 1.into()), (4, 5, 3.into())]).unwrap();
        let r = bounded_degree_solve(&g, &eps("1"), 5).unwrap();
        let c = randomized_edge_coloring(&g, &eps("1"), 5).unwrap();
        assert_eq!(c.palette, 3);
        assert!(r.meets_guarantee());
        if c.color.iter().all(|&x| x == c.color[0]) {
            assert_eq!(r.value, r.w_plus);
        }
    }

    #[test]
    fn same_seed_same_report() {
        let g = triangle();
        let a = bounded_degree_solve(&g, &eps("1"), 7).unwrap();
        let b = bounded_degree_solve(&g, &eps("1"), 7).unwrap();
        assert_eq!(a.without_timing(), b.without_timing());
    }

    #[test]
    fn degenerate_inputs() {
        assert!(bounded_degree_solve(&path(3), &eps("0"), 1).is_err());
        let g = normalize_graph(2, [(0, 1, (-1).into())]).unwrap();
        let r = bounded_degree_solve(&g, &eps("1"), 1).unwrap();
        assert_eq!(r.value, Weight::zero());
        assert_eq!(r.feasible_set_count, Some(0));
    }
}
