//! Seeded instance generators and the independent-set reductions.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{normalize_graph, WeightedGraph};
use crate::weight::Weight;

/// How edge weights are drawn. Zero is never produced.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightSpec {
    /// Uniform integer in `[lo, hi]`, zero re-sampled.
    Uniform { lo: i64, hi: i64 },
    /// Magnitude uniform in `[1, max_abs]`, negative with probability `neg_prob`.
    Signed { max_abs: i64, neg_prob: f64 },
}

impl Default for WeightSpec {
    fn default() -> Self {
        WeightSpec::Uniform { lo: -5, hi: 5 }
    }
}

impl WeightSpec {
    fn check(&self) -> Result<()> {
        match *self {
            WeightSpec::Uniform { lo, hi } if lo > hi || (lo == 0 && hi == 0) => Err(
                Error::InvalidParameter(format!("weight range [{lo}, {hi}] has no nonzero value")),
            ),
            WeightSpec::Signed { max_abs, neg_prob } if max_abs < 1 || !(0.0..=1.0).contains(&neg_prob) => {
                Err(Error::InvalidParameter(format!(
                    "signed weights need max_abs >= 1 and neg_prob in [0, 1], got {max_abs}, {neg_prob}"
                )))
            }
            _ => Ok(()),
        }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Weight {
        let x = match *self {
            WeightSpec::Uniform { lo, hi } => loop {
                let x = rng.gen_range(lo..=hi);
                if x != 0 {
                    break x;
                }
            },
            WeightSpec::Signed { max_abs, neg_prob } => {
                let m = rng.gen_range(1..=max_abs);
                if rng.gen_bool(neg_prob) {
                    -m
                } else {
                    m
                }
            }
        };
        Weight::from(x)
    }
}

fn weighted(
    n: usize,
    pairs: Vec<(usize, usize)>,
    weights: &WeightSpec,
    rng: &mut ChaCha8Rng,
) -> Result<WeightedGraph> {
    weights.check()?;
    let raw: Vec<_> = pairs.into_iter().map(|(a, b)| (a, b, weights.sample(rng))).collect();
    normalize_graph(n, raw)
}

/// Uniform random labeled tree from a random Prüfer sequence.
pub fn gen_tree(n: usize, weights: &WeightSpec, seed: u64) -> Result<WeightedGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("a tree needs at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(n.saturating_sub(1));
    if n == 2 {
        pairs.push((0, 1));
    } else if n > 2 {
        let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut degree = vec![1usize; n];
        for &x in &code {
            degree[x] += 1;
        }
        let mut leaves: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| degree[v] == 1).collect();
        for &x in &code {
            let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
            pairs.push((leaf, x));
            degree[x] -= 1;
            if degree[x] == 1 {
                leaves.insert(x);
            }
        }
        let a = leaves.pop_first().expect("two leaves remain");
        let b = leaves.pop_first().expect("two leaves remain");
        pairs.push((a, b));
    }
    weighted(n, pairs, weights, &mut rng)
}

/// `rows × cols` grid; vertex `(r, c)` has id `r * cols + c`.
pub fn gen_grid(rows: usize, cols: usize, weights: &WeightSpec, seed: u64) -> Result<WeightedGraph> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidParameter("grid dimensions must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                pairs.push((v, v + 1));
            }
            if r + 1 < rows {
                pairs.push((v, v + cols));
            }
        }
    }
    weighted(rows * cols, pairs, weights, &mut rng)
}

/// Near-regular graph from the configuration model: `n·delta` stubs paired at
/// random, with self-loops and repeated pairs discarded.
pub fn gen_bounded_degree(n: usize, delta: usize, weights: &WeightSpec, seed: u64) -> Result<WeightedGraph> {
    if delta >= n || (n * delta) % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "bounded-degree generator needs delta < n and n*delta even, got n={n}, delta={delta}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, delta)).collect();
    stubs.shuffle(&mut rng);
    let mut seen = HashSet::with_capacity(stubs.len() / 2);
    let mut pairs = Vec::with_capacity(stubs.len() / 2);
    for ch in stubs.chunks_exact(2) {
        let (a, b) = (ch[0].min(ch[1]), ch[0].max(ch[1]));
        if a != b && seen.insert((a, b)) {
            pairs.push((a, b));
        }
    }
    pairs.sort_unstable();
    weighted(n, pairs, weights, &mut rng)
}

/// Erdős–Rényi G(n, p).
pub fn gen_gnp(n: usize, p: f64, weights: &WeightSpec, seed: u64) -> Result<WeightedGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                pairs.push((a, b));
            }
        }
    }
    weighted(n, pairs, weights, &mut rng)
}

/// Independent-set reduction with a heavy penalty: every edge of `h` becomes
/// `-(|V(h)| + 1)` and a new last vertex `s` gets a `+1` edge to every vertex.
/// The optimum equals the independence number of `h`.
pub fn reduce_is_thm1(h: &WeightedGraph) -> WeightedGraph {
    reduce_with_penalty(h, -(h.n() as i64 + 1))
}

/// Same construction with every original edge at `-1`. The optimum `k'`
/// satisfies `α(h) ≤ k' ≤ 9·α(h)`.
pub fn reduce_is_pm1(h: &WeightedGraph) -> WeightedGraph {
    reduce_with_penalty(h, -1)
}

fn reduce_with_penalty(h: &WeightedGraph, penalty: i64) -> WeightedGraph {
    let s = h.n();
    let raw = h
        .edges()
        .iter()
        .map(|e| (e.u, e.v, Weight::from(penalty)))
        .chain((0..s).map(|v| (v, s, Weight::from(1))));
    normalize_graph(s + 1, raw).expect("reduction edges are in range and loop-free")
}

/// Largest `n` accepted by [`max_independent_set_bf`].
pub const MIS_LIMIT: usize = 24;

/// Independence number of the edge structure of `h` (weights ignored).
pub fn max_independent_set_bf(h: &WeightedGraph) -> Result<usize> {
    let n = h.n();
    if n > MIS_LIMIT {
        return Err(Error::TooLarge { n, limit: MIS_LIMIT });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| h.neighbors(v).iter().fold(0u32, |m, &(x, _)| m | 1 << x))
        .collect();
    fn search(cand: u32, size: usize, best: &mut usize, adj: &[u32]) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        search(cand & !(1 << v) & !adj[v], size + 1, best, adj);
        // v excluded: only useful if some neighbor of v is taken instead
        if adj[v] & cand != 0 {
            search(cand & !(1 << v), size, best, adj);
        }
    }
    let mut best = 0;
    let all = ((1u64 << n) - 1) as u32;
    search(all, 0, &mut best, &adj);
    Ok(best)
}

/// Which family to draw from.
#[derive(Clone, Debug, PartialEq)]
pub enum GenKind {
    Tree { n: usize },
    Grid { rows: usize, cols: usize },
    Regular { n: usize, delta: usize },
    Gnp { n: usize, p: f64 },
    /// Heavy-penalty reduction of the given graph.
    ReduceIs(WeightedGraph),
    /// `±1` reduction of the given graph.
    ReduceIsPm1(WeightedGraph),
}

/// A complete, reproducible instance description.
#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub weights: WeightSpec,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<WeightedGraph> {
        let (w, seed) = (&self.weights, self.seed);
        match &self.kind {
            GenKind::Tree { n } => gen_tree(*n, w, seed),
            GenKind::Grid { rows, cols } => gen_grid(*rows, *cols, w, seed),
            GenKind::Regular { n, delta } => gen_bounded_degree(*n, *delta, w, seed),
            GenKind::Gnp { n, p } => gen_gnp(*n, *p, w, seed),
            GenKind::ReduceIs(h) => Ok(reduce_is_thm1(h)),
            GenKind::ReduceIsPm1(h) => Ok(reduce_is_pm1(h)),
        }
    }
}
