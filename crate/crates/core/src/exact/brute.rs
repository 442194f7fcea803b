
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::report::{Algorithm, SolveReport, Stopwatch};
use crate::structure::CoalitionStructure;
use crate::weight::{IntegerScale, Weight};

/// Largest instance the subset DP accepts (memory is 2ⁿ entries).
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// `best[S]` for every vertex subset `S`, over scaled integer weights.
pub struct SubsetTable {
    n: usize,
    scale: IntegerScale,
    value: Vec<i128>,
    best: Vec<i128>,
}

impl SubsetTable {
    /// `best[S] = max over T ⊆ S with min(S) ∈ T of value[T] + best[S \ T]`.
    pub fn build(g: &WeightedGraph) -> Result<Self> {
        let n = g.n();
        if n > BRUTE_FORCE_LIMIT {
            return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
        }
        let scale = IntegerScale::fit(g.edges().iter().map(|e| &e.w))?;
        let mut row = vec![vec![0i128; n]; n];
        for e in g.edges() {
            let w = scale.scale(&e.w);
            row[e.u][e.v] = w;
            row[e.v][e.u] = w;
        }
        let full = 1usize << n;
        let mut value = vec![0i128; full];
        for s in 1..full {
            let v = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let mut acc = value[rest];
            let mut bits = rest;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                acc += row[v][u];
                bits &= bits - 1;
            }
            value[s] = acc;
        }
        let mut best = vec![0i128; full];
        for s in 1..full {
            let low = s & s.wrapping_neg();
            let rest = s ^ low;
            let mut top = i128::MIN;
            let mut sub = rest;
            loop {
                let t = sub | low;
                let cand = value[t] + best[s ^ t];
                top = top.max(cand);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            best[s] = top;
        }
        Ok(SubsetTable { n, scale, value, best })
    }

    pub fn optimum(&self) -> Weight {
        self.scale.unscale(self.best[(1usize << self.n) - 1])
    }

    /// Induced value of the subset with bitmask `mask`.
    pub fn coalition_value(&self, mask: usize) -> Weight {
        self.scale.unscale(self.value[mask])
    }

    /// An optimal structure; among optimal ones, the smallest when written as
    /// the sequence of sorted coalitions ordered by their minima.
    pub fn reconstruct(&self) -> CoalitionStructure {
        let mut labels = vec![0; self.n];
        let mut s = (1usize << self.n) - 1;
        let mut next = 0;
        while s != 0 {
            let low = s & s.wrapping_neg();
            let rest = s ^ low;
            let mut pick: Option<usize> = None;
            let mut sub = rest;
            loop {
                let t = sub | low;
                if self.value[t] + self.best[s ^ t] == self.best[s]
                    && pick.is_none_or(|p| lex_less(t, p))
                {
                    pick = Some(t);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            let t = pick.expect("optimum is attained");
            let mut bits = t;
            while bits != 0 {
                labels[bits.trailing_zeros() as usize] = next;
                bits &= bits - 1;
            }
            next += 1;
            s ^= t;
        }
        CoalitionStructure::from_labels(&labels)
    }
}

/// Compares two masks as ascending vertex lists.
fn lex_less(a: usize, b: usize) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let bit = diff & diff.wrapping_neg();
    let above = !((bit << 1) - 1);
    if a & bit != 0 {
        b & above != 0
    } else {
        a & above == 0
    }
}

/// Exact optimum by subset DP in O(3ⁿ), n ≤ [`BRUTE_FORCE_LIMIT`].
pub fn brute_force_opt(g: &WeightedGraph) -> Result<SolveReport> {
    let started = Stopwatch::start();
    let table = SubsetTable::build(g)?;
    let structure = table.reconstruct();
    let report = SolveReport::new(g, Algorithm::Brute, structure, started);
    debug_assert_eq!(report.value, table.optimum());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::normalize_graph;
    use crate::structure::{coalition_value, structure_value};
    use crate::test_graphs::{complete, triangle};

    #[test]
    fn triangle_optimum() {
        let r = brute_force_opt(&triangle()).unwrap();
        assert_eq!(r.value, Weight::from(3));
        assert_eq!(r.structure.coalitions(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn sign_uniform_cliques() {
        let neg = normalize_graph(3, [(0, 1, (-1).into()), (1, 2, (-2).into()), (0, 2, (-3).into())])
            .unwrap();
        let r = brute_force_opt(&neg).unwrap();
        assert_eq!(r.value, Weight::zero());
        assert_eq!(r.structure, CoalitionStructure::singletons(3));

        let pos = complete(3);
        let r = brute_force_opt(&pos).unwrap();
        assert_eq!(r.value, Weight::from(3));
        assert_eq!(r.structure, CoalitionStructure::grand(3));
    }

    #[test]
    fn rejects_large_instances() {
        let g = WeightedGraph::empty(BRUTE_FORCE_LIMIT + 1);
        assert!(matches!(brute_force_opt(&g), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn fractional_weights_stay_exact() {
        let g = normalize_graph(
            3,
            [(0, 1, "1/3".parse().unwrap()), (1, 2, "1/6".parse().unwrap()), (0, 2, "-0.4".parse().unwrap())],
        )
        .unwrap();
        let r = brute_force_opt(&g).unwrap();
        // {0,1} alone gives 1/3; the grand coalition gives 1/3 + 1/6 - 2/5 = 1/10
        assert_eq!(r.value, "1/3".parse().unwrap());
    }

    #[test]
    fn table_values_match_direct_sums() {
        let g = triangle();
        let t = SubsetTable::build(&g).unwrap();
        for mask in 0..8usize {
            let members: Vec<usize> = (0..3).filter(|&v| mask >> v & 1 == 1).collect();
            assert_eq!(t.coalition_value(mask), coalition_value(&g, &members));
        }
        assert_eq!(structure_value(&g, &t.reconstruct()).unwrap(), t.optimum());
    }

    #[test]
    fn lex_order_on_masks() {
        // {0} < {0,1} < {0,1,2} < {0,2}
        assert!(lex_less(0b001, 0b011));
        assert!(lex_less(0b011, 0b111));
        assert!(lex_less(0b111, 0b101));
        assert!(!lex_less(0b101, 0b111));
        assert!(!lex_less(0b011, 0b011));
    }
}
