
use crate::approx::feasible::{forest_to_feasible_sets, FeasibleSet};
use crate::decomp::{degeneracy_ordering, forest_cover_positive, greedy_coloring};
use crate::graph::WeightedGraph;
use crate::report::{Algorithm, SolveReport, Stopwatch};
use crate::structure::{structure_value, CoalitionStructure};

/// Feasible sets whose edges together cover E⁺: a forest cover of the positive
/// edges, each forest split into star unions, each star union covered through
/// a greedy coloring of the whole graph.
pub fn feasible_cover(g: &WeightedGraph) -> Vec<FeasibleSet> {
    let coloring = greedy_coloring(g, &degeneracy_ordering(g));
    forest_cover_positive(g)
        .classes
        .iter()
        .flat_map(|forest| {
            forest_to_feasible_sets(g, forest, &coloring)
                .expect("forest classes are acyclic and the coloring is proper")
        })
        .collect()
}

/// Evaluates every achieving partition of [`feasible_cover`] and keeps the
/// best. The sets' weights add up to at least W⁺, so the winner is worth at
/// least W⁺/k.
pub fn cover_and_pick(g: &WeightedGraph) -> SolveReport {
    let started = Stopwatch::start();
    let sets = feasible_cover(g);
    let mut best: Option<(crate::weight::Weight, &CoalitionStructure)> = None;
    for s in &sets {
        let value = structure_value(g, &s.partition).expect("partition spans g");
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, &s.partition));
        }
    }
    let structure = best
        .map(|(_, p)| p.clone())
        .unwrap_or_else(|| CoalitionStructure::singletons(g.n()));
    let mut report = SolveReport::new(g, Algorithm::Cover, structure, started);
    report.feasible_set_count = Some(sets.len());
    report
}
