use std::collections::BTreeSet;

use proptest::prelude::*;
use wgg_core::approx::{
    bounded_degree_solve, cover_and_pick, feasible_cover, is_feasible, matching_to_partition,
    palette_size, randomized_edge_coloring,
};
use wgg_core::decomp::{
    degeneracy_ordering, forest_cover_positive, forest_to_star_unions, greedy_coloring,
    heuristic_tree_decomposition, EdgePair,
};
use wgg_core::exact::{brute_force_opt, forest_exact, treewidth_exact};
use wgg_core::io::{parse_graph, write_graph};
use wgg_core::{
    coalition_value, normalize_graph, positive_weight_sum, structure_value, CoalitionStructure,
    Weight, WeightedGraph,
};

fn raw_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize, i64)>)> {
    (1..=max_n).prop_flat_map(|n| {
        // offset in 1..n keeps endpoints distinct
        let edge = (0..n, 1..n.max(2), -5i64..=5).prop_map(move |(a, d, w)| (a, (a + d) % n, w));
        let max_m = if n > 1 { n * 2 } else { 0 };
        (Just(n), prop::collection::vec(edge, 0..=max_m))
    })
}

fn build(n: usize, raw: &[(usize, usize, i64)]) -> WeightedGraph {
    normalize_graph(n, raw.iter().map(|&(a, b, w)| (a, b, Weight::from(w)))).unwrap()
}

fn graph(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    raw_graph(max_n).prop_map(|(n, raw)| build(n, &raw))
}

fn labels_for(g: &WeightedGraph) -> impl Strategy<Value = Vec<usize>> {
    let n = g.n();
    prop::collection::vec(0..n.max(1), n)
}

fn has_cycle(edges: &[EdgePair], n: usize) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return true;
        }
        parent[ra] = rb;
    }
    false
}

// no cycle and no path of three edges: every edge touches a degree-1 vertex
fn star_criterion(edges: &[EdgePair], n: usize) -> bool {
    let mut deg = vec![0; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    !has_cycle(edges, n) && edges.iter().all(|&(a, b)| deg[a] == 1 || deg[b] == 1)
}

fn positive_set(g: &WeightedGraph) -> BTreeSet<EdgePair> {
    g.positive_edges().map(|e| e.key()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalize_is_idempotent((n, raw) in raw_graph(10)) {
        let g = build(n, &raw);
        let again = normalize_graph(n, g.raw_edges()).unwrap();
        prop_assert_eq!(again, g);
    }

    #[test]
    fn text_format_is_a_fixed_point(g in graph(10)) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(write_graph(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn no_structure_beats_positive_sum((g, labels) in graph(10).prop_flat_map(|g| {
        let l = labels_for(&g);
        (Just(g), l)
    })) {
        let cs = CoalitionStructure::from_labels(&labels);
        let v = structure_value(&g, &cs).unwrap();
        prop_assert!(v <= positive_weight_sum(&g));
        // value is the sum of coalition values
        let by_parts: Weight = cs.coalitions().iter().map(|c| coalition_value(&g, c)).sum();
        prop_assert_eq!(v, by_parts);
    }

    #[test]
    fn exact_solvers_agree(g in graph(9)) {
        let brute = brute_force_opt(&g).unwrap();
        prop_assert!(!brute.value.is_negative());
        prop_assert_eq!(structure_value(&g, &brute.structure).unwrap(), brute.value.clone());
        let td = heuristic_tree_decomposition(&g);
        prop_assert!(td.validate(&g).is_ok());
        prop_assert_eq!(&treewidth_exact(&g, &td).unwrap().value, &brute.value);
        if g.is_forest() {
            let f = forest_exact(&g).unwrap();
            prop_assert_eq!(&f.value, &brute.value);
            prop_assert_eq!(f.value, positive_weight_sum(&g));
        }
    }

    #[test]
    fn decomposition_invariants(g in graph(14)) {
        let ord = degeneracy_ordering(&g);
        prop_assert!(ord.residual.iter().all(|&r| r <= ord.d));
        let col = greedy_coloring(&g, &ord);
        prop_assert!(g.edges().iter().all(|e| col.color[e.u] != col.color[e.v]));
        prop_assert!(col.num_colors <= ord.d + 1);

        let cover = forest_cover_positive(&g);
        let mut seen = BTreeSet::new();
        for class in &cover.classes {
            prop_assert!(!has_cycle(class, g.n()));
            for &e in class {
                prop_assert!(seen.insert(e), "edge {:?} in two classes", e);
            }
            let (blue, red) = forest_to_star_unions(class).unwrap();
            prop_assert!(star_criterion(&blue.edges(), g.n()));
            prop_assert!(star_criterion(&red.edges(), g.n()));
            let mut both: Vec<_> = blue.edges().into_iter().chain(red.edges()).collect();
            both.sort_unstable();
            prop_assert_eq!(&both, class);
        }
        prop_assert_eq!(seen, positive_set(&g));
        prop_assert!(cover.classes.len() <= cover.positive_degeneracy);
    }

    #[test]
    fn cover_sets_are_feasible_and_complete(g in graph(12)) {
        let sets = feasible_cover(&g);
        let mut union = BTreeSet::new();
        for s in &sets {
            prop_assert!(is_feasible(&g, &s.edges).unwrap().is_some());
            prop_assert!(s.achieved_by_partition(&g));
            union.extend(s.edges.iter().copied());
        }
        prop_assert_eq!(union, positive_set(&g));

        let r = cover_and_pick(&g);
        prop_assert_eq!(r.feasible_set_count, Some(sets.len()));
        prop_assert!(r.meets_guarantee());
        if g.n() <= 10 && !sets.is_empty() {
            let opt = brute_force_opt(&g).unwrap().value;
            prop_assert!(r.value >= opt.div_int(sets.len()));
        }
    }

    #[test]
    fn edge_coloring_is_a_matching_cover(g in graph(16), seed in any::<u64>(), eps in 1i64..=4) {
        let eps = Weight::new(eps, 4).unwrap();
        let c = randomized_edge_coloring(&g, &eps, seed).unwrap();
        prop_assert!(c.is_proper(g.n()));
        prop_assert_eq!(c.palette, palette_size(&eps, g.max_positive_degree()).unwrap());
        let mut union = BTreeSet::new();
        for class in c.classes() {
            let m = matching_to_partition(&g, &class).unwrap();
            prop_assert!(m.achieved_by_partition(&g));
            union.extend(class);
        }
        prop_assert_eq!(union, positive_set(&g));

        let a = bounded_degree_solve(&g, &eps, seed).unwrap();
        let b = bounded_degree_solve(&g, &eps, seed).unwrap();
        prop_assert_eq!(a.without_timing(), b.without_timing());
        prop_assert!(a.meets_guarantee());
    }

    #[test]
    fn weights_roundtrip_through_text(p in -10_000i64..10_000, q in 1i64..500) {
        let w = Weight::new(p, q).unwrap();
        prop_assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
    }
}
